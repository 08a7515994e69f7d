#include "tropfan/fans.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tropfan {

QuotientVector QuotientVector::normalized() const {
    QuotientVector out = *this;
    if (out.c.empty()) return out;
    Rat base = out.c.front();
    for (Rat& x : out.c) x = x - base;
    return out;
}

bool QuotientVector::same_class(const QuotientVector& o) const {
    return normalized() == o.normalized();
}

QuotientVector QuotientVector::zero(int n) {
    return QuotientVector{QVec(static_cast<std::size_t>(n), Rat(0))};
}

QuotientVector QuotientVector::from_ints(const std::vector<long long>& v) {
    QuotientVector out;
    out.c.reserve(v.size());
    for (long long x : v) out.c.emplace_back(x);
    return out;
}

QuotientVector ray_vector(int ground, Subset f) {
    QuotientVector v = QuotientVector::zero(ground);
    for (int e : f.elements()) v.c[static_cast<std::size_t>(e)] = Rat(1);
    v = v.normalized();
    // Entries are 0/±1 after normalization, so dividing by the gcd is a
    // no-op; the orientation of the ray is kept as generated.
    return v;
}

bool trop_contains(const std::vector<Subset>& circuits, const QuotientVector& v) {
    for (const Subset& c : circuits) {
        bool have = false;
        Rat min;
        int attained = 0;
        for (int e : c.elements()) {
            const Rat& x = v.c[static_cast<std::size_t>(e)];
            if (!have || x < min) {
                min = x;
                attained = 1;
                have = true;
            } else if (x == min) {
                ++attained;
            }
        }
        if (attained < 2) return false;
    }
    return true;
}

bool trop_contains(const Matroid& m, const QuotientVector& v) {
    if (!m.is_loopfree())
        throw hypothesis_error("matroid has loops " + m.loops().str() + "; tropical membership needs a loopfree matroid");
    if (v.dim() != m.ground_size()) throw std::invalid_argument("vector dimension mismatch");
    return trop_contains(m.circuits(), v);
}

std::vector<Subset> ChainPartition::block_set() const {
    std::vector<Subset> s = blocks;
    std::sort(s.begin(), s.end());
    return s;
}

ChainPartition chain_partition(const Matroid& m, const ChainOfFlats& chain) {
    if (static_cast<int>(chain.flats.size()) != m.rank())
        throw std::invalid_argument("chain is not maximal: expected " + std::to_string(m.rank()) + " flats");
    Subset prev;
    ChainPartition part;
    for (std::size_t i = 0; i < chain.flats.size(); ++i) {
        Subset f = chain.flats[i];
        if (!prev.subset_of(f) || prev == f) throw std::invalid_argument("chain is not strictly increasing");
        if (m.closure(f) != f) throw std::invalid_argument(f.str() + " is not a flat");
        if (m.rank_of(f) != static_cast<int>(i) + 1) throw std::invalid_argument("chain skips a rank");
        part.blocks.push_back(f - prev);
        prev = f;
    }
    if (prev != m.ground_set()) throw std::invalid_argument("maximal chain must end at the full ground set");
    return part;
}

std::vector<Subset> transversal_bases(const Matroid& m, const ChainPartition& part) {
    Mask u = 0;
    for (const Subset& b : part.blocks) {
        if (b.empty()) throw std::invalid_argument("partition block is empty");
        if (u & b.mask()) throw std::invalid_argument("partition blocks overlap");
        u |= b.mask();
    }
    if (Subset(u) != m.ground_set() || static_cast<int>(part.blocks.size()) != m.rank())
        throw std::invalid_argument("blocks must partition the ground set into rank-many parts");
    std::vector<Subset> out;
    for (const Subset& b : m.bases()) {
        bool transversal = true;
        for (const Subset& block : part.blocks)
            if ((b & block).size() != 1) { transversal = false; break; }
        if (transversal) out.push_back(b);
    }
    return out;
}

namespace {

// Block values of v along the partition; nullopt when v is not constant on
// some block.
std::optional<QVec> block_values(const ChainPartition& part, const QuotientVector& v) {
    QVec vals;
    for (const Subset& block : part.blocks) {
        auto elems = block.elements();
        Rat x = v.c[static_cast<std::size_t>(elems.front())];
        for (int e : elems)
            if (v.c[static_cast<std::size_t>(e)] != x) return std::nullopt;
        vals.push_back(x);
    }
    return vals;
}

} // namespace

bool chain_cone_contains(const ChainPartition& part, const QuotientVector& v) {
    auto vals = block_values(part, v);
    if (!vals) return false;
    for (std::size_t i = 1; i < vals->size(); ++i)
        if ((*vals)[i - 1] < (*vals)[i]) return false;
    return true;
}

bool chain_cone_contains_interior(const ChainPartition& part, const QuotientVector& v) {
    auto vals = block_values(part, v);
    if (!vals) return false;
    for (std::size_t i = 1; i < vals->size(); ++i)
        if (!((*vals)[i] < (*vals)[i - 1])) return false;
    return true;
}

bool SpanCanonicalForm::operator<(const SpanCanonicalForm& o) const {
    return rows < o.rows;
}

SpanCanonicalForm cone_span(int ground, const std::vector<Subset>& generator_flats) {
    QMat mat;
    for (const Subset& f : generator_flats) {
        QVec row(static_cast<std::size_t>(ground), Rat(0));
        for (int e : f.elements()) row[static_cast<std::size_t>(e)] = Rat(1);
        mat.push_back(std::move(row));
    }
    mat.emplace_back(static_cast<std::size_t>(ground), Rat(1));  // the lineality direction
    return SpanCanonicalForm{q_rref(std::move(mat))};
}

QuotientVector interior_point(int ground, const std::vector<Subset>& generator_flats) {
    QuotientVector v = QuotientVector::zero(ground);
    Subset full = Subset::full(ground);
    for (const Subset& f : generator_flats) {
        if (f == full) continue;
        for (int e : f.elements()) v.c[static_cast<std::size_t>(e)] += Rat(1);
    }
    return v.normalized();
}

QuotientVector interior_point(int ground, const BergmanCone& cone) {
    return interior_point(ground, cone.chains.front().flats);
}

std::vector<Subset> SimplicialFan::cone_flats(int cone) const {
    std::vector<Subset> out;
    for (int r : max_cones[static_cast<std::size_t>(cone)]) out.push_back(ray_flats[static_cast<std::size_t>(r)]);
    return out;
}

namespace {

void require_fan_hypotheses(const Matroid& m, bool need_connected) {
    if (m.ground_size() < 1) throw hypothesis_error("fan construction needs a nonempty ground set");
    if (!m.essential_input())
        throw hypothesis_error("matrix input was not essential (row rank below row count); fans need an essential arrangement");
    if (!m.is_loopfree())
        throw hypothesis_error("matroid has loops " + m.loops().str() + "; fans need a loopfree matroid");
    if (need_connected && !m.is_connected()) {
        throw hypothesis_error("matroid is disconnected (κ = " + std::to_string(m.component_count()) +
                               "); the Bergman fan construction needs a connected matroid");
    }
}

} // namespace

SimplicialFan nested_fan(const Matroid& m, const LatticeOfFlats& lat, const BuildingSet& g) {
    require_fan_hypotheses(m, /*need_connected=*/false);
    auto check = is_building_set(lat, g.members);
    if (!check.ok) {
        throw std::invalid_argument("not a building set; interval of flat " +
                                    (check.witness ? check.witness->str() : std::string("?")) +
                                    " fails to factor");
    }

    SimplicialFan fan;
    fan.ground = m.ground_size();
    fan.lineality_dim = m.component_count();
    Subset full = m.ground_set();
    for (const Subset& f : g.members) {
        if (f == full) continue;
        fan.ray_flats.push_back(f);
    }
    std::sort(fan.ray_flats.begin(), fan.ray_flats.end());
    for (const Subset& f : fan.ray_flats) fan.rays.push_back(ray_vector(fan.ground, f));

    std::map<Mask, int> ray_index;
    for (std::size_t i = 0; i < fan.ray_flats.size(); ++i) ray_index[fan.ray_flats[i].mask()] = static_cast<int>(i);

    for (const NestedSet& s : maximal_nested_sets(lat, g)) {
        std::vector<int> cone;
        for (const Subset& f : s.members) {
            if (f == full) continue;
            cone.push_back(ray_index.at(f.mask()));
        }
        std::sort(cone.begin(), cone.end());
        fan.max_cones.push_back(std::move(cone));
    }
    std::sort(fan.max_cones.begin(), fan.max_cones.end());
    fan.max_cones.erase(std::unique(fan.max_cones.begin(), fan.max_cones.end()), fan.max_cones.end());

    // Purity: every maximal cone spans rank(M) - 1 dimensions past the
    // lineality line.
    for (const auto& cone : fan.max_cones) {
        std::vector<Subset> gens;
        for (int r : cone) gens.push_back(fan.ray_flats[static_cast<std::size_t>(r)]);
        if (cone_span(fan.ground, gens).dim() - 1 != m.rank() - 1)
            throw std::logic_error("nested fan is not pure of dimension rank - 1");
    }
    return fan;
}

SimplicialFan fine_subdivision(const Matroid& m, const LatticeOfFlats& lat) {
    return nested_fan(m, lat, max_building_set(lat));
}

bool BergmanCone::contains(const QuotientVector& v) const {
    for (const ChainPartition& part : partitions)
        if (chain_cone_contains(part, v)) return true;
    return false;
}

bool BergmanFan::contains(const QuotientVector& v) const {
    for (const BergmanCone& cone : cones)
        if (cone.contains(v)) return true;
    return false;
}

std::optional<int> BergmanFan::locate(const Matroid& m, const QuotientVector& v) const {
    std::vector<Subset> family = degeneration_matroid(m, v).bases();
    for (std::size_t i = 0; i < cones.size(); ++i)
        if (cones[i].bases == family) return static_cast<int>(i);
    return std::nullopt;
}

std::vector<std::vector<int>> matroid_polytope_vertices(const Matroid& m) {
    std::vector<std::vector<int>> out;
    for (const Subset& b : m.bases()) {
        std::vector<int> v(static_cast<std::size_t>(m.ground_size()), 0);
        for (int e : b.elements()) v[static_cast<std::size_t>(e)] = 1;
        out.push_back(std::move(v));
    }
    return out;
}

int polytope_dim(const Matroid& m) {
    const std::vector<Subset>& bases = m.bases();
    QMat diffs;
    for (std::size_t i = 1; i < bases.size(); ++i) {
        QVec row(static_cast<std::size_t>(m.ground_size()), Rat(0));
        for (int e : bases[i].elements()) row[static_cast<std::size_t>(e)] += Rat(1);
        for (int e : bases[0].elements()) row[static_cast<std::size_t>(e)] -= Rat(1);
        diffs.push_back(std::move(row));
    }
    int dim = diffs.empty() ? 0 : q_rank(std::move(diffs));
    int expected = m.ground_size() - m.component_count();
    if (dim != expected) {
        throw std::logic_error("matroid polytope dimension " + std::to_string(dim) +
                               " differs from ground - κ = " + std::to_string(expected));
    }
    return dim;
}

Matroid degeneration_matroid(const Matroid& m, const QuotientVector& w) {
    if (w.dim() != m.ground_size()) throw std::invalid_argument("vector dimension mismatch");
    bool have = false;
    Rat best;
    std::vector<Subset> arg;
    for (const Subset& b : m.bases()) {
        Rat value(0);
        for (int e : b.elements()) value += w.c[static_cast<std::size_t>(e)];
        if (!have || best < value) {
            best = value;
            arg.clear();
            have = true;
        }
        if (value == best) arg.push_back(b);
    }
    verify_basis_exchange(m.ground_size(), arg);
    return Matroid(m.ground_size(), std::move(arg));
}

BergmanFan bergman_fan(const Matroid& m) {
    return bergman_fan(m, flats_lattice(m));
}

BergmanFan bergman_fan(const Matroid& m, const LatticeOfFlats& lat) {
    require_fan_hypotheses(m, /*need_connected=*/true);

    BergmanFan fan;
    fan.ground = m.ground_size();
    fan.lineality_dim = 1;

    struct Entry {
        ChainOfFlats chain;
        ChainPartition part;
    };
    std::map<std::vector<Subset>, std::vector<Entry>> groups;  // keyed by transversal family
    for (const ChainOfFlats& chain : maximal_chains(m, lat)) {
        ChainPartition part = chain_partition(m, chain);
        std::vector<Subset> family = transversal_bases(m, part);
        // Max-face cross-check: the degeneration matroid of an interior
        // point must have exactly the transversal bases.
        QuotientVector p = interior_point(fan.ground, chain.flats);
        if (degeneration_matroid(m, p).bases() != family)
            throw std::logic_error("interior point of a chain does not maximize on its transversal face");
        groups[family].push_back(Entry{chain, std::move(part)});
    }

    for (auto& [family, entries] : groups) {
        std::sort(entries.begin(), entries.end(),
                  [](const Entry& a, const Entry& b) { return a.chain < b.chain; });
        BergmanCone cone;
        cone.bases = family;
        cone.partition_sets = entries.front().part.block_set();
        cone.span = cone_span(fan.ground, entries.front().chain.flats);
        for (Entry& e : entries) {
            if (e.part.block_set() != cone.partition_sets)
                throw std::logic_error("chains sharing a transversal family disagree on partition blocks");
            if (cone_span(fan.ground, e.chain.flats) != cone.span)
                throw std::logic_error("chains sharing a transversal family span different spaces");
            cone.chains.push_back(std::move(e.chain));
            cone.partitions.push_back(std::move(e.part));
        }
        fan.cones.push_back(std::move(cone));
    }
    std::sort(fan.cones.begin(), fan.cones.end(),
              [](const BergmanCone& a, const BergmanCone& b) { return a.chains.front() < b.chains.front(); });

    // Extreme rays of the fan: v_F spans a one-dimensional cone exactly when
    // the degeneration matroid at v_F has two connected components (the
    // dimension of a face's normal cone is the component count).
    Subset full = m.ground_set();
    for (const Subset& f : lat.flats) {
        if (f == lat.bottom() || f == full) continue;
        QuotientVector v = ray_vector(fan.ground, f);
        if (degeneration_matroid(m, v).component_count() == 2) fan.ray_flats.push_back(f);
    }
    std::sort(fan.ray_flats.begin(), fan.ray_flats.end());
    for (const Subset& f : fan.ray_flats) fan.rays.push_back(ray_vector(fan.ground, f));

    std::map<Mask, int> ray_index;
    for (std::size_t i = 0; i < fan.ray_flats.size(); ++i) ray_index[fan.ray_flats[i].mask()] = static_cast<int>(i);
    for (BergmanCone& cone : fan.cones) {
        std::vector<int> idx;
        for (const ChainOfFlats& chain : cone.chains) {
            for (const Subset& f : chain.flats) {
                auto it = ray_index.find(f.mask());
                if (it != ray_index.end()) idx.push_back(it->second);
            }
        }
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        cone.ray_indices = std::move(idx);
    }
    return fan;
}

} // namespace tropfan
