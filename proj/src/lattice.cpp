#include "tropfan/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropfan {

Subset LatticeOfFlats::join_closure(Subset s) const {
    // Smallest flat containing s; flats are closed under intersection, so
    // the intersection of all flats above s is itself a flat.
    Subset out = flats.back();
    for (const Subset& f : flats)
        if (s.subset_of(f) && f.size() < out.size()) out = f;
    return out;
}

LatticeOfFlats flats_lattice(const Matroid& m) {
    LatticeOfFlats lat;
    lat.ground = m.ground_size();
    lat.top_rank = m.rank();

    std::vector<Subset> current{m.closure(Subset())};
    lat.by_rank.assign(static_cast<std::size_t>(lat.top_rank) + 1, {});
    for (int r = 0; r <= lat.top_rank; ++r) {
        std::sort(current.begin(), current.end());
        current.erase(std::unique(current.begin(), current.end()), current.end());
        std::vector<Subset> next;
        for (const Subset& f : current) {
            int idx = static_cast<int>(lat.flats.size());
            lat.flats.push_back(f);
            lat.flat_rank.push_back(r);
            lat.by_rank[static_cast<std::size_t>(r)].push_back(idx);
            lat.index.emplace(f.mask(), idx);
            if (r < lat.top_rank) {
                for (int e = 0; e < lat.ground; ++e) {
                    if (f.contains(e)) continue;
                    next.push_back(m.closure(f.with(e)));
                }
            }
        }
        current = std::move(next);
    }

    // Covering relations: in a geometric lattice the covers of F are exactly
    // the closures of F + e.
    for (int i = 0; i < static_cast<int>(lat.flats.size()); ++i) {
        int r = lat.flat_rank[static_cast<std::size_t>(i)];
        if (r == lat.top_rank) continue;
        std::vector<int> ups;
        for (int j : lat.by_rank[static_cast<std::size_t>(r) + 1])
            if (lat.flats[static_cast<std::size_t>(i)].subset_of(lat.flats[static_cast<std::size_t>(j)])) ups.push_back(j);
        for (int j : ups) lat.covers.emplace_back(i, j);
    }
    return lat;
}

std::vector<ChainOfFlats> maximal_chains(const Matroid& m, const LatticeOfFlats& lat) {
    if (!m.is_loopfree()) {
        throw hypothesis_error("matroid has loops " + m.loops().str() + "; maximal chains need a loopfree matroid");
    }
    // Upward adjacency by rank.
    std::vector<std::vector<int>> up(lat.flats.size());
    for (auto [lo, hi] : lat.covers) up[static_cast<std::size_t>(lo)].push_back(hi);

    std::vector<ChainOfFlats> out;
    std::vector<Subset> stack;
    auto dfs = [&](auto&& self, int idx) -> void {
        stack.push_back(lat.flats[static_cast<std::size_t>(idx)]);
        if (lat.flat_rank[static_cast<std::size_t>(idx)] == lat.top_rank) {
            out.push_back(ChainOfFlats{stack});
        } else {
            for (int j : up[static_cast<std::size_t>(idx)]) self(self, j);
        }
        stack.pop_back();
    };
    if (lat.top_rank >= 1)
        for (int a : lat.by_rank[1]) dfs(dfs, a);
    std::sort(out.begin(), out.end());
    return out;
}

bool BuildingSet::contains(Subset f) const {
    return std::binary_search(members.begin(), members.end(), f);
}

BuildingSetCheck is_building_set(const LatticeOfFlats& lat, const std::vector<Subset>& members) {
    for (const Subset& g : members) {
        if (!lat.is_flat(g)) throw std::invalid_argument(g.str() + " is not a flat");
        if (g == lat.bottom()) throw std::invalid_argument("building sets exclude the bottom flat");
    }

    for (const Subset& f : lat.flats) {
        // Maximal members of the building set below f.
        std::vector<Subset> below;
        for (const Subset& g : members)
            if (g.subset_of(f)) below.push_back(g);
        std::vector<Subset> maxima;
        for (const Subset& g : below) {
            bool dominated = false;
            for (const Subset& h : below)
                if (g != h && g.subset_of(h)) { dominated = true; break; }
            if (!dominated) maxima.push_back(g);
        }

        // Intervals [bottom, x] as flat lists.
        auto interval = [&](Subset top) {
            std::vector<Subset> iv;
            for (const Subset& x : lat.flats)
                if (x.subset_of(top)) iv.push_back(x);
            return iv;
        };
        std::vector<std::vector<Subset>> factors;
        std::size_t product_size = 1;
        for (const Subset& x : maxima) {
            factors.push_back(interval(x));
            product_size *= factors.back().size();
        }
        std::vector<Subset> target = interval(f);
        if (product_size != target.size()) return {false, f};

        // Enumerate the product; the join map must be an order isomorphism.
        std::vector<std::size_t> odo(factors.size(), 0);
        std::vector<std::vector<Subset>> tuples;
        std::vector<Subset> joins;
        while (true) {
            std::vector<Subset> tuple;
            Mask u = 0;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                tuple.push_back(factors[i][odo[i]]);
                u |= tuple.back().mask();
            }
            tuples.push_back(tuple);
            joins.push_back(lat.join_closure(Subset(u)));
            std::size_t i = 0;
            for (; i < factors.size(); ++i) {
                if (++odo[i] < factors[i].size()) break;
                odo[i] = 0;
            }
            if (i == factors.size()) break;
        }

        std::vector<Subset> sorted_joins = joins;
        std::sort(sorted_joins.begin(), sorted_joins.end());
        if (std::adjacent_find(sorted_joins.begin(), sorted_joins.end()) != sorted_joins.end())
            return {false, f};  // not injective
        for (const Subset& j : joins)
            if (!j.subset_of(f)) return {false, f};

        for (std::size_t a = 0; a < tuples.size(); ++a) {
            for (std::size_t b = 0; b < tuples.size(); ++b) {
                bool le = true;
                for (std::size_t i = 0; i < tuples[a].size(); ++i)
                    if (!tuples[a][i].subset_of(tuples[b][i])) { le = false; break; }
                if (le != joins[a].subset_of(joins[b])) return {false, f};
            }
        }
    }
    return {true, std::nullopt};
}

BuildingSet min_building_set(const Matroid& m, const LatticeOfFlats& lat) {
    BuildingSet g;
    for (const Subset& f : lat.flats) {
        if (f == lat.bottom()) continue;
        if (m.restriction(f).is_connected()) g.members.push_back(f);
    }
    std::sort(g.members.begin(), g.members.end());
    return g;
}

BuildingSet max_building_set(const LatticeOfFlats& lat) {
    BuildingSet g;
    for (const Subset& f : lat.flats)
        if (f != lat.bottom()) g.members.push_back(f);
    std::sort(g.members.begin(), g.members.end());
    return g;
}

namespace {

bool comparable(Subset a, Subset b) { return a.subset_of(b) || b.subset_of(a); }

// Closure of the union of every antichain {g} ∪ A with A drawn from the
// members of s incomparable to g must avoid the building set.
bool extension_stays_nested(const LatticeOfFlats& lat, const BuildingSet& g,
                            const std::vector<Subset>& s, Subset extra) {
    std::vector<Subset> incomp;
    for (const Subset& x : s)
        if (!comparable(x, extra)) incomp.push_back(x);

    std::vector<Subset> antichain;
    auto dfs = [&](auto&& self, std::size_t from, Mask acc) -> bool {
        if (!antichain.empty()) {
            if (g.contains(lat.join_closure(Subset(acc | extra.mask())))) return false;
        }
        for (std::size_t i = from; i < incomp.size(); ++i) {
            bool anti = true;
            for (const Subset& x : antichain)
                if (comparable(x, incomp[i])) { anti = false; break; }
            if (!anti) continue;
            antichain.push_back(incomp[i]);
            bool ok = self(self, i + 1, acc | incomp[i].mask());
            antichain.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    return dfs(dfs, 0, 0);
}

} // namespace

bool is_nested(const LatticeOfFlats& lat, const BuildingSet& g, const std::vector<Subset>& s) {
    for (const Subset& x : s)
        if (!g.contains(x)) throw std::invalid_argument(x.str() + " is not a member of the building set");
    std::vector<Subset> acc;
    for (const Subset& x : s) {
        if (!extension_stays_nested(lat, g, acc, x)) return false;
        acc.push_back(x);
    }
    return true;
}

std::vector<NestedSet> nested_sets(const LatticeOfFlats& lat, const BuildingSet& g,
                                   std::optional<int> max_size) {
    std::vector<NestedSet> out;
    std::vector<Subset> chosen;
    auto dfs = [&](auto&& self, std::size_t from) -> void {
        out.push_back(NestedSet{chosen});
        if (max_size && static_cast<int>(chosen.size()) >= *max_size) return;
        for (std::size_t i = from; i < g.members.size(); ++i) {
            if (!extension_stays_nested(lat, g, chosen, g.members[i])) continue;
            chosen.push_back(g.members[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

std::vector<NestedSet> maximal_nested_sets(const LatticeOfFlats& lat, const BuildingSet& g) {
    std::vector<NestedSet> all = nested_sets(lat, g);
    std::vector<NestedSet> out;
    for (const NestedSet& s : all) {
        bool extendable = false;
        for (const Subset& cand : g.members) {
            if (std::binary_search(s.members.begin(), s.members.end(), cand)) continue;
            if (extension_stays_nested(lat, g, s.members, cand)) { extendable = true; break; }
        }
        if (!extendable) out.push_back(s);
    }
    return out;
}

} // namespace tropfan
