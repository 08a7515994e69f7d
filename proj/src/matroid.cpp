#include "tropfan/matroid.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropfan {

namespace {

// Visit the k-subsets of the given elements in lexicographic order.
template <typename Fn>
void for_each_combination(const std::vector<int>& elems, int k, Fn&& fn) {
    int n = static_cast<int>(elems.size());
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Mask m = 0;
        for (int i : idx) m |= Mask{1} << elems[static_cast<std::size_t>(i)];
        fn(Subset(m));
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::vector<int> all_elements(int ground) {
    std::vector<int> v(static_cast<std::size_t>(ground));
    for (int i = 0; i < ground; ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

} // namespace

// Ground size 0 is reachable through minors only; constructors of input
// matroids enforce the size >= 1 invariant via validate_ground_size.
Matroid::Matroid(int ground, std::vector<Subset> bases) : ground_(ground), bases_(std::move(bases)) {
    if (ground_ < 0 || ground_ > kMaxGroundHard) throw std::invalid_argument("ground size out of range");
    if (bases_.empty()) throw std::invalid_argument("basis family must be nonempty");
    Subset full = Subset::full(ground_);
    rank_ = bases_.front().size();
    for (const Subset& b : bases_) {
        if (!b.subset_of(full)) throw std::invalid_argument("basis " + b.str() + " leaves the ground set");
        if (b.size() != rank_) {
            throw std::invalid_argument("bases of unequal sizes: " + bases_.front().str() + " and " + b.str());
        }
    }
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    for (const Subset& b : bases_) basis_set_.insert(b.mask());
}

int Matroid::rank_of(Subset s) const {
    if (!s.subset_of(ground_set())) throw std::invalid_argument("subset " + s.str() + " leaves the ground set");
    int best = 0;
    for (const Subset& b : bases_) best = std::max(best, (b & s).size());
    return best;
}

Subset Matroid::closure(Subset s) const {
    int r = rank_of(s);
    Subset out = s;
    for (int e = 0; e < ground_; ++e) {
        if (s.contains(e)) continue;
        if (rank_of(s.with(e)) == r) out = out.with(e);
    }
    return out;
}

std::vector<Subset> Matroid::circuits() const {
    std::vector<Subset> found;
    for (int k = 1; k <= rank_ + 1; ++k) {
        for_each_combination(all_elements(ground_), k, [&](Subset s) {
            for (const Subset& c : found)
                if (c.subset_of(s)) return;
            if (rank_of(s) < k) found.push_back(s);
        });
    }
    std::sort(found.begin(), found.end());
    return found;
}

Subset Matroid::loops() const {
    Mask in_some_basis = 0;
    for (const Subset& b : bases_) in_some_basis |= b.mask();
    return Subset(Subset::full(ground_).mask() & ~in_some_basis);
}

std::vector<Subset> Matroid::connected_components() const {
    UnionFind uf(ground_);
    for (const Subset& c : circuits()) {
        auto elems = c.elements();
        for (std::size_t i = 1; i < elems.size(); ++i) uf.unite(elems[0], elems[i]);
    }
    std::vector<Mask> comp(static_cast<std::size_t>(ground_), 0);
    for (int e = 0; e < ground_; ++e) comp[static_cast<std::size_t>(uf.find(e))] |= Mask{1} << e;
    std::vector<Subset> out;
    for (Mask m : comp)
        if (m) out.push_back(Subset(m));
    std::sort(out.begin(), out.end());
    return out;
}

Matroid Matroid::restriction(Subset x) const {
    if (!x.subset_of(ground_set())) throw std::invalid_argument("restriction set leaves the ground set");
    std::vector<int> labels = x.elements();
    int sub_rank = x.empty() ? 0 : rank_of(x);
    std::vector<int> positions(static_cast<std::size_t>(ground_), -1);
    for (std::size_t i = 0; i < labels.size(); ++i) positions[static_cast<std::size_t>(labels[i])] = static_cast<int>(i);

    std::vector<Subset> new_bases;
    if (sub_rank == 0) {
        new_bases.push_back(Subset());
    } else {
        for_each_combination(labels, sub_rank, [&](Subset s) {
            if (rank_of(s) != sub_rank) return;
            Mask m = 0;
            for (int e : s.elements()) m |= Mask{1} << positions[static_cast<std::size_t>(e)];
            new_bases.push_back(Subset(m));
        });
    }
    Matroid m(static_cast<int>(labels.size()), std::move(new_bases));
    m.labels_ = labels;
    return m;
}

Matroid Matroid::contraction(Subset x) const {
    if (!x.subset_of(ground_set())) throw std::invalid_argument("contraction set leaves the ground set");
    if (x.empty()) return *this;
    Subset rest = x.complement_in(ground_);
    std::vector<int> labels = rest.elements();

    // Lexicographically first basis of the restriction to x.
    int rx = rank_of(x);
    Subset bx;
    if (rx > 0) {
        bool got = false;
        for_each_combination(x.elements(), rx, [&](Subset s) {
            if (got || rank_of(s) != rx) return;
            bx = s;
            got = true;
        });
    }

    int new_rank = rank_ - rx;
    std::vector<int> positions(static_cast<std::size_t>(ground_), -1);
    for (std::size_t i = 0; i < labels.size(); ++i) positions[static_cast<std::size_t>(labels[i])] = static_cast<int>(i);

    std::vector<Subset> new_bases;
    if (new_rank == 0 || labels.empty()) {
        new_bases.push_back(Subset());
    } else {
        for_each_combination(labels, new_rank, [&](Subset s) {
            if (rank_of(s | bx) != new_rank + rx) return;
            Mask m = 0;
            for (int e : s.elements()) m |= Mask{1} << positions[static_cast<std::size_t>(e)];
            new_bases.push_back(Subset(m));
        });
    }
    Matroid m(static_cast<int>(labels.size()), std::move(new_bases));
    m.labels_ = labels;
    return m;
}

Matroid Matroid::minor_interval(Subset f, Subset g) const {
    if (!f.subset_of(g)) throw std::invalid_argument("interval minor needs nested flats F ⊆ G");
    if (!is_flat(f)) throw std::invalid_argument("F = " + f.str() + " is not a flat");
    if (!is_flat(g)) throw std::invalid_argument("G = " + g.str() + " is not a flat");

    Matroid contracted = contraction(f);
    // g \ f in the contraction's labels.
    Mask m = 0;
    const std::vector<int>& clabels = contracted.parent_labels();
    if (clabels.empty()) {
        m = (g - f).mask();
    } else {
        for (std::size_t i = 0; i < clabels.size(); ++i)
            if (g.contains(clabels[i])) m |= Mask{1} << i;
    }
    Matroid minor = contracted.restriction(Subset(m));

    // Compose the label maps so the minor points back at this matroid.
    std::vector<int> composed;
    for (int lbl : minor.parent_labels())
        composed.push_back(clabels.empty() ? lbl : clabels[static_cast<std::size_t>(lbl)]);
    minor.labels_ = std::move(composed);

    int expected = rank_of(g) - rank_of(f);
    if (minor.rank() != expected) {
        throw std::logic_error("interval minor rank " + std::to_string(minor.rank()) +
                               " differs from rank(G) - rank(F) = " + std::to_string(expected));
    }
    return minor;
}

void verify_basis_exchange(int ground, const std::vector<Subset>& bases) {
    std::unordered_set<Mask> set;
    for (const Subset& b : bases) set.insert(b.mask());
    (void)ground;
    for (const Subset& b1 : bases) {
        for (const Subset& b2 : bases) {
            for (int x : (b1 - b2).elements()) {
                bool ok = false;
                for (int y : (b2 - b1).elements()) {
                    Mask candidate = (b1.mask() & ~(Mask{1} << x)) | (Mask{1} << y);
                    if (set.count(candidate)) { ok = true; break; }
                }
                if (!ok) {
                    throw std::invalid_argument("basis exchange fails for " + b1.str() + ", " + b2.str() +
                                                " at element " + std::to_string(x));
                }
            }
        }
    }
}

void verify_circuit_axioms(const std::vector<Subset>& circuits) {
    for (const Subset& c : circuits)
        if (c.empty()) throw std::invalid_argument("the empty set cannot be a circuit");
    for (std::size_t i = 0; i < circuits.size(); ++i) {
        for (std::size_t j = 0; j < circuits.size(); ++j) {
            if (i == j) continue;
            if (circuits[i].subset_of(circuits[j])) {
                throw std::invalid_argument("circuit family is not an antichain: " + circuits[i].str() +
                                            " ⊆ " + circuits[j].str());
            }
        }
    }
    // Circuit elimination: for distinct circuits meeting in e, the union
    // minus e must contain a circuit.
    for (std::size_t i = 0; i < circuits.size(); ++i) {
        for (std::size_t j = i + 1; j < circuits.size(); ++j) {
            Subset meet = circuits[i] & circuits[j];
            for (int e : meet.elements()) {
                Subset probe = (circuits[i] | circuits[j]) - Subset::single(e);
                bool ok = false;
                for (const Subset& c : circuits)
                    if (c.subset_of(probe)) { ok = true; break; }
                if (!ok) {
                    throw std::invalid_argument("circuit elimination fails for " + circuits[i].str() + ", " +
                                                circuits[j].str() + " at element " + std::to_string(e));
                }
            }
        }
    }
}

Matroid from_matrix(const ExactMatrix& mat, int cap) {
    int n = mat.cols();
    if (n < 1) throw std::invalid_argument("matrix needs at least one column");
    validate_ground_size(n, cap);
    int rank = mat.rank();

    std::vector<Subset> bases;
    if (rank == 0) {
        bases.push_back(Subset());
    } else {
        for_each_combination(all_elements(n), rank, [&](Subset s) {
            if (mat.rank_of_columns(s.elements()) == rank) bases.push_back(s);
        });
    }
    Matroid m(n, std::move(bases));
    m.essential_ = (rank == mat.rows());
    return m;
}

Matroid from_bases(int ground, std::vector<Subset> bases, int cap) {
    validate_ground_size(ground, cap);
    if (bases.empty()) throw std::invalid_argument("basis family must be nonempty");
    verify_basis_exchange(ground, bases);
    return Matroid(ground, std::move(bases));
}

Matroid from_circuits(int ground, std::vector<Subset> circuits, int cap) {
    validate_ground_size(ground, cap);
    Subset full = Subset::full(ground);
    for (const Subset& c : circuits)
        if (!c.subset_of(full)) throw std::invalid_argument("circuit " + c.str() + " leaves the ground set");
    verify_circuit_axioms(circuits);

    // Independent sets avoid every circuit; bases are the largest ones.
    std::vector<Mask> cmasks;
    for (const Subset& c : circuits) cmasks.push_back(c.mask());
    int best = -1;
    std::vector<Subset> bases;
    Mask all = Subset::full(ground).mask();
    for (Mask m = 0;; ++m) {
        bool independent = true;
        for (Mask c : cmasks)
            if ((c & ~m) == 0) { independent = false; break; }
        if (independent) {
            int sz = std::popcount(m);
            if (sz > best) {
                best = sz;
                bases.clear();
            }
            if (sz == best) bases.push_back(Subset(m));
        }
        if (m == all) break;
    }
    verify_basis_exchange(ground, bases);
    return Matroid(ground, std::move(bases));
}

Matroid pg_matroid(int d, long long p, int cap) {
    if (d < 1) throw std::invalid_argument("projective dimension must be at least 1");
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");

    // Normalized representatives: first nonzero coordinate equal to 1,
    // listed lexicographically.
    std::vector<std::vector<long long>> points;
    std::vector<long long> v(static_cast<std::size_t>(d + 1), 0);
    while (true) {
        int i = d;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == p - 1) { v[static_cast<std::size_t>(i)] = 0; --i; }
        if (i < 0) break;
        ++v[static_cast<std::size_t>(i)];
        int lead = 0;
        while (v[static_cast<std::size_t>(lead)] == 0) ++lead;
        if (v[static_cast<std::size_t>(lead)] == 1) points.push_back(v);
    }
    std::sort(points.begin(), points.end());
    validate_ground_size(static_cast<int>(points.size()), cap);

    IMat entries(static_cast<std::size_t>(d + 1), IVec(points.size(), 0));
    for (std::size_t col = 0; col < points.size(); ++col)
        for (int row = 0; row <= d; ++row)
            entries[static_cast<std::size_t>(row)][col] = points[col][static_cast<std::size_t>(row)];
    return from_matrix(ExactMatrix::prime_field(p, std::move(entries)), cap);
}

Matroid braid_matroid(int n, int cap) {
    if (n < 2) throw std::invalid_argument("braid matroid needs n >= 2");
    int cols = n + n * (n - 1) / 2;
    validate_ground_size(cols, cap);
    QMat entries(static_cast<std::size_t>(n), QVec(static_cast<std::size_t>(cols), Rat(0)));
    for (int i = 0; i < n; ++i) entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Rat(1);
    int col = n;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] = Rat(1);
            entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(col)] = Rat(-1);
            ++col;
        }
    }
    return from_matrix(ExactMatrix::rationals(std::move(entries)), cap);
}

Matroid uniform_matroid(int r, int n, int cap) {
    validate_ground_size(n, cap);
    if (r < 0 || r > n) throw std::invalid_argument("uniform matroid needs 0 <= r <= n");
    std::vector<Subset> bases;
    if (r == 0) {
        bases.push_back(Subset());
    } else {
        for_each_combination(all_elements(n), r, [&](Subset s) { bases.push_back(s); });
    }
    return Matroid(n, std::move(bases));
}

} // namespace tropfan
