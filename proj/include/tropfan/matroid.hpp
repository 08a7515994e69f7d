#pragma once

#include <optional>
#include <unordered_set>
#include <vector>

#include "tropfan/linalg.hpp"
#include "tropfan/subset.hpp"

namespace tropfan {

/// Matroid on ground set {0, ..., n}, represented by its full basis family.
/// Bases are kept in lexicographic order; rank-0 matroids (all loops) are
/// represented by the single empty basis. Values are immutable after
/// construction and safe to read concurrently.
class Matroid {
public:
    Matroid(int ground, std::vector<Subset> bases);

    int ground_size() const { return ground_; }
    Subset ground_set() const { return Subset::full(ground_); }
    int rank() const { return rank_; }
    const std::vector<Subset>& bases() const { return bases_; }
    bool is_basis(Subset s) const { return basis_set_.count(s.mask()) != 0; }

    /// Rank of a subset: max over bases of |B ∩ S|.
    int rank_of(Subset s) const;
    Subset closure(Subset s) const;
    bool is_flat(Subset s) const { return closure(s) == s; }
    std::vector<Subset> circuits() const;
    Subset loops() const;
    bool is_loopfree() const { return loops().empty(); }

    /// Components of the "lie in a common circuit" relation; loops and
    /// coloops are singleton components.
    std::vector<Subset> connected_components() const;
    int component_count() const { return static_cast<int>(connected_components().size()); }
    bool is_connected() const { return component_count() == 1; }

    Matroid restriction(Subset x) const;
    Matroid contraction(Subset x) const;
    /// Minor between nested flats: contract F, then restrict to G \ F.
    /// Rank is rank(G) - rank(F).
    Matroid minor_interval(Subset f, Subset g) const;

    /// Minors relabel to a dense 0..k-1 ground set; this maps new labels
    /// back to the labels of the matroid the minor was taken from. Empty
    /// for matroids built directly from input data.
    const std::vector<int>& parent_labels() const { return labels_; }

    /// False when the matroid came from a matrix without full row rank.
    /// Fan constructions refuse such input.
    bool essential_input() const { return essential_; }
    /// Copy with the essential metadata replaced (used by file round-trips).
    Matroid with_essential_input(bool essential) const {
        Matroid m = *this;
        m.essential_ = essential;
        return m;
    }

    bool same_bases(const Matroid& o) const {
        return ground_ == o.ground_ && bases_ == o.bases_;
    }

private:
    friend Matroid from_matrix(const ExactMatrix&, int);

    int ground_ = 0;
    int rank_ = 0;
    std::vector<Subset> bases_;
    std::unordered_set<Mask> basis_set_;
    std::vector<int> labels_;
    bool essential_ = true;
};

/// Throws std::invalid_argument naming an offending pair if the family
/// violates the basis-exchange axiom.
void verify_basis_exchange(int ground, const std::vector<Subset>& bases);

/// Throws if the circuit family violates antichain or circuit elimination.
void verify_circuit_axioms(const std::vector<Subset>& circuits);

/// Column matroid of an exact matrix: bases are the maximal independent
/// column sets. Columns keep their input order as labels 0..n.
Matroid from_matrix(const ExactMatrix& mat, int cap = kDefaultGroundCap);

Matroid from_bases(int ground, std::vector<Subset> bases, int cap = kDefaultGroundCap);

/// Matroid whose independent sets are the subsets containing no listed
/// circuit. The family must be an antichain satisfying circuit elimination.
Matroid from_circuits(int ground, std::vector<Subset> circuits, int cap = kDefaultGroundCap);

/// All points of the projective space PG(d, p) over a prime field, one
/// column per point, normalized so the first nonzero coordinate is 1 and
/// ordered lexicographically. Rank d+1.
Matroid pg_matroid(int d, long long p, int cap = kDefaultGroundCap);

/// Rank-n matroid of the essential braid arrangement: columns e_0..e_{n-1}
/// followed by e_i - e_j for i < j.
Matroid braid_matroid(int n, int cap = kDefaultGroundCap);

Matroid uniform_matroid(int r, int n, int cap = kDefaultGroundCap);

} // namespace tropfan
