#pragma once

#include <optional>
#include <vector>

#include "tropfan/lattice.hpp"

namespace tropfan {

/// A point of R^{n+1} considered modulo the all-ones line. The canonical
/// representative of a class has coordinate 0 equal to 0.
struct QuotientVector {
    QVec c;

    int dim() const { return static_cast<int>(c.size()); }
    QuotientVector normalized() const;
    bool same_class(const QuotientVector& o) const;
    bool operator==(const QuotientVector& o) const { return c == o.c; }

    static QuotientVector zero(int n);
    static QuotientVector from_ints(const std::vector<long long>& v);
};

/// Incidence vector of a flat, as the canonical class representative with
/// entries divided by their gcd. The orientation of the generated ray is
/// preserved (so flats containing element 0 get nonpositive entries).
QuotientVector ray_vector(int ground, Subset f);

/// Membership in the tropical linear space: every circuit attains its
/// minimum at least twice. Requires loopfree input.
bool trop_contains(const Matroid& m, const QuotientVector& v);
/// Same test against a precomputed circuit list.
bool trop_contains(const std::vector<Subset>& circuits, const QuotientVector& v);

/// Ordered difference blocks of a maximal chain: I^1 = F_1, I^j = F_j \ F_{j-1}.
struct ChainPartition {
    std::vector<Subset> blocks;

    /// Unordered view, sorted lexicographically.
    std::vector<Subset> block_set() const;
};

/// Decompose a maximal chain; throws std::invalid_argument when the chain
/// is not a complete flag of flats of m.
ChainPartition chain_partition(const Matroid& m, const ChainOfFlats& chain);

/// Bases meeting every block of the partition exactly once.
std::vector<Subset> transversal_bases(const Matroid& m, const ChainPartition& part);

/// Closed-form membership in the cone of a maximal chain: v is constant on
/// each block and the block values weakly decrease. The strict variant asks
/// for strictly decreasing values (relative interior).
bool chain_cone_contains(const ChainPartition& part, const QuotientVector& v);
bool chain_cone_contains_interior(const ChainPartition& part, const QuotientVector& v);

/// Reduced row echelon form of the ray generators together with the
/// all-ones vector; spans are equal iff the forms compare equal.
struct SpanCanonicalForm {
    QMat rows;

    bool operator==(const SpanCanonicalForm& o) const { return rows == o.rows; }
    bool operator<(const SpanCanonicalForm& o) const;
    int dim() const { return static_cast<int>(rows.size()); }
};

SpanCanonicalForm cone_span(int ground, const std::vector<Subset>& generator_flats);

/// Sum of the ray generators (the full ground set contributes lineality and
/// is skipped), returned as the canonical class representative.
QuotientVector interior_point(int ground, const std::vector<Subset>& generator_flats);

struct BergmanCone;
/// Deterministic interior point of a grouped cone: the ray sum of its
/// lexicographically first member chain.
QuotientVector interior_point(int ground, const BergmanCone& cone);

/// Simplicial fan from nested sets: one cone per nested set, spanned by the
/// rays of its members plus the lineality line.
struct SimplicialFan {
    int ground = 0;
    int lineality_dim = 0;
    std::vector<Subset> ray_flats;           // lex sorted, full set excluded
    std::vector<QuotientVector> rays;        // parallel to ray_flats
    std::vector<std::vector<int>> max_cones; // sorted ray-index lists, lex sorted

    std::vector<Subset> cone_flats(int cone) const;
    bool operator==(const SimplicialFan& o) const {
        return ground == o.ground && lineality_dim == o.lineality_dim &&
               ray_flats == o.ray_flats && max_cones == o.max_cones;
    }
};

SimplicialFan nested_fan(const Matroid& m, const LatticeOfFlats& lat, const BuildingSet& g);
/// Nested fan of the maximal building set; maximal cones are the maximal
/// chains of flats.
SimplicialFan fine_subdivision(const Matroid& m, const LatticeOfFlats& lat);

/// One maximal cone of the Bergman fan: the union of the cones of all
/// maximal chains sharing a transversal-basis family. The union is convex;
/// membership tests run through the member chains.
struct BergmanCone {
    std::vector<ChainOfFlats> chains;          // lex sorted
    std::vector<ChainPartition> partitions;    // parallel to chains
    std::vector<Subset> bases;                 // shared transversal family, lex
    std::vector<Subset> partition_sets;        // shared unordered block set, lex
    SpanCanonicalForm span;
    std::vector<int> ray_indices;              // extreme rays, fan-level indices

    bool contains(const QuotientVector& v) const;
};

struct BergmanFan {
    int ground = 0;
    int lineality_dim = 1;
    std::vector<Subset> ray_flats;       // extreme rays of the fan, lex
    std::vector<QuotientVector> rays;
    std::vector<BergmanCone> cones;      // sorted by first member chain

    bool contains(const QuotientVector& v) const;
    /// Index of the unique maximal cone whose relative interior holds v,
    /// identified by matching the degeneration basis family. Empty when v
    /// sits on a boundary or outside the support.
    std::optional<int> locate(const Matroid& m, const QuotientVector& v) const;
};

/// Chain-grouping construction: group the maximal chains by transversal
/// basis family; each group is one maximal cone. During construction every
/// member chain is cross-checked against the degeneration matroid of its
/// interior point. Requires loopfree, connected, essential input.
BergmanFan bergman_fan(const Matroid& m);
BergmanFan bergman_fan(const Matroid& m, const LatticeOfFlats& lat);

/// Vertices e_B of the matroid polytope, one 0/1 vector per basis.
std::vector<std::vector<int>> matroid_polytope_vertices(const Matroid& m);
/// Dimension of the matroid polytope (rank of the affine span); equals
/// ground size minus the number of connected components.
int polytope_dim(const Matroid& m);

/// Matroid of the face of the matroid polytope on which w is maximized:
/// bases are the argmax of <w, e_B>.
Matroid degeneration_matroid(const Matroid& m, const QuotientVector& w);

} // namespace tropfan
