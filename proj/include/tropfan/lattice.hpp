#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "tropfan/matroid.hpp"

namespace tropfan {

/// The lattice of flats, stored under inclusion of index subsets. Flats are
/// indexed rank-major, lexicographic within each rank; index 0 is the bottom
/// flat closure(∅).
struct LatticeOfFlats {
    int ground = 0;
    int top_rank = 0;                         // rank of the matroid
    std::vector<Subset> flats;                // rank-major, lex within rank
    std::vector<int> flat_rank;               // parallel to flats
    std::vector<std::vector<int>> by_rank;    // indices per rank 0..top_rank
    std::vector<std::pair<int, int>> covers;  // (lower, upper) index pairs
    std::unordered_map<Mask, int> index;

    Subset bottom() const { return flats.front(); }
    int top_index() const { return static_cast<int>(flats.size()) - 1; }
    int index_of(Subset f) const {
        auto it = index.find(f.mask());
        return it == index.end() ? -1 : it->second;
    }
    bool is_flat(Subset f) const { return index_of(f) >= 0; }
    /// Smallest flat containing s (the lattice join of the atoms below s).
    Subset join_closure(Subset s) const;
};

LatticeOfFlats flats_lattice(const Matroid& m);

/// A maximal flag of flats F_1 ⊊ ... ⊊ F_{r+1} = E (the bottom is omitted);
/// non-maximal chains drop intermediate ranks but stay strictly increasing.
struct ChainOfFlats {
    std::vector<Subset> flats;

    bool operator==(const ChainOfFlats& o) const { return flats == o.flats; }
    bool operator<(const ChainOfFlats& o) const { return flats < o.flats; }
};

/// All complete flags from rank 1 up to the full ground set, lexicographic.
/// Requires a loopfree matroid.
std::vector<ChainOfFlats> maximal_chains(const Matroid& m, const LatticeOfFlats& lat);

struct BuildingSet {
    std::vector<Subset> members;  // lex sorted, bottom excluded
    bool contains(Subset f) const;
};

struct BuildingSetCheck {
    bool ok = true;
    std::optional<Subset> witness;  // a flat whose interval fails to factor
};

/// Literal definition check: for every flat F the join map from the product
/// of intervals [0̂, X], X maximal in G below F, onto [0̂, F] must be an
/// order isomorphism. Enumerated explicitly.
BuildingSetCheck is_building_set(const LatticeOfFlats& lat, const std::vector<Subset>& members);

/// Flats with connected restriction (the unique minimal building set).
BuildingSet min_building_set(const Matroid& m, const LatticeOfFlats& lat);
/// All flats except the bottom (the unique maximal building set).
BuildingSet max_building_set(const LatticeOfFlats& lat);

struct NestedSet {
    std::vector<Subset> members;  // lex sorted
    bool operator==(const NestedSet& o) const { return members == o.members; }
    bool operator<(const NestedSet& o) const { return members < o.members; }
};

/// True iff every antichain of size >= 2 inside S has the closure of its
/// union outside G. Singletons and the empty set are nested vacuously.
bool is_nested(const LatticeOfFlats& lat, const BuildingSet& g, const std::vector<Subset>& s);

/// All nested sets for G (including ∅), depth-first in lexicographic order
/// with incremental antichain-closure pruning. Optional cardinality cutoff.
std::vector<NestedSet> nested_sets(const LatticeOfFlats& lat, const BuildingSet& g,
                                   std::optional<int> max_size = std::nullopt);

std::vector<NestedSet> maximal_nested_sets(const LatticeOfFlats& lat, const BuildingSet& g);

} // namespace tropfan
