#pragma once

#include <optional>
#include <vector>

#include "tropfan/verify.hpp"

namespace tropfan {

/// Integer linear map on R^{n+1} that descends to the quotient modulo the
/// all-ones line, i.e. A·1 = c·1 for an integer c. Vectors are columns and
/// the map acts as v -> A v.
struct IntegerLinearMap {
    IMat a;
    long long scale_on_ones = 1;

    int dim() const { return static_cast<int>(a.size()); }
};

/// The scale c with A·1 = c·1, or nullopt when A does not descend.
std::optional<long long> quotient_descent_scale(const IMat& a);

/// Validating constructor; throws std::invalid_argument when the matrix is
/// not square or does not descend to the quotient.
IntegerLinearMap make_integer_map(IMat a);

/// Matrix of the coordinate permutation e_i -> e_{perm(i)}.
IntegerLinearMap permutation_map(const std::vector<int>& perm);

/// Adapter from an n x n matrix acting on the chart coordinates
/// (v_1 - v_0, ..., v_n - v_0) to the full (n+1) x (n+1) map on the
/// quotient (the lifted matrix has zero row 0 and scale 0).
IntegerLinearMap from_chart_matrix(const IMat& chart);

QuotientVector apply_map(const IntegerLinearMap& map, const QuotientVector& v);

bool is_matroid_automorphism(const Matroid& m, const std::vector<int>& perm);

struct ConeCompatibility {
    int source = 0;
    std::optional<int> target;      // empty on failure
    std::vector<Witness> witnesses; // failure evidence
};

struct CompatibilityReport {
    bool pass = false;
    bool invertible = false;   // det != 0
    bool unimodular = false;   // |det| == 1
    Rat det;
    std::vector<ConeCompatibility> cones;
};

/// For each maximal Bergman cone, map all chain generators and intersect
/// the sets of maximal cones containing the images; a nonempty intersection
/// exhibits a target cone, convexity does the rest. Failures record either
/// a generator image outside the support or the absence of a common target.
CompatibilityReport check_fan_compatibility(const Matroid& m, const BergmanFan& fan,
                                            const IntegerLinearMap& map);
CompatibilityReport check_fan_compatibility(const Matroid& m, const IntegerLinearMap& map);

/// Pass iff the image of every ray of the fine subdivision lies in the
/// tropical linear space and the fan-compatibility check succeeds.
VerificationReport maps_into_trop(const Matroid& m, const IntegerLinearMap& map);
VerificationReport maps_into_trop(const Matroid& m, const BergmanFan& fan, const IntegerLinearMap& map);

} // namespace tropfan
