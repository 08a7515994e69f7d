#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tropfan/fans.hpp"

namespace tropfan {

/// Structured counterexample; every field is replayable through the
/// operation the check names.
struct Witness {
    std::string kind;
    std::vector<std::vector<Subset>> families;      // flat pairs, chains, nested sets
    std::vector<std::vector<long long>> vectors;    // sample points, ray images
    std::vector<int> indices;                       // cone indices / flags
};

struct VerificationReport {
    std::string check;
    bool pass = false;
    std::vector<Witness> witnesses;
    std::vector<std::pair<std::string, long long>> stats;

    long long stat(const std::string& key) const;
};

/// Distinct maximal Bergman cones must span distinct linear spaces.
VerificationReport verify_distinct_spans(const Matroid& m);

/// Minor-connectivity criterion: every interval minor M[F,G] with G a
/// connected flat must be connected. Witnesses are the failing pairs (F,G).
VerificationReport fs_criterion(const Matroid& m);

/// Independent comparison of the minimal nested set fan with the Bergman
/// fan: cone counts must match and interior points of distinct nested cones
/// must land in distinct Bergman cones.
VerificationReport fans_equal_min_vs_bergman(const Matroid& m);

/// Seeded sampling of integer vectors in [-box, box]^{n+1}; the circuit
/// test, fine-subdivision membership and Bergman membership must agree on
/// every sample.
VerificationReport support_consistency(const Matroid& m, int box, int samples, std::uint64_t seed);

/// Every maximal chain cone must sit generator-wise in exactly one Bergman
/// cone, and every minimal-nested-fan cone in at least one.
VerificationReport verify_refinement(const Matroid& m);
VerificationReport verify_refinement(const Matroid& m, const BergmanFan& fan);

/// Fixed linear congruential generator used by all sampling, so reports are
/// reproducible bit for bit:
///   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
/// Coordinates come from the top bits of each state.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }
    /// Uniform draw from [-box, box].
    long long coordinate(int box) {
        return static_cast<long long>((next() >> 33) % (2ULL * box + 1)) - box;
    }

private:
    std::uint64_t state_;
};

} // namespace tropfan
