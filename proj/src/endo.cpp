#include "tropfan/endo.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropfan {

std::optional<long long> quotient_descent_scale(const IMat& a) {
    if (a.empty()) return std::nullopt;
    std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) return std::nullopt;
    long long c = 0;
    for (std::size_t i = 0; i < n; ++i) {
        long long s = 0;
        for (long long v : a[i]) s += v;
        if (i == 0) c = s;
        else if (s != c) return std::nullopt;
    }
    return c;
}

IntegerLinearMap make_integer_map(IMat a) {
    if (a.empty()) throw std::invalid_argument("map matrix is empty");
    std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("map matrix is not square");
    auto c = quotient_descent_scale(a);
    if (!c) {
        throw std::invalid_argument(
            "matrix does not descend to the quotient: A·1 is not proportional to the all-ones vector");
    }
    return IntegerLinearMap{std::move(a), *c};
}

IntegerLinearMap permutation_map(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
            throw std::invalid_argument("not a permutation of 0..n");
        seen[static_cast<std::size_t>(p)] = true;
    }
    IMat a(static_cast<std::size_t>(n), IVec(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])][static_cast<std::size_t>(i)] = 1;
    return IntegerLinearMap{std::move(a), 1};
}

IntegerLinearMap from_chart_matrix(const IMat& chart) {
    std::size_t n = chart.size();
    if (n == 0) throw std::invalid_argument("chart matrix is empty");
    for (const auto& row : chart)
        if (row.size() != n) throw std::invalid_argument("chart matrix is not square");
    // Lift an action on (v_1 - v_0, ..., v_n - v_0): row 0 vanishes and each
    // remaining row gets -rowsum in column 0, so A·1 = 0.
    IMat a(n + 1, IVec(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        long long rowsum = 0;
        for (std::size_t j = 0; j < n; ++j) {
            a[i + 1][j + 1] = chart[i][j];
            rowsum += chart[i][j];
        }
        a[i + 1][0] = -rowsum;
    }
    return IntegerLinearMap{std::move(a), 0};
}

QuotientVector apply_map(const IntegerLinearMap& map, const QuotientVector& v) {
    if (v.dim() != map.dim()) throw std::invalid_argument("vector dimension mismatch");
    QuotientVector out = QuotientVector::zero(map.dim());
    for (int i = 0; i < map.dim(); ++i) {
        Rat s(0);
        for (int j = 0; j < map.dim(); ++j)
            s += Rat(map.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) * v.c[static_cast<std::size_t>(j)];
        out.c[static_cast<std::size_t>(i)] = s;
    }
    return out.normalized();
}

bool is_matroid_automorphism(const Matroid& m, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != m.ground_size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<Subset> mapped;
    for (const Subset& b : m.bases()) {
        Mask mk = 0;
        for (int e : b.elements()) mk |= Mask{1} << perm[static_cast<std::size_t>(e)];
        mapped.push_back(Subset(mk));
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == m.bases();
}

CompatibilityReport check_fan_compatibility(const Matroid& m, const IntegerLinearMap& map) {
    return check_fan_compatibility(m, bergman_fan(m), map);
}

CompatibilityReport check_fan_compatibility(const Matroid& m, const BergmanFan& fan,
                                            const IntegerLinearMap& map) {
    if (map.dim() != m.ground_size()) throw std::invalid_argument("map dimension mismatch");
    CompatibilityReport report;

    QMat q(static_cast<std::size_t>(map.dim()));
    for (int i = 0; i < map.dim(); ++i)
        for (int j = 0; j < map.dim(); ++j)
            q[static_cast<std::size_t>(i)].emplace_back(map.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    report.det = q_det(std::move(q));
    report.invertible = !report.det.is_zero();
    report.unimodular = report.det == Rat(1) || report.det == Rat(-1);

    bool all_pass = true;
    for (std::size_t ci = 0; ci < fan.cones.size(); ++ci) {
        const BergmanCone& cone = fan.cones[ci];
        ConeCompatibility result;
        result.source = static_cast<int>(ci);

        // Distinct generators over all member chains, the full set excluded.
        std::vector<Subset> gens;
        for (const ChainOfFlats& chain : cone.chains)
            for (const Subset& f : chain.flats)
                if (f != m.ground_set()) gens.push_back(f);
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

        std::vector<int> common;
        bool first = true;
        bool failed = false;
        for (const Subset& f : gens) {
            QuotientVector image = apply_map(map, ray_vector(m.ground_size(), f));
            std::vector<int> holders;
            for (std::size_t cj = 0; cj < fan.cones.size(); ++cj)
                if (fan.cones[cj].contains(image)) holders.push_back(static_cast<int>(cj));

            std::vector<long long> raw;
            for (const Rat& x : image.c) raw.push_back(x.num());  // images of integer rays stay integral
            if (holders.empty()) {
                Witness w;
                w.kind = "generator-image-outside-support";
                w.families = {{f}};
                w.vectors = {raw};
                result.witnesses.push_back(std::move(w));
                failed = true;
                break;
            }
            if (first) {
                common = holders;
                first = false;
            } else {
                std::vector<int> next;
                std::set_intersection(common.begin(), common.end(), holders.begin(), holders.end(),
                                      std::back_inserter(next));
                common = std::move(next);
                if (common.empty()) {
                    Witness w;
                    w.kind = "generator-images-without-common-cone";
                    w.families = {gens};
                    w.vectors = {raw};
                    result.witnesses.push_back(std::move(w));
                    failed = true;
                    break;
                }
            }
        }
        if (!failed && !common.empty()) {
            result.target = common.front();
        } else if (!failed && first) {
            result.target = static_cast<int>(ci);  // no generators: the lineality cone maps to itself
        } else {
            all_pass = false;
        }
        report.cones.push_back(std::move(result));
    }
    report.pass = all_pass;
    return report;
}

VerificationReport maps_into_trop(const Matroid& m, const IntegerLinearMap& map) {
    return maps_into_trop(m, bergman_fan(m), map);
}

VerificationReport maps_into_trop(const Matroid& m, const BergmanFan& fan, const IntegerLinearMap& map) {
    if (!m.is_loopfree())
        throw hypothesis_error("matroid has loops " + m.loops().str() + "; the image check needs a loopfree matroid");
    if (!m.is_connected())
        throw hypothesis_error("matroid is disconnected (κ = " + std::to_string(m.component_count()) +
                               "); the image check needs a connected matroid");
    VerificationReport report;
    report.check = "maps-into-trop";
    LatticeOfFlats lat = flats_lattice(m);
    std::vector<Subset> circuits = m.circuits();

    long long rays_checked = 0;
    for (const Subset& f : lat.flats) {
        if (f == lat.bottom() || f == m.ground_set()) continue;
        ++rays_checked;
        QuotientVector image = apply_map(map, ray_vector(m.ground_size(), f));
        if (!trop_contains(circuits, image)) {
            Witness w;
            w.kind = "ray-image-outside-trop";
            w.families = {{f}};
            std::vector<long long> raw;
            for (const Rat& x : image.c) raw.push_back(x.num());
            w.vectors = {raw};
            report.witnesses.push_back(std::move(w));
        }
    }

    CompatibilityReport compat = check_fan_compatibility(m, fan, map);
    long long incompatible = 0;
    for (const ConeCompatibility& cone : compat.cones) {
        if (!cone.target) {
            ++incompatible;
            for (const Witness& w : cone.witnesses) report.witnesses.push_back(w);
        }
    }
    report.pass = report.witnesses.empty();
    report.stats = {{"rays_checked", rays_checked},
                    {"incompatible_cones", incompatible}};
    return report;
}

} // namespace tropfan
