#include "tropfan/verify.hpp"

#include <algorithm>
#include <map>

namespace tropfan {

long long VerificationReport::stat(const std::string& key) const {
    for (const auto& [k, v] : stats)
        if (k == key) return v;
    return -1;
}

VerificationReport verify_distinct_spans(const Matroid& m) {
    VerificationReport report;
    report.check = "distinct-spans";
    BergmanFan fan = bergman_fan(m);

    std::map<SpanCanonicalForm, int> seen;
    long long collisions = 0;
    for (std::size_t i = 0; i < fan.cones.size(); ++i) {
        auto [it, fresh] = seen.emplace(fan.cones[i].span, static_cast<int>(i));
        if (!fresh) {
            ++collisions;
            Witness w;
            w.kind = "span-collision";
            w.indices = {it->second, static_cast<int>(i)};
            w.families = {fan.cones[static_cast<std::size_t>(it->second)].chains.front().flats,
                          fan.cones[i].chains.front().flats};
            report.witnesses.push_back(std::move(w));
        }
    }
    report.pass = collisions == 0;
    report.stats = {{"cones", static_cast<long long>(fan.cones.size())},
                    {"distinct_spans", static_cast<long long>(seen.size())},
                    {"collisions", collisions}};
    return report;
}

VerificationReport fs_criterion(const Matroid& m) {
    if (!m.is_loopfree())
        throw hypothesis_error("matroid has loops " + m.loops().str() + "; the minor criterion needs a loopfree matroid");
    VerificationReport report;
    report.check = "minor-connectivity";
    LatticeOfFlats lat = flats_lattice(m);

    long long pairs = 0;
    for (const Subset& g : lat.flats) {
        if (g == lat.bottom()) continue;
        if (!m.restriction(g).is_connected()) continue;
        for (const Subset& f : lat.flats) {
            if (!(f.subset_of(g) && f != g)) continue;
            ++pairs;
            if (!m.minor_interval(f, g).is_connected()) {
                Witness w;
                w.kind = "disconnected-minor";
                w.families = {{f, g}};
                report.witnesses.push_back(std::move(w));
            }
        }
    }
    report.pass = report.witnesses.empty();
    report.stats = {{"pairs_checked", pairs},
                    {"failures", static_cast<long long>(report.witnesses.size())}};
    return report;
}

VerificationReport fans_equal_min_vs_bergman(const Matroid& m) {
    VerificationReport report;
    report.check = "min-nested-vs-bergman";
    LatticeOfFlats lat = flats_lattice(m);
    BergmanFan bergman = bergman_fan(m, lat);
    SimplicialFan sigma_min = nested_fan(m, lat, min_building_set(m, lat));

    bool counts_match = sigma_min.max_cones.size() == bergman.cones.size();
    std::map<int, int> hit;  // bergman cone -> first nested cone landing in it
    bool injective = true;
    for (std::size_t i = 0; i < sigma_min.max_cones.size(); ++i) {
        std::vector<Subset> gens = sigma_min.cone_flats(static_cast<int>(i));
        QuotientVector p = interior_point(m.ground_size(), gens);
        std::optional<int> target = bergman.locate(m, p);
        if (!target) {
            Witness w;
            w.kind = "interior-point-unlocated";
            w.families = {gens};
            report.witnesses.push_back(std::move(w));
            injective = false;
            continue;
        }
        auto [it, fresh] = hit.emplace(*target, static_cast<int>(i));
        if (!fresh) {
            injective = false;
            Witness w;
            w.kind = "two-nested-cones-in-one-bergman-cone";
            w.indices = {it->second, static_cast<int>(i), *target};
            w.families = {sigma_min.cone_flats(it->second), gens,
                          bergman.cones[static_cast<std::size_t>(*target)].chains.front().flats};
            report.witnesses.push_back(std::move(w));
        }
    }
    report.pass = counts_match && injective;
    report.stats = {{"min_nested_cones", static_cast<long long>(sigma_min.max_cones.size())},
                    {"bergman_cones", static_cast<long long>(bergman.cones.size())}};
    return report;
}

VerificationReport support_consistency(const Matroid& m, int box, int samples, std::uint64_t seed) {
    if (box < 1 || samples < 0) throw std::invalid_argument("sampling needs box >= 1 and samples >= 0");
    VerificationReport report;
    report.check = "support-consistency";
    LatticeOfFlats lat = flats_lattice(m);
    BergmanFan bergman = bergman_fan(m, lat);
    std::vector<ChainPartition> chain_cones;
    for (const BergmanCone& cone : bergman.cones)
        for (const ChainPartition& part : cone.partitions) chain_cones.push_back(part);
    std::vector<Subset> circuits = m.circuits();

    Lcg rng(seed);
    long long agreements = 0;
    for (int s = 0; s < samples; ++s) {
        std::vector<long long> raw(static_cast<std::size_t>(m.ground_size()));
        for (long long& x : raw) x = rng.coordinate(box);
        QuotientVector v = QuotientVector::from_ints(raw).normalized();

        bool by_circuits = trop_contains(circuits, v);
        bool by_chains = false;
        for (const ChainPartition& part : chain_cones)
            if (chain_cone_contains(part, v)) { by_chains = true; break; }
        bool by_bergman = bergman.contains(v);

        if (by_circuits == by_chains && by_chains == by_bergman) {
            ++agreements;
        } else {
            Witness w;
            w.kind = "membership-disagreement";
            w.vectors = {raw};
            w.indices = {by_circuits ? 1 : 0, by_chains ? 1 : 0, by_bergman ? 1 : 0};
            report.witnesses.push_back(std::move(w));
        }
    }
    report.pass = report.witnesses.empty();
    report.stats = {{"samples", samples},
                    {"box", box},
                    {"seed", static_cast<long long>(seed)},
                    {"agreements", agreements}};
    return report;
}

VerificationReport verify_refinement(const Matroid& m) {
    return verify_refinement(m, bergman_fan(m));
}

VerificationReport verify_refinement(const Matroid& m, const BergmanFan& fan) {
    VerificationReport report;
    report.check = "refinement";
    LatticeOfFlats lat = flats_lattice(m);

    long long chains_checked = 0;
    for (const ChainOfFlats& chain : maximal_chains(m, lat)) {
        ++chains_checked;
        int containers = 0;
        int listed = 0;
        for (const BergmanCone& cone : fan.cones) {
            bool all_in = true;
            for (const Subset& f : chain.flats) {
                if (f == m.ground_set()) continue;
                if (!cone.contains(ray_vector(m.ground_size(), f))) { all_in = false; break; }
            }
            if (all_in) ++containers;
            if (std::find(cone.chains.begin(), cone.chains.end(), chain) != cone.chains.end()) ++listed;
        }
        if (containers != 1 || listed != 1) {
            Witness w;
            w.kind = "chain-cone-not-in-unique-bergman-cone";
            w.families = {chain.flats};
            w.indices = {containers, listed};
            report.witnesses.push_back(std::move(w));
        }
    }

    // Membership data must agree with the grouping rule: the interior point
    // of every member chain maximizes on the face spanned by the cone's
    // basis family. A chain filed under the wrong cone fails here.
    for (std::size_t i = 0; i < fan.cones.size(); ++i) {
        for (const ChainOfFlats& chain : fan.cones[i].chains) {
            QuotientVector p = interior_point(m.ground_size(), chain.flats);
            if (degeneration_matroid(m, p).bases() != fan.cones[i].bases) {
                Witness w;
                w.kind = "member-chain-family-mismatch";
                w.families = {chain.flats};
                w.indices = {static_cast<int>(i)};
                report.witnesses.push_back(std::move(w));
            }
        }
    }

    SimplicialFan sigma_min = nested_fan(m, lat, min_building_set(m, lat));
    long long nested_checked = 0;
    for (std::size_t i = 0; i < sigma_min.max_cones.size(); ++i) {
        ++nested_checked;
        std::vector<Subset> gens = sigma_min.cone_flats(static_cast<int>(i));
        bool found = false;
        for (const BergmanCone& cone : fan.cones) {
            bool all_in = true;
            for (const Subset& f : gens)
                if (!cone.contains(ray_vector(m.ground_size(), f))) { all_in = false; break; }
            if (all_in) { found = true; break; }
        }
        if (!found) {
            Witness w;
            w.kind = "nested-cone-outside-every-bergman-cone";
            w.families = {gens};
            report.witnesses.push_back(std::move(w));
        }
    }
    report.pass = report.witnesses.empty();
    report.stats = {{"chains_checked", chains_checked},
                    {"nested_cones_checked", nested_checked}};
    return report;
}

} // namespace tropfan
