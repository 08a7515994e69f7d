#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tropfan/io.hpp"

using namespace tropfan;

namespace {

// Exit codes: 0 pass/ok, 2 verification failed with witnesses, 1 usage or
// data error (malformed input, cap exceeded, violated hypothesis).
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFail = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Matroid load_matroid(const std::string& path, int cap) {
    return matroid_from_json(parse_json_text(read_input(path)), cap);
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

int emit_report(const VerificationReport& report, bool summary) {
    if (summary) {
        std::cout << report.check << ": " << (report.pass ? "pass" : "fail");
        for (const auto& [k, v] : report.stats) std::cout << " " << k << "=" << v;
        std::cout << "\n";
    } else {
        emit(report_to_json(report));
    }
    return report.pass ? kExitOk : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact matroid fan toolkit: flats, nested set fans, Bergman fans, span and endomorphism checks"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand name

    std::string input = "-";
    int cap = kDefaultGroundCap;
    std::string output_mode = "json";
    app.add_option("--input,-i", input, "matroid JSON file, '-' for stdin")->capture_default_str();
    app.add_option("--cap", cap, "ground set size cap")->capture_default_str();
    app.add_option("--output", output_mode, "output mode")->check(CLI::IsMember({"json", "summary"}))->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "generate a matroid: braid N | pg D P | uniform R N | file PATH");
    std::string gen_kind;
    std::vector<std::string> gen_args;
    gen->add_option("kind", gen_kind, "braid|pg|uniform|file")->required();
    gen->add_option("args", gen_args, "generator arguments");

    auto* circuits_cmd = app.add_subcommand("circuits", "list the circuits");
    auto* flats_cmd = app.add_subcommand("flats", "list the lattice of flats, rank-major");
    auto* chains_cmd = app.add_subcommand("chains", "list the maximal chains of flats");

    auto* nested_cmd = app.add_subcommand("nested", "list nested sets for a building set");
    std::string building = "min";
    int max_size = -1;
    nested_cmd->add_option("--building", building, "building set")->check(CLI::IsMember({"min", "max"}))->capture_default_str();
    nested_cmd->add_option("--max-size", max_size, "only nested sets up to this cardinality");

    auto* polytope_cmd = app.add_subcommand("polytope", "matroid polytope vertices and dimension");
    auto* fine_cmd = app.add_subcommand("fine-fan", "fine subdivision of the tropical linear space");
    auto* nested_fan_cmd = app.add_subcommand("nested-fan", "nested set fan for a building set");
    nested_fan_cmd->add_option("--building", building, "building set")->check(CLI::IsMember({"min", "max"}))->capture_default_str();
    auto* bergman_cmd = app.add_subcommand("bergman", "Bergman fan via chain grouping");

    auto* vspans = app.add_subcommand("verify-spans", "distinct maximal cones span distinct spaces");
    auto* vfs = app.add_subcommand("verify-fs", "interval minors of connected flats are connected");
    auto* vfans = app.add_subcommand("verify-fans", "minimal nested set fan equals the Bergman fan");
    auto* vrefine = app.add_subcommand("verify-refine", "chain cones refine the Bergman fan");

    auto* vsupport = app.add_subcommand("verify-support", "sampled membership agreement of circuit and fan tests");
    int box = 3;
    int samples = 1000;
    std::uint64_t seed = 1;
    vsupport->add_option("--box", box, "sample coordinates lie in [-box, box]")->capture_default_str();
    vsupport->add_option("--samples", samples, "number of samples")->capture_default_str();
    vsupport->add_option("--seed", seed, "RNG seed")->capture_default_str();

    auto* endo_cmd = app.add_subcommand("check-endo", "check an integer map against the Bergman fan");
    std::string matroid_path, map_path;
    endo_cmd->add_option("--matroid", matroid_path, "matroid JSON file")->required();
    endo_cmd->add_option("--map", map_path, "map JSON file")->required();

    CLI11_PARSE(app, argc, argv);
    bool summary = output_mode == "summary";

    try {
        if (gen->parsed()) {
            auto num = [&](std::size_t i) -> long long {
                if (i >= gen_args.size()) throw std::invalid_argument("missing generator argument");
                std::size_t pos = 0;
                long long v = std::stoll(gen_args[i], &pos);
                if (pos != gen_args[i].size()) throw std::invalid_argument("bad generator argument: " + gen_args[i]);
                return v;
            };
            Matroid m = [&]() {
                if (gen_kind == "braid") return braid_matroid(static_cast<int>(num(0)), cap);
                if (gen_kind == "pg") return pg_matroid(static_cast<int>(num(0)), num(1), cap);
                if (gen_kind == "uniform") return uniform_matroid(static_cast<int>(num(0)), static_cast<int>(num(1)), cap);
                if (gen_kind == "file") {
                    if (gen_args.empty()) throw std::invalid_argument("gen file needs a path");
                    return load_matroid(gen_args[0], cap);
                }
                throw std::invalid_argument("unknown generator: " + gen_kind);
            }();
            emit(matroid_to_json(m));
            return kExitOk;
        }

        if (circuits_cmd->parsed()) {
            emit(subsets_to_json(load_matroid(input, cap).circuits()));
            return kExitOk;
        }
        if (flats_cmd->parsed()) {
            Matroid m = load_matroid(input, cap);
            emit(subsets_to_json(flats_lattice(m).flats));
            return kExitOk;
        }
        if (chains_cmd->parsed()) {
            Matroid m = load_matroid(input, cap);
            emit(chains_to_json(maximal_chains(m, flats_lattice(m))));
            return kExitOk;
        }
        if (nested_cmd->parsed()) {
            Matroid m = load_matroid(input, cap);
            LatticeOfFlats lat = flats_lattice(m);
            if (!m.is_loopfree())
                throw hypothesis_error("matroid has loops " + m.loops().str() + "; nested sets need a loopfree matroid");
            BuildingSet g = building == "min" ? min_building_set(m, lat) : max_building_set(lat);
            std::optional<int> cutoff;
            if (max_size >= 0) cutoff = max_size;
            emit(nested_sets_to_json(nested_sets(lat, g, cutoff)));
            return kExitOk;
        }
        if (polytope_cmd->parsed()) {
            Matroid m = load_matroid(input, cap);
            Json j;
            j["schema"] = "polytope/1";
            j["dim"] = polytope_dim(m);
            j["vertices"] = matroid_polytope_vertices(m);
            emit(j);
            return kExitOk;
        }
        if (fine_cmd->parsed()) {
            Matroid m = load_matroid(input, cap);
            emit(fan_to_json(fine_subdivision(m, flats_lattice(m))));
            return kExitOk;
        }
        if (nested_fan_cmd->parsed()) {
            Matroid m = load_matroid(input, cap);
            LatticeOfFlats lat = flats_lattice(m);
            BuildingSet g = building == "min" ? min_building_set(m, lat) : max_building_set(lat);
            emit(fan_to_json(nested_fan(m, lat, g)));
            return kExitOk;
        }
        if (bergman_cmd->parsed()) {
            emit(fan_to_json(bergman_fan(load_matroid(input, cap))));
            return kExitOk;
        }

        if (vspans->parsed()) return emit_report(verify_distinct_spans(load_matroid(input, cap)), summary);
        if (vfs->parsed()) return emit_report(fs_criterion(load_matroid(input, cap)), summary);
        if (vfans->parsed()) return emit_report(fans_equal_min_vs_bergman(load_matroid(input, cap)), summary);
        if (vrefine->parsed()) return emit_report(verify_refinement(load_matroid(input, cap)), summary);
        if (vsupport->parsed())
            return emit_report(support_consistency(load_matroid(input, cap), box, samples, seed), summary);

        if (endo_cmd->parsed()) {
            Matroid m = load_matroid(matroid_path, cap);
            IntegerLinearMap map = map_from_json(parse_json_text(read_input(map_path)));
            BergmanFan fan = bergman_fan(m);
            VerificationReport into = maps_into_trop(m, fan, map);
            CompatibilityReport compat = check_fan_compatibility(m, fan, map);
            bool pass = into.pass && compat.pass;
            if (summary) {
                std::cout << "check-endo: " << (pass ? "pass" : "fail")
                          << " invertible=" << (compat.invertible ? 1 : 0)
                          << " unimodular=" << (compat.unimodular ? 1 : 0) << "\n";
            } else {
                Json j;
                j["schema"] = "report/1";
                j["check"] = "check-endo";
                j["verdict"] = pass ? "pass" : "fail";
                j["maps_into_trop"] = report_to_json(into);
                j["compatibility"] = compatibility_to_json(compat);
                emit(j);
            }
            return pass ? kExitOk : kExitFail;
        }
    } catch (const hypothesis_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    std::cerr << "error: no subcommand\n";
    return kExitError;
}
