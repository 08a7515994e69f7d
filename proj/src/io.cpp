#include "tropfan/io.hpp"

#include <stdexcept>

namespace tropfan {

namespace {

Json subset_to_json(const Subset& s) {
    Json arr = Json::array();
    for (int e : s.elements()) arr.push_back(e);
    return arr;
}

Subset subset_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("subset must be a JSON array of integers");
    std::vector<int> elems;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw std::invalid_argument("subset entries must be integers");
        elems.push_back(x.get<int>());
    }
    return Subset::from_sorted(elems);
}

long long int_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw std::invalid_argument(std::string("missing integer field \"") + key + "\"");
    return j[key].get<long long>();
}

std::string string_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw std::invalid_argument(std::string("missing string field \"") + key + "\"");
    return j[key].get<std::string>();
}

} // namespace

Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON input");
    return j;
}

Json matroid_to_json(const Matroid& m) {
    Json j;
    j["schema"] = "matroid/1";
    j["ground"] = m.ground_size();
    j["kind"] = "bases";
    if (!m.essential_input()) j["essential"] = false;
    Json data = Json::array();
    for (const Subset& b : m.bases()) data.push_back(subset_to_json(b));
    j["data"] = data;
    return j;
}

Matroid matroid_from_json(const Json& j, int cap) {
    if (!j.is_object()) throw std::invalid_argument("matroid file must be a JSON object");
    if (string_field(j, "schema") != "matroid/1") throw std::invalid_argument("unsupported matroid schema");
    int ground = static_cast<int>(int_field(j, "ground"));
    std::string kind = string_field(j, "kind");
    if (!j.contains("data")) throw std::invalid_argument("missing \"data\" field");
    const Json& data = j["data"];
    if (!data.is_array()) throw std::invalid_argument("\"data\" must be an array");

    if (kind == "matrix") {
        std::string field = string_field(j, "field");
        std::vector<std::vector<std::string>> cells;
        for (const auto& row : data) {
            if (!row.is_array()) throw std::invalid_argument("matrix rows must be arrays");
            std::vector<std::string> r;
            for (const auto& cell : row) {
                if (!cell.is_string()) throw std::invalid_argument("matrix entries must be strings");
                r.push_back(cell.get<std::string>());
            }
            cells.push_back(std::move(r));
        }
        ExactMatrix mat;
        if (field == "Q") {
            QMat q;
            for (const auto& row : cells) {
                QVec r;
                for (const auto& cell : row) r.push_back(Rat::parse(cell));
                q.push_back(std::move(r));
            }
            mat = ExactMatrix::rationals(std::move(q));
        } else if (field.size() > 4 && field.rfind("GF(", 0) == 0 && field.back() == ')') {
            long long p = 0;
            try {
                std::size_t pos = 0;
                std::string digits = field.substr(3, field.size() - 4);
                p = std::stoll(digits, &pos);
                if (pos != digits.size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed field name: \"" + field + "\"");
            }
            IMat residues;
            for (const auto& row : cells) {
                IVec r;
                for (const auto& cell : row) {
                    Rat v = Rat::parse(cell);
                    if (!v.is_integer()) throw std::invalid_argument("prime-field entries must be integer residues");
                    r.push_back(v.num());
                }
                residues.push_back(std::move(r));
            }
            mat = ExactMatrix::prime_field(p, std::move(residues));
        } else {
            throw std::invalid_argument("field must be \"Q\" or \"GF(p)\"");
        }
        if (mat.cols() != ground) throw std::invalid_argument("column count does not match \"ground\"");
        return from_matrix(mat, cap);
    }

    std::vector<Subset> sets;
    for (const auto& row : data) sets.push_back(subset_from_json(row));
    bool essential = true;
    if (j.contains("essential")) {
        if (!j["essential"].is_boolean()) throw std::invalid_argument("\"essential\" must be a boolean");
        essential = j["essential"].get<bool>();
    }
    if (kind == "bases") return from_bases(ground, std::move(sets), cap).with_essential_input(essential);
    if (kind == "circuits") return from_circuits(ground, std::move(sets), cap).with_essential_input(essential);
    throw std::invalid_argument("kind must be \"matrix\", \"bases\" or \"circuits\"");
}

Json subsets_to_json(const std::vector<Subset>& sets) {
    Json arr = Json::array();
    for (const Subset& s : sets) arr.push_back(subset_to_json(s));
    return arr;
}

Json chain_to_json(const ChainOfFlats& chain) {
    return subsets_to_json(chain.flats);
}

Json chains_to_json(const std::vector<ChainOfFlats>& chains) {
    Json arr = Json::array();
    for (const ChainOfFlats& c : chains) arr.push_back(chain_to_json(c));
    return arr;
}

Json nested_sets_to_json(const std::vector<NestedSet>& sets) {
    Json arr = Json::array();
    for (const NestedSet& s : sets) arr.push_back(subsets_to_json(s.members));
    return arr;
}

namespace {

Json rays_to_json(const std::vector<QuotientVector>& rays) {
    Json arr = Json::array();
    for (const QuotientVector& r : rays) {
        Json row = Json::array();
        for (const Rat& x : r.c) row.push_back(x.num());  // rays are integral by construction
        arr.push_back(row);
    }
    return arr;
}

} // namespace

Json fan_to_json(const SimplicialFan& fan) {
    Json j;
    j["schema"] = "fan/1";
    j["n"] = fan.ground;
    j["lineality_dim"] = fan.lineality_dim;
    j["rays"] = rays_to_json(fan.rays);
    Json cones = Json::array();
    for (const auto& cone : fan.max_cones) {
        Json c;
        c["rays"] = cone;
        cones.push_back(c);
    }
    j["cones"] = cones;
    return j;
}

Json fan_to_json(const BergmanFan& fan) {
    Json j;
    j["schema"] = "fan/1";
    j["n"] = fan.ground;
    j["lineality_dim"] = fan.lineality_dim;
    j["rays"] = rays_to_json(fan.rays);
    Json cones = Json::array();
    for (const BergmanCone& cone : fan.cones) {
        Json c;
        c["rays"] = cone.ray_indices;
        c["chains"] = chains_to_json(cone.chains);
        Json bases = Json::array();
        for (const Subset& b : cone.bases) bases.push_back(subset_to_json(b));
        c["bases"] = bases;
        cones.push_back(c);
    }
    j["cones"] = cones;
    return j;
}

namespace {

Json witness_to_json(const Witness& w) {
    Json j;
    j["kind"] = w.kind;
    if (!w.families.empty()) {
        Json fams = Json::array();
        for (const auto& family : w.families) fams.push_back(subsets_to_json(family));
        j["flats"] = fams;
    }
    if (!w.vectors.empty()) j["vectors"] = w.vectors;
    if (!w.indices.empty()) j["indices"] = w.indices;
    return j;
}

} // namespace

Json report_to_json(const VerificationReport& report) {
    Json j;
    j["schema"] = "report/1";
    j["check"] = report.check;
    j["verdict"] = report.pass ? "pass" : "fail";
    Json stats;
    for (const auto& [k, v] : report.stats) stats[k] = v;
    j["stats"] = stats;
    Json ws = Json::array();
    for (const Witness& w : report.witnesses) ws.push_back(witness_to_json(w));
    j["witnesses"] = ws;
    return j;
}

Json compatibility_to_json(const CompatibilityReport& report) {
    Json j;
    j["schema"] = "report/1";
    j["check"] = "fan-compatibility";
    j["verdict"] = report.pass ? "pass" : "fail";
    j["invertible"] = report.invertible;
    j["unimodular"] = report.unimodular;
    j["det"] = report.det.str();
    Json cones = Json::array();
    for (const ConeCompatibility& c : report.cones) {
        Json cj;
        cj["source"] = c.source;
        if (c.target) {
            cj["target"] = *c.target;
        } else {
            Json ws = Json::array();
            for (const Witness& w : c.witnesses) ws.push_back(witness_to_json(w));
            cj["witnesses"] = ws;
        }
        cones.push_back(cj);
    }
    j["cones"] = cones;
    return j;
}

IntegerLinearMap map_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("map file must be a JSON object");
    if (string_field(j, "schema") != "map/1") throw std::invalid_argument("unsupported map schema");
    int n = static_cast<int>(int_field(j, "n"));
    if (!j.contains("matrix") || !j["matrix"].is_array()) throw std::invalid_argument("missing \"matrix\" field");
    IMat a;
    for (const auto& row : j["matrix"]) {
        if (!row.is_array()) throw std::invalid_argument("matrix rows must be arrays");
        IVec r;
        for (const auto& cell : row) {
            if (!cell.is_number_integer()) throw std::invalid_argument("matrix entries must be integers");
            r.push_back(cell.get<long long>());
        }
        a.push_back(std::move(r));
    }
    if (static_cast<int>(a.size()) != n) throw std::invalid_argument("matrix size does not match \"n\"");
    // The translation datum, when present, does not affect any check here.
    return make_integer_map(std::move(a));
}

Json map_to_json(const IntegerLinearMap& map) {
    Json j;
    j["schema"] = "map/1";
    j["n"] = map.dim();
    j["matrix"] = map.a;
    return j;
}

} // namespace tropfan
