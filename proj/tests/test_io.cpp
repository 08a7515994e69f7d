#include "corpus.hpp"
#include "doctest.h"

using namespace tropfan;

TEST_CASE("matroid files round-trip through the canonical basis form") {
    for (auto& [name, m] : corpus::theorem_corpus()) {
        INFO(name);
        Json j = matroid_to_json(m);
        Matroid back = matroid_from_json(j);
        CHECK(back.same_bases(m));
        CHECK(back.essential_input() == m.essential_input());
        CHECK(matroid_to_json(back).dump() == j.dump());
    }
}

TEST_CASE("matrix files over Q") {
    Json j = parse_json_text(R"json({
        "schema": "matroid/1", "ground": 6, "kind": "matrix", "field": "Q",
        "data": [["1","0","0","1","1","0"],
                 ["0","1","0","-1","0","1"],
                 ["0","0","1","0","-1","-1"]]})json");
    CHECK(matroid_from_json(j).same_bases(corpus::braid3()));

    Json fractional = parse_json_text(R"json({
        "schema": "matroid/1", "ground": 2, "kind": "matrix", "field": "Q",
        "data": [["1/2","2/3"]]})json");
    CHECK(matroid_from_json(fractional).rank() == 1);
}

TEST_CASE("matrix files over a prime field") {
    Json j = parse_json_text(R"json({
        "schema": "matroid/1", "ground": 7, "kind": "matrix", "field": "GF(2)",
        "data": [["0","0","0","1","1","1","1"],
                 ["0","1","1","0","0","1","1"],
                 ["1","0","1","0","1","0","1"]]})json");
    CHECK(matroid_from_json(j).same_bases(corpus::fano()));

    Json bad_field = j;
    bad_field["field"] = "GF(6)";
    CHECK_THROWS_AS(matroid_from_json(bad_field), std::invalid_argument);
    Json out_of_range = j;
    out_of_range["data"][0][0] = "2";
    CHECK_THROWS_AS(matroid_from_json(out_of_range), std::invalid_argument);
}

TEST_CASE("non-canonical input is rejected") {
    Json j = parse_json_text(R"json({
        "schema": "matroid/1", "ground": 2, "kind": "matrix", "field": "Q",
        "data": [["2/4","1"]]})json");
    CHECK_THROWS_AS(matroid_from_json(j), std::invalid_argument);

    Json unsorted = parse_json_text(R"json({
        "schema": "matroid/1", "ground": 3, "kind": "bases", "data": [[1,0],[0,2]]})json");
    CHECK_THROWS_AS(matroid_from_json(unsorted), std::invalid_argument);

    Json bad_schema = parse_json_text(R"json({
        "schema": "matroid/2", "ground": 3, "kind": "bases", "data": [[0,1]]})json");
    CHECK_THROWS_AS(matroid_from_json(bad_schema), std::invalid_argument);

    CHECK_THROWS_AS(parse_json_text("not json"), std::invalid_argument);
}

TEST_CASE("circuit files") {
    Json j = parse_json_text(R"json({
        "schema": "matroid/1", "ground": 3, "kind": "circuits", "data": [[0,1]]})json");
    Matroid m = matroid_from_json(j);
    CHECK(m.rank() == 2);
    CHECK(m.circuits() == std::vector<Subset>{Subset::of({0, 1})});
}

TEST_CASE("the essential flag survives a round-trip") {
    Matroid nonessential = from_matrix(ExactMatrix::rationals({{Rat(1), Rat(1)}, {Rat(0), Rat(0)}}));
    CHECK(!nonessential.essential_input());
    Json j = matroid_to_json(nonessential);
    CHECK(j.contains("essential"));
    Matroid back = matroid_from_json(j);
    CHECK(!back.essential_input());
}

TEST_CASE("the ground cap applies to parsed files") {
    Json j = matroid_to_json(uniform_matroid(2, 10, 12));
    CHECK_THROWS_AS(matroid_from_json(j, 8), std::invalid_argument);
    CHECK_NOTHROW(matroid_from_json(j, 12));
}

TEST_CASE("fan files re-parse to the same bytes") {
    Matroid m = corpus::braid3();
    LatticeOfFlats lat = flats_lattice(m);

    Json fine = fan_to_json(fine_subdivision(m, lat));
    CHECK(parse_json_text(fine.dump()).dump() == fine.dump());
    CHECK(fine["cones"].size() == 18);
    CHECK(fine["rays"].size() == 13);
    CHECK(fine["lineality_dim"] == 1);

    Json grouped = fan_to_json(bergman_fan(m, lat));
    CHECK(parse_json_text(grouped.dump()).dump() == grouped.dump());
    CHECK(grouped["cones"].size() == 15);
    CHECK(grouped["rays"].size() == 10);
    for (const auto& cone : grouped["cones"]) {
        CHECK(cone.contains("rays"));
        CHECK(cone.contains("chains"));
        CHECK(cone.contains("bases"));
    }
}

TEST_CASE("map files") {
    Json j = parse_json_text(R"json({
        "schema": "map/1", "n": 3,
        "matrix": [[0,1,0],[1,0,0],[0,0,1]],
        "lambda": {"anything": ["goes", 1]}})json");
    IntegerLinearMap map = map_from_json(j);
    CHECK(map.dim() == 3);
    CHECK(map.scale_on_ones == 1);
    CHECK(map_to_json(map)["matrix"] == j["matrix"]);

    Json bad = parse_json_text(R"json({
        "schema": "map/1", "n": 2, "matrix": [[2,0],[0,1]]})json");
    CHECK_THROWS_AS(map_from_json(bad), std::invalid_argument);
}

TEST_CASE("report serialization carries verdicts and witnesses") {
    VerificationReport fail = fs_criterion(corpus::n5());
    Json j = report_to_json(fail);
    CHECK(j["schema"] == "report/1");
    CHECK(j["verdict"] == "fail");
    CHECK(j["witnesses"].size() == fail.witnesses.size());
    CHECK(j["witnesses"][0]["kind"] == "disconnected-minor");
    CHECK(j["witnesses"][0]["flats"][0][0] == Json::array({0}));

    VerificationReport pass = fs_criterion(corpus::braid3());
    CHECK(report_to_json(pass)["verdict"] == "pass");

    CompatibilityReport compat = check_fan_compatibility(
        corpus::braid3(), make_integer_map({{1, 0, 0, 0, 0, 0},
                                            {0, 1, 0, 0, 0, 0},
                                            {0, 0, 1, 0, 0, 0},
                                            {0, 0, 0, 1, 0, 0},
                                            {0, 0, 0, 0, 1, 0},
                                            {0, 0, 0, 0, 0, 1}}));
    Json cj = compatibility_to_json(compat);
    CHECK(cj["verdict"] == "pass");
    CHECK(cj["unimodular"] == true);
    CHECK(cj["cones"].size() == 15);
}
