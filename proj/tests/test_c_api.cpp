// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mzk/mzk.h"

#include <json.hpp>

#include <string>

namespace {

std::string take(char* s)
{
    std::string out = s ? s : "";
    mzk_string_free(s);
    return out;
}

nlohmann::json parse(char* s)
{
    return nlohmann::json::parse(take(s));
}

}  // namespace

TEST_CASE("version and builtin graphs")
{
    CHECK(std::string(mzk_version()) == "0.1.0");
    mzk_graph* g = nullptr;
    REQUIRE(mzk_graph_build("mirzakhani", &g) == MZK_OK);
    CHECK(mzk_graph_order(g) == 63);
    CHECK(mzk_graph_size(g) == 183);
    mzk_graph_free(g);

    CHECK(mzk_graph_build("nonsense", &g) == MZK_E_ARGUMENT);
    CHECK(std::string(mzk_last_error()).find("nonsense") != std::string::npos);
    CHECK(mzk_graph_build(nullptr, &g) == MZK_E_ARGUMENT);
    CHECK(mzk_graph_order(nullptr) == 0);
    mzk_graph_free(nullptr);
}

TEST_CASE("solve and count through handles")
{
    mzk_graph* g = nullptr;
    mzk_lists* l = nullptr;
    REQUIRE(mzk_graph_build("mirzakhani", &g) == MZK_OK);
    REQUIRE(mzk_lists_build("canonical", &l) == MZK_OK);
    char* json = nullptr;
    int outcome = -1;
    REQUIRE(mzk_solve(g, l, 10000000, &json, &outcome) == MZK_OK);
    CHECK(outcome == MZK_OUTCOME_NEGATIVE);
    CHECK(parse(json)["status"] == "UNSAT");

    REQUIRE(mzk_solve(g, l, 5, &json, &outcome) == MZK_OK);
    CHECK(outcome == MZK_OUTCOME_EXHAUSTED);
    take(json);

    REQUIRE(mzk_verify_not_choosable(g, l, 4, 10000000, &json, &outcome) == MZK_OK);
    CHECK(outcome == MZK_OUTCOME_POSITIVE);
    CHECK(parse(json)["verdict"] == "WitnessConfirmed");
    mzk_lists_free(l);
    mzk_graph_free(g);

    REQUIRE(mzk_graph_build("wheel", &g) == MZK_OK);
    REQUIRE(mzk_lists_build("wheel", &l) == MZK_OK);
    REQUIRE(mzk_count(g, l, 1000, &json, &outcome) == MZK_OK);
    CHECK(outcome == MZK_OUTCOME_POSITIVE);
    CHECK(parse(json)["count"] == 24);
    mzk_lists_free(l);

    int colors[] = {1, 2, 3};
    REQUIRE(mzk_lists_uniform(g, colors, 3, &l) == MZK_OK);
    REQUIRE(mzk_solve(g, l, 1000, &json, &outcome) == MZK_OK);
    CHECK(outcome == MZK_OUTCOME_POSITIVE);
    auto witness = parse(json)["witness"];
    REQUIRE(mzk_verify_coloring(g, l, witness.dump().c_str(), &json, &outcome) == MZK_OK);
    CHECK(outcome == MZK_OUTCOME_POSITIVE);
    take(json);
    REQUIRE(mzk_verify_coloring(g, l, R"({"hub:0,0": 1})", &json, &outcome) == MZK_E_GRAPH);
    mzk_lists_free(l);
    mzk_graph_free(g);
}

TEST_CASE("parse errors are reported with locations")
{
    mzk_graph* g = nullptr;
    CHECK(mzk_graph_parse("p edge 2 1\ne 1 5\n", MZK_FORMAT_DIMACS, &g) == MZK_E_PARSE);
    CHECK(std::string(mzk_last_error()).find("line 2") != std::string::npos);
    CHECK(mzk_graph_parse("{", MZK_FORMAT_JSON, &g) == MZK_E_PARSE);
    CHECK(mzk_graph_parse(R"({"vertices":["plain:0","plain:0"],"edges":[]})", MZK_FORMAT_JSON, &g) == MZK_E_PARSE);
    CHECK(mzk_graph_load("/nonexistent/file.json", &g) == MZK_E_PARSE);
    mzk_lists* l = nullptr;
    CHECK(mzk_lists_parse(R"({"palette":[1],"lists":{"plain:0":[]}})", &l) == MZK_E_PARSE);
}

TEST_CASE("formats round trip")
{
    mzk_graph* g = nullptr;
    REQUIRE(mzk_graph_build("mirzakhani", &g) == MZK_OK);
    char* text = nullptr;
    REQUIRE(mzk_graph_write(g, MZK_FORMAT_DIMACS, nullptr, &text) == MZK_OK);
    auto dimacs = take(text);
    mzk_graph* back = nullptr;
    REQUIRE(mzk_graph_parse(dimacs.c_str(), MZK_FORMAT_DIMACS, &back) == MZK_OK);
    REQUIRE(mzk_graph_write(back, MZK_FORMAT_JSON, nullptr, &text) == MZK_OK);
    auto from_dimacs = take(text);
    REQUIRE(mzk_graph_write(g, MZK_FORMAT_JSON, nullptr, &text) == MZK_OK);
    CHECK(take(text) == from_dimacs);

    mzk_lists* l = nullptr;
    REQUIRE(mzk_lists_build("canonical", &l) == MZK_OK);
    REQUIRE(mzk_cnf(g, l, &text) == MZK_OK);
    CHECK(take(text).find("p cnf 252 ") != std::string::npos);
    REQUIRE(mzk_lists_write(l, &text) == MZK_OK);
    auto lists_json = take(text);
    mzk_lists* l2 = nullptr;
    REQUIRE(mzk_lists_parse(lists_json.c_str(), &l2) == MZK_OK);
    REQUIRE(mzk_lists_write(l2, &text) == MZK_OK);
    CHECK(take(text) == lists_json);
    mzk_lists_free(l2);
    mzk_lists_free(l);
    mzk_graph_free(back);
    mzk_graph_free(g);
}

TEST_CASE("structural checks")
{
    mzk_graph* g = nullptr;
    REQUIRE(mzk_graph_build("mirzakhani", &g) == MZK_OK);
    char* json = nullptr;
    int outcome = -1;
    REQUIRE(mzk_verify(g, "planarity", 0, &json, &outcome) == MZK_OK);
    CHECK(outcome == MZK_OUTCOME_POSITIVE);
    CHECK(parse(json)["F"] == 122);
    REQUIRE(mzk_verify(g, "hamilton", 100000000, &json, &outcome) == MZK_OK);
    CHECK(outcome == MZK_OUTCOME_POSITIVE);
    take(json);
    REQUIRE(mzk_chromatic(g, 8, 10000000, &json, &outcome) == MZK_OK);
    CHECK(parse(json)["k"] == 3);
    CHECK(mzk_verify(g, "nonsense", 0, &json, &outcome) == MZK_E_ARGUMENT);

    const char* apex[] = {"apex"};
    mzk_graph* minus = nullptr;
    REQUIRE(mzk_graph_delete_vertices(g, apex, 1, &minus) == MZK_OK);
    CHECK(mzk_graph_order(minus) == 62);
    REQUIRE(mzk_verify(minus, "matching", 0, &json, &outcome) == MZK_OK);
    CHECK(outcome == MZK_OUTCOME_POSITIVE);
    CHECK(parse(json)["maximum"] == 31);
    std::vector<std::string> names;
    for (int a : {1, 3, 7, 9, 13, 15, 19, 21})
        for (int b : {-1, 1})
            names.push_back("corner:" + std::to_string(a) + "," + std::to_string(b));
    std::vector<const char*> ids;
    for (const auto& n : names)
        ids.push_back(n.c_str());
    REQUIRE(mzk_cut_certificate(minus, ids.data(), ids.size(), &json, &outcome) == MZK_OK);
    CHECK(outcome == MZK_OUTCOME_POSITIVE);
    CHECK(parse(json)["components_after"] == 17);
    const char* bogus[] = {"corner:2,2"};
    CHECK(mzk_cut_certificate(minus, bogus, 1, &json, &outcome) == MZK_E_GRAPH);
    mzk_graph_free(minus);
    mzk_graph_free(g);
}

TEST_CASE("choosability calls")
{
    mzk_graph* g = nullptr;
    REQUIRE(mzk_graph_parse("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", MZK_FORMAT_DIMACS, &g) == MZK_OK);
    int pool[] = {1, 2, 3, 4};
    char* json = nullptr;
    int outcome = -1;
    REQUIRE(mzk_choosability_exhaustive(g, 2, pool, 4, 10000000, &json, &outcome) == MZK_OK);
    CHECK(outcome == MZK_OUTCOME_NEGATIVE);
    take(json);
    REQUIRE(mzk_random_probe(g, 3, 20, 7, pool, 4, 1000, "K3", &json, &outcome) == MZK_OK);
    CHECK(outcome == MZK_OUTCOME_POSITIVE);
    auto doc = parse(json);
    CHECK(doc["graph"] == "K3");
    CHECK(doc["successes"] == 20);
    mzk_graph_free(g);
}

TEST_CASE("proof and audit")
{
    char* json = nullptr;
    char* transcript = nullptr;
    int outcome = -1;
    REQUIRE(mzk_prove("theorem", 10000000, &json, &transcript, &outcome) == MZK_OK);
    CHECK(outcome == MZK_OUTCOME_POSITIVE);
    CHECK(parse(json)["certified"] == true);
    CHECK(take(transcript).find("not 4-choosable") != std::string::npos);
    REQUIRE(mzk_prove("section:3", 10000000, &json, nullptr, &outcome) == MZK_OK);
    CHECK(outcome == MZK_OUTCOME_POSITIVE);
    take(json);
    REQUIRE(mzk_prove("wheel:corner:1,-1=4", 10000000, &json, nullptr, &outcome) == MZK_OK);
    CHECK(parse(json)["forced"]["corner:1,1"] == 2);
    CHECK(mzk_prove("section:9", 10000000, &json, nullptr, &outcome) != MZK_OK);
    CHECK(mzk_prove("lemma", 10000000, &json, nullptr, &outcome) == MZK_E_ARGUMENT);

    REQUIRE(mzk_audit(nullptr, nullptr, 10000000, 100000000, &json, &outcome) == MZK_OK);
    CHECK(outcome == MZK_OUTCOME_POSITIVE);
    CHECK(parse(json)["all_pass"] == true);
}
