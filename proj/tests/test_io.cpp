#include "magilab/constructions.hpp"
#include "magilab/io.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace magilab;

TEST_CASE("graph documents")
{
    auto h = build_double_star(1, 2);
    Json doc = to_json(h);
    CHECK(doc["vertex_count"] == 5);
    CHECK(doc["edges"].size() == 4);
    CHECK(doc["family"]["kind"] == "double_star");
    CHECK(doc["family"]["params"] == Json::array({ 1, 2 }));

    auto back = handle_from_json(doc);
    CHECK(back.graph == h.graph);
    CHECK(back.bipartition == h.bipartition);
    CHECK(back.name_map == h.name_map);
    CHECK(back.family == h.family);

    Json plain = to_json(h.graph);
    CHECK_FALSE(plain.contains("family"));
    auto rebuilt = handle_from_json(plain);
    CHECK(rebuilt.graph == h.graph);
    REQUIRE(rebuilt.bipartition);
    CHECK(rebuilt.bipartition->side_of(0) == Side::X);
    CHECK(graph_from_json(plain) == h.graph);
}

TEST_CASE("family mismatch is rejected")
{
    Json doc = to_json(build_path(4));
    doc["family"] = { { "kind", "star" }, { "params", { 3 } } };
    CHECK_THROWS_AS(handle_from_json(doc), Error);

    Json missing = Json::parse(R"({"edges": [[0, 1]]})");
    CHECK_THROWS_AS(graph_from_json(missing), Error);
    Json bad_edge = Json::parse(R"({"vertex_count": 2, "edges": [[0, 1, 2]]})");
    CHECK_THROWS_AS(graph_from_json(bad_edge), Error);
    Json out_of_range = Json::parse(R"({"vertex_count": 2, "edges": [[0, 5]]})");
    CHECK_THROWS_AS(graph_from_json(out_of_range), Error);
    Json wrong_type = Json::parse(R"({"vertex_count": "two", "edges": []})");
    CHECK_THROWS_AS(graph_from_json(wrong_type), Error);
}

TEST_CASE("random graphs round-trip")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 10)(rng);
        Graph g = oracle::random_connected(rng, n, std::uniform_int_distribution<int>(0, 6)(rng));
        Json doc = to_json(g);
        CHECK(graph_from_json(Json::parse(doc.dump())) == g);

        TotalLabeling l;
        for (int v = 0; v < g.vertex_count(); ++v)
            l.vertex_labels.push_back(std::uniform_int_distribution<int>(1, 40)(rng));
        for (int e = 0; e < g.edge_count(); ++e)
            l.edge_labels.push_back(std::uniform_int_distribution<int>(1, 40)(rng));
        CHECK(labeling_from_json(Json::parse(to_json(l).dump())) == l);
    }
}

TEST_CASE("labeling and bundle documents")
{
    auto h = build_caterpillar({ { 1, 1 } });
    auto l = caterpillar_beta_labeling({ { 1, 1 } });
    Json doc = to_json(l);
    CHECK(doc["vertex_labels"] == Json::array({ 6, 1, 2, 7 }));
    CHECK(doc["edge_labels"] == Json::array({ 5, 4, 3 }));

    LabeledGraph bundle { h, l };
    auto back = bundle_from_json(Json::parse(to_json(bundle).dump()));
    CHECK(back.labeling == l);
    CHECK(back.handle.graph == h.graph);
    CHECK(back.handle.family == h.family);
    CHECK_THROWS_AS(bundle_from_json(doc), Error);

    CHECK(to_json(VertexLabeling { { 3, 0, 1, 2 } })["vertex_labels"] == Json::array({ 3, 0, 1, 2 }));
}

TEST_CASE("classification document")
{
    auto h = build_caterpillar({ { 1, 1 } });
    auto c = classify(h.graph, caterpillar_beta_labeling({ { 1, 1 } }), &*h.bipartition);
    Json doc = to_json(c);
    CHECK(doc["k"] == 12);
    CHECK(doc["b"] == 2);
    CHECK(doc["super"] == false);
    CHECK(doc["small_side"] == "Y");

    Json empty = to_json(LabelingClassification {});
    CHECK(empty["k"].is_null());
    CHECK(empty["b"].is_null());
    CHECK_FALSE(empty.contains("small_side"));
}

TEST_CASE("search report document")
{
    SearchReport report { 2, { TotalLabeling { { 1, 5, 2 }, { 4, 3 } } }, { 10 }, true };
    Json doc = to_json(report);
    CHECK(doc.dump() == R"({"b":2,"exhausted":true,"constants":[10],"labelings":[{"vertex_labels":[1,5,2],"edge_labels":[4,3]}]})");
}

TEST_CASE("dot export")
{
    auto h = build_path(3);
    TotalLabeling l { { 1, 5, 2 }, { 4, 3 } };
    std::string dot = to_dot(h.graph, &l, &h);
    CHECK(dot.rfind("graph", 0) == 0);
    CHECK(dot.find("--") != std::string::npos);
    CHECK(dot.find("v1") != std::string::npos);
    CHECK(dot.find("label=\"4\"") != std::string::npos);
    std::string bare = to_dot(h.graph);
    CHECK(bare.find("label=\"4\"") == std::string::npos);
}
