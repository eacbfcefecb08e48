#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chibound/pattern_detect.hpp"
#include "support/test_support.hpp"

using namespace chibound;

TEST_CASE("catalog entries have the right shapes") {
    struct Expected {
        const char* name;
        int n;
        std::size_t m;
    };
    const Expected table[] = {
        {"p3", 3, 2},     {"p4", 4, 3},     {"c4", 4, 4},      {"c5", 5, 5},
        {"c6", 6, 6},     {"c7", 7, 7},     {"k3", 3, 3},      {"claw", 4, 3},
        {"k23", 5, 6},    {"hammer", 5, 5}, {"fork", 5, 4},    {"cochair", 5, 6},
        {"dart", 5, 6},   {"bull", 5, 5},   {"banner", 5, 5},  {"wheel4", 5, 8},
        {"k1uk3", 4, 3},  {"apexk1uk3", 5, 7},
    };
    for (const Expected& e : table) {
        Pattern p = pattern_by_name(e.name);
        CHECK(p.model.order() == e.n);
        CHECK(p.model.edge_count() == e.m);
    }
    CHECK_THROWS_AS(pattern_by_name("zigzag"), GraphError);
    CHECK(pattern_by_name("k5").model.edge_count() == 10);
    CHECK(pattern_by_name("c9").model.order() == 9);
}

TEST_CASE("degree profiles pin the asymmetric catalog graphs") {
    auto degrees = [](const Graph& g) {
        std::vector<int> d;
        for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    CHECK(degrees(pattern_by_name("hammer").model) == std::vector<int>{1, 2, 2, 2, 3});
    CHECK(degrees(pattern_by_name("fork").model) == std::vector<int>{1, 1, 1, 2, 3});
    CHECK(degrees(pattern_by_name("cochair").model) == std::vector<int>{1, 2, 3, 3, 3});
    CHECK(degrees(pattern_by_name("dart").model) == std::vector<int>{1, 2, 2, 3, 4});
    CHECK(degrees(pattern_by_name("bull").model) == std::vector<int>{1, 1, 2, 3, 3});
    CHECK(degrees(pattern_by_name("banner").model) == std::vector<int>{1, 2, 2, 2, 3});
    CHECK(degrees(pattern_by_name("apexk1uk3").model) == std::vector<int>{1, 3, 3, 3, 4});
}

TEST_CASE("find_induced_pattern") {
    SECTION("every catalog pattern embeds in its own model") {
        for (const Pattern& p : pattern_catalog()) {
            auto emb = find_induced_pattern(p.model, p);
            REQUIRE(emb.has_value());
            CHECK(validate_embedding(p.model, p.model, emb->map));
        }
    }
    SECTION("known positives and negatives") {
        CHECK_FALSE(find_induced_pattern(cycle_graph(5), "hammer").has_value());
        CHECK(find_induced_pattern(complete_bipartite(3, 3), "k23").has_value());
        CHECK(find_induced_pattern(pattern_by_name("hammer").model, "hammer").has_value());
        // a hammer inside its own model maps vertices identically
        auto emb = find_induced_pattern(pattern_by_name("hammer").model, "hammer");
        CHECK(emb->map == std::vector<int>{0, 1, 2, 3, 4});
        // K_5 has no non-edge, so no k1uk3
        CHECK_FALSE(find_induced_pattern(complete_graph(5), "k1uk3").has_value());
        // the wheel contains no induced claw
        CHECK_FALSE(find_induced_pattern(graph_join(complete_graph(1), cycle_graph(4)), "claw")
                        .has_value());
    }
    SECTION("returned embeddings validate on random hosts") {
        std::mt19937_64 rng(17);
        int found = 0;
        for (int trial = 0; trial < 300; ++trial) {
            Graph g = testsupport::random_graph(9, 0.4, rng);
            for (const char* name : {"hammer", "k23", "wheel4", "k1uk3", "apexk1uk3", "bull"}) {
                Pattern p = pattern_by_name(name);
                if (auto emb = find_induced_pattern(g, p)) {
                    ++found;
                    CHECK(validate_embedding(g, p.model, emb->map));
                }
            }
        }
        CHECK(found > 100);
    }
    SECTION("search order is lexicographic over host tuples") {
        // two disjoint triangles: the first k3 embedding must use the lowest hosts
        Graph g = graph_union(complete_graph(3), complete_graph(3));
        auto emb = find_induced_pattern(g, "k3");
        REQUIRE(emb.has_value());
        CHECK(emb->map == std::vector<int>{0, 1, 2});
    }
}

TEST_CASE("odd balloon detection") {
    SECTION("the 7-vertex balloon over a 5-hole is found") {
        // hole 0..4, attach 5 to {0,1}, pendant 6 on 5
        Graph g = build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}, {5, 6}});
        auto emb = find_odd_balloon(g);
        REQUIRE(emb.has_value());
        CHECK(validate_odd_balloon(g, *emb));
    }
    SECTION("no attachment vertex means no balloon") {
        CHECK_FALSE(find_odd_balloon(cycle_graph(7)).has_value());
        CHECK_FALSE(find_odd_balloon(complete_graph(4)).has_value());
    }
    SECTION("longer odd holes work too") {
        Graph g = build_graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0},
                                  {7, 2}, {7, 3}, {7, 8}});
        auto emb = find_odd_balloon(g);
        REQUIRE(emb.has_value());
        CHECK(validate_odd_balloon(g, *emb));
        CHECK(emb->map.size() == 9);
    }
}
