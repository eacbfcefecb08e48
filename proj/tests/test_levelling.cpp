#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chibound/graph_core.hpp"
#include "chibound/pattern_detect.hpp"
#include "support/test_support.hpp"

using namespace chibound;

TEST_CASE("bfs levelling shapes") {
    Graph p3 = path_graph(3);
    LevelStructure ls = bfs_levelling(p3, 0);
    REQUIRE(ls.levels.size() == 3);
    for (const VertexSet& l : ls.levels) CHECK(set_size(l) == 1);
    CHECK(check_levelling(p3, ls).empty());

    Graph c4 = cycle_graph(4);
    LevelStructure lc = bfs_levelling(c4, 2);
    REQUIRE(lc.levels.size() == 3);
    CHECK(set_size(lc.levels[0]) == 1);
    CHECK(set_size(lc.levels[1]) == 2);
    CHECK(set_size(lc.levels[2]) == 1);
    CHECK(check_levelling(c4, lc).empty());

    SECTION("disconnected input covers only the root's component") {
        Graph two = graph_union(path_graph(2), path_graph(2));
        LevelStructure ls2 = bfs_levelling(two, 0);
        CHECK(ls2.covered() == (vbit(0) | vbit(1)));
        CHECK((two.vertices() & ~ls2.covered()) == (vbit(2) | vbit(3)));
    }
    CHECK_THROWS_AS(bfs_levelling(p3, 5), GraphError);
}

TEST_CASE("bfs levelling invariants on random graphs") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = testsupport::random_graph(10, 0.3, rng);
        LevelStructure ls = bfs_levelling(g, 0);
        CHECK(check_levelling(g, ls).empty());
        // levels are exactly BFS distance classes within the component
        for (std::size_t i = 0; i < ls.levels.size(); ++i)
            for_each_vertex(ls.levels[i], [&](int v) { CHECK(ls.level_of(v) == static_cast<int>(i)); });
    }
}

TEST_CASE("prune keeps unique parents: frozen examples") {
    SECTION("P_4 rooted at an end: nothing deleted") {
        Graph p4 = path_graph(4);
        LevelStructure ls = bfs_levelling(p4, 0);
        LevelStructure pruned = prune_levelling(p4, ls, 3);
        for (std::size_t i = 0; i < ls.levels.size(); ++i) CHECK(pruned.levels[i] == ls.levels[i]);
    }
    SECTION("star rooted at the centre: centre kept") {
        Graph star = complete_bipartite(1, 3);
        LevelStructure ls = bfs_levelling(star, 0);
        LevelStructure pruned = prune_levelling(star, ls, 1);
        CHECK(pruned.levels[0] == vbit(0));
        CHECK(pruned.levels[1] == ls.levels[1]);
    }
    SECTION("C_4: exactly the lower-indexed middle vertex goes") {
        Graph c4 = cycle_graph(4);
        LevelStructure ls = bfs_levelling(c4, 0);
        REQUIRE(ls.levels[1] == (vbit(1) | vbit(3)));
        LevelStructure pruned = prune_levelling(c4, ls, 2);
        CHECK(pruned.levels[1] == vbit(3));
        CHECK(pruned.levels[2] == vbit(2));
        // the survivor is now the unique parent of the top vertex
        CHECK((c4.neighbors(2) & pruned.levels[1]) == vbit(3));
    }
    CHECK_THROWS_AS(prune_levelling(cycle_graph(4), bfs_levelling(cycle_graph(4), 0), 5),
                    GraphError);
}

// After pruning, every surviving vertex of L_i (i < k) must be the unique
// surviving parent of some surviving child, every vertex of L_1..L_k must
// keep a parent, and the result must be a sub-levelling of the input.
static void check_prune_invariants(const Graph& g, const LevelStructure& before,
                                   const LevelStructure& after, int k) {
    REQUIRE(after.levels.size() == before.levels.size());
    for (std::size_t i = 0; i < before.levels.size(); ++i) {
        CHECK((after.levels[i] & ~before.levels[i]) == 0);
        if (static_cast<int>(i) >= k) CHECK(after.levels[i] == before.levels[i]);
    }
    for (int i = 1; i <= k; ++i)
        for_each_vertex(after.levels[static_cast<std::size_t>(i)], [&](int v) {
            CHECK((g.neighbors(v) & after.levels[static_cast<std::size_t>(i - 1)]) != 0);
        });
    for (int i = 0; i < k; ++i)
        for_each_vertex(after.levels[static_cast<std::size_t>(i)], [&](int v) {
            bool unique_parent = false;
            for_each_vertex(g.neighbors(v) & after.levels[static_cast<std::size_t>(i + 1)],
                            [&](int u) {
                                if ((g.neighbors(u) & after.levels[static_cast<std::size_t>(i)]) ==
                                    vbit(v))
                                    unique_parent = true;
                            });
            CHECK(unique_parent);
        });
}

TEST_CASE("prune invariants hold to the fixpoint") {
    SECTION("the stress graph needs back-propagation across levels") {
        Graph g = testsupport::pruning_stress_graph();
        LevelStructure ls = bfs_levelling(g, 0);
        REQUIRE(ls.top() == 3);
        LevelStructure pruned = prune_levelling(g, ls, 3);
        check_prune_invariants(g, ls, pruned, 3);
        // level 1 must shrink to the single parent chain that reaches the top
        CHECK(pruned.levels[1] == vbit(2));
        CHECK(pruned.levels[2] == vbit(5));
    }
    SECTION("random graphs") {
        std::mt19937_64 rng(47);
        int cases = 0;
        for (int trial = 0; trial < 400; ++trial) {
            Graph g = testsupport::random_graph(11, 0.25, rng);
            LevelStructure ls = bfs_levelling(g, 0);
            if (ls.top() < 2) continue;
            ++cases;
            int k = ls.top();
            LevelStructure pruned = prune_levelling(g, ls, k);
            check_prune_invariants(g, ls, pruned, k);
        }
        CHECK(cases > 100);
    }
    SECTION("restricted target set") {
        std::mt19937_64 rng(53);
        for (int trial = 0; trial < 200; ++trial) {
            Graph g = testsupport::random_graph(10, 0.3, rng);
            LevelStructure ls = bfs_levelling(g, 0);
            if (ls.top() < 2) continue;
            int k = ls.top();
            auto comps = components_in(g, ls.levels[static_cast<std::size_t>(k)]);
            LevelStructure pruned = prune_levelling(g, ls, k, comps[0]);
            // every target vertex keeps a parent in the pruned previous level
            for_each_vertex(comps[0], [&](int u) {
                CHECK((g.neighbors(u) & pruned.levels[static_cast<std::size_t>(k - 1)]) != 0);
            });
        }
    }
}

TEST_CASE("components_in") {
    Graph two = graph_union(cycle_graph(4), path_graph(3));
    auto comps = components_in(two, two.vertices());
    REQUIRE(comps.size() == 2);
    CHECK(set_size(comps[0]) == 4);
    CHECK(set_size(comps[1]) == 3);
    CHECK(components_in(two, 0).empty());
}
