#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chibound/exact_solvers.hpp"
#include "support/test_support.hpp"

using namespace chibound;

TEST_CASE("clique_number") {
    CHECK(clique_number(complete_graph(5)).omega == 5);
    CHECK(clique_number(cycle_graph(5)).omega == 2);
    CHECK(clique_number(complement(cycle_graph(7))).omega == 3);
    CHECK(clique_number(build_graph(0, {})).omega == 0);

    SECTION("witness is a clique of the reported size") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 200; ++trial) {
            Graph g = testsupport::random_graph(10, 0.5, rng);
            CliqueResult res = clique_number(g);
            CHECK(res.omega == testsupport::brute_omega(g));
            CHECK(set_size(res.witness) == res.omega);
            for_each_vertex(res.witness, [&](int v) {
                CHECK((res.witness & ~g.closed_neighborhood(v)) == 0);
            });
        }
    }
    SECTION("restricted to a mask") {
        Graph g = graph_union(complete_graph(4), complete_graph(2));
        CHECK(clique_number_in(g, all_vertices(4)).omega == 4);
        CHECK(clique_number_in(g, vbit(4) | vbit(5)).omega == 2);
        CHECK(clique_number_in(g, 0).omega == 0);
    }
}

TEST_CASE("chromatic_number point values") {
    CHECK(chromatic_number(cycle_graph(5)).chi == 3);
    for (int n = 1; n <= 7; ++n) CHECK(chromatic_number(complete_graph(n)).chi == n);
    CHECK(chromatic_number(complement(cycle_graph(7))).chi == 4);
    CHECK(chromatic_number(build_graph(0, {})).chi == 0);
    CHECK(chromatic_number(testsupport::grotzsch_graph()).chi == 4);
}

TEST_CASE("chromatic_number agrees with brute force and is proper") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = testsupport::random_graph(n, 0.45, rng);
        ChiResult res = chromatic_number(g);
        CHECK(res.chi == testsupport::brute_chi(g));
        CHECK(coloring_proper_on(g, res.coloring, g.vertices()));
        CHECK(res.coloring.used == res.chi);
        CHECK(res.chi >= clique_number(g).omega);
    }
}

TEST_CASE("chromatic_number respects the node budget") {
    Budget tiny;
    tiny.limit = 3;
    Graph g = complement(cycle_graph(7));
    CHECK_THROWS_AS(chromatic_number(g, &tiny), BudgetExceeded);
}

TEST_CASE("subset_tables") {
    SECTION("P_3 frozen values") {
        Graph p3 = path_graph(3);
        SubsetTables t = subset_tables(p3);
        CHECK(t.omega[vbit(0) | vbit(2)] == 1);
        CHECK(t.omega[all_vertices(3)] == 2);
        CHECK(t.omega[0] == 0);
    }
    SECTION("C_5 perfection fails only at the full mask") {
        SubsetTables t = subset_tables(cycle_graph(5));
        for (VertexSet s = 0; s < 32; ++s)
            CHECK(static_cast<bool>(t.perfect[s]) == (s != 31));
    }
    SECTION("omega table matches the exact solver on sampled masks") {
        std::mt19937_64 rng(19);
        for (int trial = 0; trial < 10; ++trial) {
            Graph g = testsupport::random_graph(10, 0.4, rng);
            SubsetTables t = subset_tables(g);
            CHECK(t.omega[g.vertices()] == clique_number(g).omega);
            for (int probe = 0; probe < 200; ++probe) {
                VertexSet s = rng() & g.vertices();
                CHECK(t.omega[s] == clique_number_in(g, s).omega);
            }
        }
    }
    SECTION("perfection table matches the Berge oracle on every mask, n <= 6") {
        std::mt19937_64 rng(37);
        for (int trial = 0; trial < 25; ++trial) {
            Graph g = testsupport::random_graph(6, 0.5, rng);
            SubsetTables t = subset_tables(g);
            for (VertexSet s = 0; s < (VertexSet{1} << 6); ++s) {
                Graph sub = induced_subgraph(g, s).graph;
                CHECK(static_cast<bool>(t.perfect[s]) == is_perfect_berge(sub).perfect);
            }
        }
    }
    SECTION("size cap") {
        std::mt19937_64 rng(1);
        CHECK_THROWS_AS(subset_tables(testsupport::random_graph(14, 0.2, rng)), GraphError);
    }
}

TEST_CASE("two_color_bipartite") {
    auto c4 = two_color_bipartite(cycle_graph(4));
    REQUIRE(std::holds_alternative<Bipartition>(c4));
    CHECK(set_size(std::get<Bipartition>(c4).side0) == 2);
    CHECK(set_size(std::get<Bipartition>(c4).side1) == 2);

    auto c5 = two_color_bipartite(cycle_graph(5));
    REQUIRE(std::holds_alternative<OddCycleWitness>(c5));
    CHECK(std::get<OddCycleWitness>(c5).size() == 5);

    auto k1 = two_color_bipartite(complete_graph(1));
    REQUIRE(std::holds_alternative<Bipartition>(k1));
    CHECK(std::get<Bipartition>(k1).side0 == vbit(0));
    CHECK(std::get<Bipartition>(k1).side1 == 0);

    SECTION("verdict matches parity BFS oracle; witnesses are odd cycles") {
        std::mt19937_64 rng(43);
        for (int trial = 0; trial < 300; ++trial) {
            Graph g = testsupport::random_graph(10, 0.25, rng);
            auto res = two_color_bipartite(g);
            bool bipartite = testsupport::brute_k_colorable(g, 2);
            CHECK(std::holds_alternative<Bipartition>(res) == bipartite);
            if (bipartite) {
                const Bipartition& sides = std::get<Bipartition>(res);
                CHECK((sides.side0 | sides.side1) == g.vertices());
                CHECK((sides.side0 & sides.side1) == 0);
                for (auto [u, v] : g.edges())
                    CHECK(contains(sides.side0, u) != contains(sides.side0, v));
            } else {
                const OddCycleWitness& cycle = std::get<OddCycleWitness>(res);
                REQUIRE(cycle.size() % 2 == 1);
                REQUIRE(cycle.size() >= 3);
                for (std::size_t i = 0; i < cycle.size(); ++i)
                    CHECK(g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()]));
                std::set<int> distinct(cycle.begin(), cycle.end());
                CHECK(distinct.size() == cycle.size());
            }
        }
    }
}

TEST_CASE("chordal_peo_coloring") {
    auto k4 = chordal_peo_coloring(complete_graph(4));
    REQUIRE(k4.coloring.has_value());
    CHECK(k4.coloring->used == 4);

    auto tree = chordal_peo_coloring(complete_bipartite(1, 5));
    REQUIRE(tree.coloring.has_value());
    CHECK(tree.coloring->used <= 2);

    auto c4 = chordal_peo_coloring(cycle_graph(4));
    REQUIRE_FALSE(c4.coloring.has_value());
    CHECK(c4.hole.size() == 4);

    SECTION("uses exactly omega colours on chordal inputs") {
        std::mt19937_64 rng(67);
        int chordal_count = 0;
        for (int trial = 0; trial < 300; ++trial) {
            Graph g = testsupport::random_graph(9, 0.3, rng);
            auto res = chordal_peo_coloring(g);
            if (!res.coloring) continue;
            ++chordal_count;
            CHECK(coloring_proper_on(g, *res.coloring, g.vertices()));
            CHECK(res.coloring->used == clique_number(g).omega);
        }
        CHECK(chordal_count > 10);
    }
}

TEST_CASE("chi equals omega on Berge graphs up to 7 vertices, random sample") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = testsupport::random_graph(7, 0.5, rng);
        if (!is_perfect_berge(g).perfect) continue;
        CHECK(chromatic_number(g).chi == clique_number(g).omega);
    }
}
