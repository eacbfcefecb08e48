#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "chibound/divisibility.hpp"
#include "support/test_support.hpp"

using namespace chibound;

namespace {

// Unmemoized oracle: recompute perfection and clique numbers per mask pair.
bool naive_pd(const Graph& g) {
    VertexSet full = g.vertices();
    for (VertexSet s = 0;; ++s) {
        bool has_edge = false;
        for_each_vertex(s, [&](int v) {
            if ((g.neighbors(v) & s) != 0) has_edge = true;
        });
        if (has_edge) {
            int omega_s = clique_number_in(g, s).omega;
            bool found = false;
            for (VertexSet a = s;; a = (a - 1) & s) {
                if (is_perfect_berge(induced_subgraph(g, a).graph).perfect &&
                    clique_number_in(g, s & ~a).omega < omega_s) {
                    found = true;
                    break;
                }
                if (a == 0) break;
            }
            if (!found) return false;
        }
        if (s == full) break;
    }
    return true;
}

}  // namespace

TEST_CASE("find_perfect_division") {
    SECTION("perfect graphs split as (V, empty) immediately") {
        auto split = find_perfect_division(path_graph(4));
        REQUIRE(split.has_value());
        CHECK(split->a == all_vertices(4));
        CHECK(split->b == 0);
    }
    SECTION("C_5 yields a validating split") {
        Graph c5 = cycle_graph(5);
        auto split = find_perfect_division(c5);
        REQUIRE(split.has_value());
        CHECK((split->a | split->b) == c5.vertices());
        CHECK((split->a & split->b) == 0);
        CHECK(is_perfect_berge(induced_subgraph(c5, split->a).graph).perfect);
        CHECK(clique_number_in(c5, split->b).omega < clique_number(c5).omega);
    }
    SECTION("edgeless input is an error") {
        CHECK_THROWS_AS(find_perfect_division(build_graph(3, {})), GraphError);
    }
}

TEST_CASE("is_perfectly_divisible") {
    SECTION("perfect graphs are perfectly divisible") {
        for (const Graph& g : {path_graph(5), complete_graph(5), complete_bipartite(2, 3)}) {
            auto verdict = is_perfectly_divisible(g);
            REQUIRE(std::holds_alternative<DivisionWitness>(verdict));
            CHECK(check_division_witness(g, std::get<DivisionWitness>(verdict)).empty());
        }
    }
    SECTION("C_5 and the 7-antihole are perfectly divisible") {
        for (const Graph& g : {cycle_graph(5), complement(cycle_graph(7))}) {
            auto verdict = is_perfectly_divisible(g);
            REQUIRE(std::holds_alternative<DivisionWitness>(verdict));
            CHECK(check_division_witness(g, std::get<DivisionWitness>(verdict)).empty());
        }
    }
    SECTION("edgeless graphs hold vacuously") {
        auto verdict = is_perfectly_divisible(build_graph(4, {}));
        REQUIRE(std::holds_alternative<DivisionWitness>(verdict));
        CHECK(std::get<DivisionWitness>(verdict).splits.empty());
    }
    SECTION("the Grotzsch graph is not perfectly divisible") {
        Graph g = testsupport::grotzsch_graph();
        auto verdict = is_perfectly_divisible(g);
        REQUIRE(std::holds_alternative<VertexSet>(verdict));
        VertexSet failing = std::get<VertexSet>(verdict);
        // revalidate: no split of the failing mask works
        int omega_s = clique_number_in(g, failing).omega;
        for (VertexSet a = failing;; a = (a - 1) & failing) {
            bool works = is_perfect_berge(induced_subgraph(g, a).graph).perfect &&
                         clique_number_in(g, failing & ~a).omega < omega_s;
            CHECK_FALSE(works);
            if (a == 0) break;
        }
    }
}

TEST_CASE("divisibility agrees with the unmemoized oracle") {
    SECTION("exhaustive n <= 5") {
        for (int n = 2; n <= 5; ++n)
            for (const Graph& g : testsupport::all_graphs_up_to_iso(n))
                CHECK(graph_is_perfectly_divisible(g) == naive_pd(g));
    }
    SECTION("random n = 7") {
        std::mt19937_64 rng(83);
        for (int trial = 0; trial < 60; ++trial) {
            Graph g = testsupport::random_graph(7, 0.5, rng);
            CHECK(graph_is_perfectly_divisible(g) == naive_pd(g));
        }
    }
}

TEST_CASE("perfect divisibility is hereditary on random graphs") {
    std::mt19937_64 rng(89);
    int divisible_count = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = testsupport::random_graph(9, 0.4, rng);
        if (!graph_is_perfectly_divisible(g)) continue;
        ++divisible_count;
        for (int probe = 0; probe < 10; ++probe) {
            VertexSet s = rng() & g.vertices();
            CHECK(graph_is_perfectly_divisible(induced_subgraph(g, s).graph));
        }
    }
    CHECK(divisible_count > 5);
}

TEST_CASE("pd_bound_audit") {
    PdAudit c5 = pd_bound_audit(cycle_graph(5));
    CHECK(c5.perfectly_divisible);
    CHECK(c5.chi == 3);
    CHECK(c5.omega == 2);
    CHECK(c5.bound == 3);
    CHECK(c5.bound_ok);

    PdAudit k4 = pd_bound_audit(complete_graph(4));
    CHECK(k4.perfectly_divisible);
    CHECK(k4.chi == 4);
    CHECK(k4.bound == 10);
    CHECK(k4.bound_ok);

    PdAudit anti = pd_bound_audit(complement(cycle_graph(7)));
    CHECK(anti.perfectly_divisible);
    CHECK(anti.chi == 4);
    CHECK(anti.omega == 3);
    CHECK(anti.bound == 6);
    CHECK(anti.bound_ok);

    PdAudit grotzsch = pd_bound_audit(testsupport::grotzsch_graph());
    CHECK_FALSE(grotzsch.perfectly_divisible);
    CHECK(grotzsch.chi == 4);
    CHECK(grotzsch.omega == 2);
    CHECK(grotzsch.failing_mask.has_value());
}

TEST_CASE("witness export format") {
    auto verdict = is_perfectly_divisible(path_graph(3));
    REQUIRE(std::holds_alternative<DivisionWitness>(verdict));
    std::string text = export_witness_text(std::get<DivisionWitness>(verdict));
    std::istringstream lines(text);
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        ++count;
        std::istringstream fields(line);
        unsigned long long s, a, b;
        REQUIRE(fields >> std::hex >> s >> a >> b);
        CHECK((a | b) == s);
        CHECK((a & b) == 0);
    }
    CHECK(count == std::get<DivisionWitness>(verdict).splits.size());
}
