#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "chibound/pattern_detect.hpp"
#include "support/test_support.hpp"

using namespace chibound;

namespace {

// A reported cycle must be induced, long enough, and canonical: smallest
// vertex first, then its smaller cycle neighbour.
void check_cycle_well_formed(const Graph& g, const std::vector<int>& cycle, int min_len) {
    int len = static_cast<int>(cycle.size());
    REQUIRE(len >= min_len);
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            bool want = (j == i + 1) || (i == 0 && j == len - 1);
            CHECK(g.adjacent(cycle[static_cast<std::size_t>(i)],
                             cycle[static_cast<std::size_t>(j)]) == want);
        }
    CHECK(cycle[0] == *std::min_element(cycle.begin(), cycle.end()));
    CHECK(cycle[1] < cycle.back());
}

std::set<VertexSet> hole_sets(const std::vector<std::vector<int>>& holes) {
    std::set<VertexSet> out;
    for (const auto& h : holes) out.insert(vector_to_set(h));
    return out;
}

}  // namespace

TEST_CASE("enumerate_holes on named graphs") {
    auto c5_holes = enumerate_holes(cycle_graph(5), 4, Parity::Any);
    REQUIRE(c5_holes.size() == 1);
    CHECK(c5_holes[0].size() == 5);

    CHECK(enumerate_holes(complete_graph(4), 4, Parity::Any).empty());

    auto k33_holes = enumerate_holes(complete_bipartite(3, 3), 4, Parity::Any);
    CHECK(k33_holes.size() == 9);  // one C_4 per pair of vertices each side
    for (const auto& h : k33_holes) CHECK(h.size() == 4);
    CHECK(hole_sets(k33_holes) == testsupport::naive_hole_sets(complete_bipartite(3, 3), 4, -1));

    CHECK_THROWS_AS(enumerate_holes(cycle_graph(5), 3, Parity::Any), GraphError);
}

TEST_CASE("enumerate_holes matches the subset oracle") {
    SECTION("exhaustively for n <= 6") {
        for (int n = 4; n <= 6; ++n) {
            for (const Graph& g : testsupport::all_graphs_up_to_iso(n)) {
                auto mine = enumerate_holes(g, 4, Parity::Any);
                for (const auto& h : mine) check_cycle_well_formed(g, h, 4);
                CHECK(hole_sets(mine) == testsupport::naive_hole_sets(g, 4, -1));
            }
        }
    }
    SECTION("random graphs at n = 8, all parity and length filters") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 120; ++trial) {
            Graph g = testsupport::random_graph(8, 0.45, rng);
            for (int min_len : {4, 5, 6}) {
                CHECK(hole_sets(enumerate_holes(g, min_len, Parity::Any)) ==
                      testsupport::naive_hole_sets(g, min_len, -1));
                CHECK(hole_sets(enumerate_holes(g, min_len, Parity::Odd)) ==
                      testsupport::naive_hole_sets(g, min_len, 1));
                CHECK(hole_sets(enumerate_holes(g, min_len, Parity::Even)) ==
                      testsupport::naive_hole_sets(g, min_len, 0));
            }
        }
    }
    SECTION("find_first_hole agrees with enumeration emptiness") {
        std::mt19937_64 rng(29);
        for (int trial = 0; trial < 200; ++trial) {
            Graph g = testsupport::random_graph(8, 0.35, rng);
            CHECK(find_first_hole(g, 4, Parity::Odd).has_value() ==
                  !enumerate_holes(g, 4, Parity::Odd).empty());
        }
    }
}

TEST_CASE("is_chordal") {
    CHECK(is_chordal(complete_graph(4)).chordal);
    CHECK(is_chordal(path_graph(6)).chordal);
    CHECK(is_chordal(complete_bipartite(1, 5)).chordal);

    auto c4 = is_chordal(cycle_graph(4));
    REQUIRE_FALSE(c4.chordal);
    CHECK(c4.hole.size() == 4);

    SECTION("agrees with the hole oracle and replays its elimination order") {
        std::mt19937_64 rng(41);
        int chordal_count = 0;
        for (int trial = 0; trial < 300; ++trial) {
            Graph g = testsupport::random_graph(9, 0.35, rng);
            ChordalResult res = is_chordal(g);
            bool oracle = testsupport::naive_hole_sets(g, 4, -1).empty();
            CHECK(res.chordal == oracle);
            if (res.chordal) {
                ++chordal_count;
                // replay: every vertex must be simplicial among later ones
                std::vector<int> pos(static_cast<std::size_t>(g.order()));
                for (int i = 0; i < g.order(); ++i)
                    pos[static_cast<std::size_t>(res.peo[static_cast<std::size_t>(i)])] = i;
                for (int i = 0; i < g.order(); ++i) {
                    int v = res.peo[static_cast<std::size_t>(i)];
                    VertexSet later = 0;
                    for_each_vertex(g.neighbors(v), [&](int u) {
                        if (pos[static_cast<std::size_t>(u)] > i) later |= vbit(u);
                    });
                    for_each_vertex(later, [&](int u) {
                        CHECK((later & ~g.closed_neighborhood(u)) == 0);
                    });
                }
            } else {
                CHECK(testsupport::subset_is_cycle(g, vector_to_set(res.hole)));
            }
        }
        CHECK(chordal_count > 10);
    }
}

TEST_CASE("is_perfect_berge") {
    auto c5 = is_perfect_berge(cycle_graph(5));
    REQUIRE_FALSE(c5.perfect);
    CHECK_FALSE(c5.witness_is_antihole);
    CHECK(c5.witness.size() == 5);

    auto anti7 = is_perfect_berge(complement(cycle_graph(7)));
    REQUIRE_FALSE(anti7.perfect);
    CHECK(anti7.witness_is_antihole);
    CHECK(anti7.witness.size() == 7);

    CHECK(is_perfect_berge(path_graph(4)).perfect);
    CHECK(is_perfect_berge(complete_graph(6)).perfect);
    CHECK(is_perfect_berge(complete_bipartite(3, 4)).perfect);

    SECTION("complement symmetry") {
        std::mt19937_64 rng(59);
        for (int trial = 0; trial < 150; ++trial) {
            Graph g = testsupport::random_graph(8, 0.5, rng);
            auto a = is_perfect_berge(g);
            auto b = is_perfect_berge(complement(g));
            CHECK(a.perfect == b.perfect);
            if (!a.perfect) CHECK(a.witness_is_antihole != b.witness_is_antihole);
        }
    }
}

TEST_CASE("classify_theorem_classes") {
    SECTION("C_4: everything is free") {
        ClassRecord r = classify_theorem_classes(cycle_graph(4));
        CHECK(r.short_holed);
        CHECK(r.odd_hole_free);
        CHECK_FALSE(r.chordal);
        CHECK(r.hammer_free);
        CHECK(r.k23_free);
        CHECK(r.wheel4_free);
        CHECK(r.k1uk3_free);
        CHECK(r.apexk1uk3_free);
        CHECK(r.perfect);
    }
    SECTION("a hammer is odd-hole-free but not hammer-free") {
        ClassRecord r = classify_theorem_classes(pattern_by_name("hammer").model);
        CHECK(r.odd_hole_free);
        REQUIRE_FALSE(r.hammer_free);
        CHECK(r.hammer->map == std::vector<int>{0, 1, 2, 3, 4});
    }
    SECTION("K_5 is chordal and has no non-edge") {
        ClassRecord r = classify_theorem_classes(complete_graph(5));
        CHECK(r.chordal);
        CHECK(r.k1uk3_free);
        CHECK(r.k23_free);
    }
    SECTION("containment chain on random graphs") {
        std::mt19937_64 rng(61);
        for (int trial = 0; trial < 300; ++trial) {
            Graph g = testsupport::random_graph(9, 0.35, rng);
            ClassRecord r = classify_theorem_classes(g);
            if (r.chordal) CHECK(r.short_holed);
            if (r.short_holed) CHECK(r.odd_hole_free);
            // every false flag carries its witness
            if (!r.hammer_free) CHECK(validate_embedding(g, pattern_by_name("hammer").model, r.hammer->map));
            if (!r.wheel4_free) CHECK(validate_embedding(g, pattern_by_name("wheel4").model, r.wheel4->map));
            if (!r.short_holed) CHECK(testsupport::subset_is_cycle(g, vector_to_set(*r.long_hole)));
        }
    }
}
