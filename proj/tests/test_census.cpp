#include <doctest.h>

#include <random>

#include "edgebetti/census.hpp"
#include "edgebetti/error.hpp"
#include "edgebetti/generators.hpp"
#include "oracles.hpp"

using namespace edgebetti;

TEST_CASE("clique counts") {
    CHECK(count_cliques(complete_graph(4), 3) == 4);
    for (std::size_t n = 2; n <= 7; ++n) {
        for (std::size_t r = 1; r <= n + 1; ++r) CHECK(count_cliques(complete_graph(n), r) == binomial(n, r));
    }
    CHECK(count_cliques(cycle_graph(4), 3) == 0);
    CHECK(count_cliques(cycle_graph(5), 2) == 5);
    CHECK(count_cliques(cycle_graph(3), 3) == 1);
    CHECK_THROWS_AS(count_cliques(cycle_graph(3), 0), InputError);
}

TEST_CASE("complete bipartite counts") {
    CHECK(count_complete_bipartite(cycle_graph(4), 2, 2) == 1);
    CHECK(count_complete_bipartite(complete_graph(4), 2, 2) == 0);
    CHECK(count_complete_bipartite(complete_bipartite_graph(2, 3), 2, 3) == 1);
    CHECK(count_complete_bipartite(complete_bipartite_graph(2, 3), 3, 2) == 1);
    CHECK(count_complete_bipartite(complete_bipartite_graph(3, 3), 2, 2) == 9);
    // K_{1,1} is an edge, K_{1,2} an induced path on three vertices.
    CHECK(count_complete_bipartite(cycle_graph(5), 1, 1) == 5);
    CHECK(count_complete_bipartite(cycle_graph(5), 1, 2) == 5);
}

TEST_CASE("induced cycle counts") {
    CHECK(count_induced_cycles(cycle_graph(4), 4) == 1);
    CHECK(count_induced_cycles(complete_bipartite_graph(2, 3), 4) == 3);
    CHECK(count_induced_cycles(random_tree(11, 7), 4) == 0);
    CHECK(count_induced_cycles(random_tree(11, 7), 5) == 0);
    CHECK(count_induced_cycles(cycle_graph(5), 5) == 1);
    CHECK(count_induced_cycles(complete_graph(5), 3) == 10);
    CHECK_THROWS_AS(count_induced_cycles(cycle_graph(6), 6), UnsupportedPattern);
    CHECK_THROWS_AS(count_induced_cycles(cycle_graph(6), 2), UnsupportedPattern);
}

TEST_CASE("wheel and D counts") {
    CHECK(count_wheels_w4(wheel_graph(4)) == 1);
    CHECK(count_wheels_w4(complete_graph(5)) == 0);
    CHECK(count_wheels_w4(cycle_graph(5)) == 0);
    CHECK(count_pattern_d(graph_d()) == 1);
    CHECK(count_pattern_d(complete_graph(5)) == 0);
    CHECK(count_pattern_d(wheel_graph(4)) == 0);
}

TEST_CASE("graph D") {
    const Graph d = graph_d();
    CHECK(d.vertex_count() == 5);
    CHECK(d.edge_count() == 7);
    const Graph co = complement(d);
    const auto comps = components(co);
    CHECK(comps.size() == 2);
    CHECK(isolated_vertex_count(co) == 0);
    CHECK(co == Graph(5, {{1, 4}, {1, 5}, {2, 3}}));
    CHECK(canonical_code(co) == canonical_code(disjoint_union(path_graph(3), complete_graph(2))));
}

TEST_CASE("generic counter") {
    const auto k2 = Pattern::make("K2", complete_graph(2));
    const auto k3 = Pattern::make("K3", complete_graph(3));
    const auto p3 = Pattern::make("P3", path_graph(3));
    CHECK(count_induced_isomorphic(random_graph(9, 0.5, 4), k2) == static_cast<Count>(random_graph(9, 0.5, 4).edge_count()));
    CHECK(count_induced_isomorphic(complete_graph(4), k3) == 4);
    CHECK(count_induced_isomorphic(cycle_graph(4), p3) == 4);
    CHECK_THROWS_AS(Pattern::make("C6", cycle_graph(6)), UnsupportedPattern);
    CHECK_THROWS_AS(Pattern::make("none", empty_graph(0)), UnsupportedPattern);
}

TEST_CASE("canonical code separates isomorphism classes") {
    // 34 classes of graphs on 5 vertices, 11 on 4, 4 on 3.
    const std::size_t expected[] = {1, 1, 2, 4, 11, 34};
    for (std::size_t n = 1; n <= 5; ++n) {
        std::set<std::uint16_t> codes;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * (n - 1) / 2)); ++m) codes.insert(canonical_code(Graph::from_edge_mask(n, m)));
        CHECK(codes.size() == expected[n]);
    }
    CHECK_THROWS_AS(canonical_code(empty_graph(6)), UnsupportedPattern);
}

TEST_CASE("census report keys") {
    const auto c = take_census(complete_bipartite_graph(2, 3));
    CHECK(c.k(2) == 6);
    CHECK(c.k(3) == 0);
    CHECK(c.k(2, 2) == 3);
    CHECK(c.k(3, 2) == 1);
    CHECK(c.c4 == 3);
    CHECK(c.w4 == 0);
    CHECK(c.d == 0);
    CHECK_THROWS_AS(c.k(6), std::out_of_range);
    CHECK_THROWS_AS(c.k(1, 4), std::out_of_range);
}

TEST_CASE("counters agree with brute-force search") {
    const Graph c4 = cycle_graph(4);
    const Graph w4 = wheel_graph(4);
    const Graph d = graph_d();
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 5 + trial % 4;
        const Graph g = random_graph(n, 0.2 + 0.6 * (trial % 5) / 4.0, rng());
        const auto census = take_census(g);
        REQUIRE(census.c4 == oracle::count_induced(g, c4));
        REQUIRE(census.c4 == count_induced_isomorphic(g, Pattern::make("C4", c4)));
        REQUIRE(census.w4 == oracle::count_induced(g, w4));
        REQUIRE(census.w4 == count_induced_isomorphic(g, Pattern::make("W4", w4)));
        REQUIRE(census.d == oracle::count_induced(g, d));
        REQUIRE(census.d == count_induced_isomorphic(g, Pattern::make("D", d)));
        REQUIRE(count_induced_cycles(g, 5) == oracle::count_induced(g, cycle_graph(5)));
        for (std::size_t r = 2; r <= std::min<std::size_t>(n, 5); ++r) REQUIRE(census.k(r) == oracle::count_induced(g, complete_graph(r)));
        for (std::size_t a = 1; a <= 2; ++a) {
            for (std::size_t b = a; a + b <= std::min<std::size_t>(n, 5); ++b) {
                const Graph kab = complete_bipartite_graph(a, b);
                REQUIRE(count_complete_bipartite(g, a, b) == oracle::count_induced(g, kab));
                REQUIRE(count_complete_bipartite(g, a, b) == count_complete_bipartite(g, b, a));
            }
        }
    }
}

TEST_CASE("census on a graph above 64 vertices") {
    const Graph g(66, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {65, 66}}, 128);
    const auto c = take_census(g);
    CHECK(c.k(2) == 5);
    CHECK(c.c4 == 1);
    CHECK(c.k(2, 2) == 1);
}
