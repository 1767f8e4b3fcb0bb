#include <doctest.h>

#include <random>

#include "edgebetti/error.hpp"
#include "edgebetti/generators.hpp"
#include "edgebetti/homology.hpp"
#include "oracles.hpp"

using namespace edgebetti;

namespace {

std::vector<std::uint64_t> words(const Graph& g) {
    std::vector<std::uint64_t> adj(g.vertex_count(), 0);
    for (const auto& e : g.edges()) {
        adj[e.u - 1] |= std::uint64_t{1} << (e.v - 1);
        adj[e.v - 1] |= std::uint64_t{1} << (e.u - 1);
    }
    return adj;
}

IntMatrix product(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            for (std::size_t s = 0; s < b.cols(); ++s) c(r, s) += a(r, k) * b(k, s);
        }
    }
    return c;
}

}  // namespace

TEST_CASE("fields") {
    CHECK(Field(0).is_rational());
    CHECK(Field(2).characteristic() == 2);
    CHECK(Field(2147483647).characteristic() == 2147483647U);
    CHECK_THROWS_AS(Field(1), InputError);
    CHECK_THROWS_AS(Field(4), InputError);
    CHECK_THROWS_AS(Field(9), InputError);
}

TEST_CASE("clique complexes") {
    const auto tri = clique_complex(complete_graph(3));
    CHECK(tri.dimension() == 2);
    CHECK(tri.face_count(-1) == 1);
    CHECK(tri.face_count(0) == 3);
    CHECK(tri.face_count(1) == 3);
    CHECK(tri.face_count(2) == 1);
    const auto sq = clique_complex(cycle_graph(4));
    CHECK(sq.dimension() == 1);
    CHECK(sq.face_count(1) == 4);
    CHECK(sq.face_count(2) == 0);
    const auto pts = clique_complex(empty_graph(2));
    CHECK(pts.dimension() == 0);
    CHECK(pts.face_count(0) == 2);
    CHECK(clique_complex(empty_graph(0)).dimension() == -1);
}

TEST_CASE("complex validation") {
    CHECK_THROWS_AS(SimplicialComplex(3, {{{1}, {2}}, {{1, 3}}}), InputError);
    CHECK_THROWS_AS(SimplicialComplex(3, {{{1}, {4}}}), InputError);
    CHECK_THROWS_AS(SimplicialComplex(3, {{{2}, {1}, {1}}}), InputError);
    CHECK_THROWS_AS(SimplicialComplex(3, {{{1}, {2}}, {{2, 1}}}), InputError);
    const auto c = SimplicialComplex::from_facets(4, {{1, 2, 3}, {3, 4}});
    CHECK(c.face_count(0) == 4);
    CHECK(c.face_count(1) == 4);
    CHECK(c.face_count(2) == 1);
    CHECK(c.index_of({3, 4}).has_value());
    CHECK(!c.index_of({1, 4}).has_value());
}

TEST_CASE("boundary matrices") {
    const auto edge = clique_complex(complete_graph(2));
    const auto d1 = IntMatrix::from_sparse(boundary_matrix(edge, 1));
    CHECK(d1 == IntMatrix(2, 1, {-1, 1}));
    const auto three = clique_complex(empty_graph(3));
    CHECK(IntMatrix::from_sparse(boundary_matrix(three, 0)) == IntMatrix(1, 3, {1, 1, 1}));
    CHECK_THROWS_AS(boundary_matrix(edge, 2), InputError);
    CHECK_THROWS_AS(boundary_matrix(edge, -1), InputError);
}

TEST_CASE("boundary of a boundary vanishes") {
    std::mt19937_64 rng(5);
    std::vector<Graph> graphs{complete_graph(4), complete_graph(6), wheel_graph(5)};
    for (int k = 0; k < 20; ++k) graphs.push_back(random_graph(8, 0.6, rng()));
    for (const auto& g : graphs) {
        const auto c = clique_complex(g);
        for (int d = 1; d <= c.dimension(); ++d) {
            const auto lower = IntMatrix::from_sparse(boundary_matrix(c, d - 1));
            const auto upper = IntMatrix::from_sparse(boundary_matrix(c, d));
            const auto zero = product(lower, upper);
            REQUIRE(zero == IntMatrix(zero.rows(), zero.cols()));
        }
    }
}

TEST_CASE("rank examples") {
    for (std::uint32_t p : {0U, 2U, 3U, 7U}) {
        CHECK(rank_exact(IntMatrix(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}), Field(p)) == 3);
        CHECK(rank_exact(IntMatrix(2, 2, {1, 1, 1, 1}), Field(p)) == 1);
    }
    CHECK(rank_exact(IntMatrix(1, 1, {2}), Field(0)) == 1);
    CHECK(rank_exact(IntMatrix(1, 1, {2}), Field(2)) == 0);
    CHECK(rank_exact(IntMatrix(0, 4), Field(0)) == 0);
    CHECK(rank_exact(IntMatrix(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9}), Field(0)) == 2);
    CHECK(rank_exact(IntMatrix(2, 2, {3, 0, 0, 3}), Field(3)) == 0);
}

TEST_CASE("Bareiss rank matches rational elimination") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = 1 + rng() % 9;
        const std::size_t cols = 1 + rng() % 9;
        const int spread = trial < 150 ? 3 : 1000000;
        std::vector<std::int64_t> data(rows * cols);
        for (auto& x : data) x = static_cast<std::int64_t>(rng() % (2 * spread + 1)) - spread;
        // Force some rank deficiency.
        if (rows > 2 && trial % 3 == 0) {
            for (std::size_t c = 0; c < cols; ++c) data[2 * cols + c] = data[c] - 2 * data[cols + c];
        }
        const IntMatrix m(rows, cols, data);
        REQUIRE(rank_exact(m, Field(0)) == oracle::rational_rank(m));
    }
}

TEST_CASE("Bareiss overflow falls back to big integers") {
    // Entries near 2^40 make 3x3 minors far beyond 64 bits.
    const std::int64_t big = std::int64_t{1} << 40;
    const IntMatrix m(3, 3, {big, big + 1, 3, big - 7, big, 5, 2 * big - 7, 2 * big + 1, 8});
    CHECK(rank_exact(m, Field(0)) == oracle::rational_rank(m));
    CHECK(rank_exact(m, Field(0)) == 2);
}

TEST_CASE("sparse and dense rank agree") {
    const auto c = clique_complex(random_graph(9, 0.5, 3));
    for (int d = 0; d <= c.dimension(); ++d) {
        const auto sparse = boundary_matrix(c, d);
        for (std::uint32_t p : {0U, 2U, 5U}) CHECK(rank_exact(sparse, Field(p)) == rank_exact(IntMatrix::from_sparse(sparse), Field(p)));
    }
}

TEST_CASE("reduced homology examples") {
    const auto sq = reduced_homology_dims(clique_complex(cycle_graph(4)));
    CHECK(sq(1) == 1);
    CHECK(sq(0) == 0);
    CHECK(sq(-1) == 0);
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto h = reduced_homology_dims(clique_complex(complete_graph(n)));
        for (int d = -1; d <= h.max_degree(); ++d) CHECK(h(d) == 0);
    }
    CHECK(reduced_homology_dims(clique_complex(Graph(5, {{1, 2}, {3, 4}})))(0) == 2);
    CHECK(reduced_homology_dims(clique_complex(empty_graph(0)))(-1) == 1);
    // Octahedron: complement of a perfect matching on 6 vertices is a 2-sphere.
    const auto octa = reduced_homology_dims(clique_complex(complement(Graph(6, {{1, 2}, {3, 4}, {5, 6}}))));
    CHECK(octa(2) == 1);
    CHECK(octa(1) == 0);
}

TEST_CASE("torsion shows up only in small characteristic") {
    // 6-vertex triangulation of the real projective plane.
    const auto rp2 = SimplicialComplex::from_facets(
        6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
    const auto q = reduced_homology_dims(rp2, Field(0));
    const auto f2 = reduced_homology_dims(rp2, Field(2));
    CHECK(q(1) == 0);
    CHECK(q(2) == 0);
    CHECK(f2(1) == 1);
    CHECK(f2(2) == 1);
    CHECK(reduced_homology_dims(rp2, Field(3))(1) == 0);
}

TEST_CASE("homology invariants on random clique complexes") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + trial % 10;
        const Graph g = random_graph(n, 0.15 + 0.7 * (trial % 7) / 6.0, rng());
        const auto c = clique_complex(g);
        const auto h = reduced_homology_dims(c);
        // Reduced Euler characteristic from faces and from homology.
        long long by_faces = 0;
        long long by_homology = 0;
        for (int d = -1; d <= c.dimension(); ++d) {
            const long long sign = (d + 1) % 2 == 0 ? 1 : -1;
            by_faces += sign * static_cast<long long>(c.face_count(d));
            by_homology += sign * static_cast<long long>(h(d));
        }
        REQUIRE(by_faces == by_homology);
        REQUIRE(h(0) == components(g).size() - 1);
        for (std::uint32_t p : {0U, 2U, 3U}) REQUIRE(clique_complex_homology(words(g), Field(p)) == reduced_homology_dims(c, Field(p)));
    }
}
