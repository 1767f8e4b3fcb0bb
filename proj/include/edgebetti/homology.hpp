#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "edgebetti/graph.hpp"

namespace edgebetti {

// Coefficient field: the rationals (characteristic 0) or GF(p).
class Field {
public:
    // Throws InputError unless characteristic is 0 or a prime below 2^31.
    explicit Field(std::uint32_t characteristic = 0);

    static Field rationals() { return Field(0); }

    std::uint32_t characteristic() const { return characteristic_; }
    bool is_rational() const { return characteristic_ == 0; }

    friend bool operator==(Field, Field) = default;

private:
    std::uint32_t characteristic_ = 0;
};

// A face is an ascending list of vertices; a d-face has d + 1 of them.
using Face = std::vector<Vertex>;

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // faces_by_dim[d] lists the d-faces. Validates that faces are sorted,
    // distinct, within 1..n_vertices, and closed under taking facets;
    // throws InputError otherwise. Each dimension is stored in
    // lexicographic order.
    SimplicialComplex(std::size_t n_vertices, std::vector<std::vector<Face>> faces_by_dim);

    // Downward closure of the given faces.
    static SimplicialComplex from_facets(std::size_t n_vertices, const std::vector<Face>& facets);

    std::size_t vertex_count() const { return n_vertices_; }

    // -1 when there are no vertices at all.
    int dimension() const { return static_cast<int>(faces_by_dim_.size()) - 1; }

    // The augmented complex has exactly one (-1)-face, the empty set.
    std::size_t face_count(int d) const;
    const std::vector<Face>& faces(int d) const;
    std::optional<std::size_t> index_of(const Face& f) const;

private:
    std::size_t n_vertices_ = 0;
    std::vector<std::vector<Face>> faces_by_dim_;
};

// Faces are the vertex sets inducing complete subgraphs.
SimplicialComplex clique_complex(const Graph& g);

// Column-major sparse integer matrix.
struct SparseIntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::pair<std::size_t, int>>> columns;
};

// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> row_major);

    static IntMatrix from_sparse(const SparseIntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

// Matrix of the boundary map from d-chains to (d-1)-chains. Columns follow
// the complex's d-face order, rows its (d-1)-face order. Removing the k-th
// vertex (0-based) of a face carries sign (-1)^k. For d = 0 this is the
// augmentation: a single all-ones row. Throws InputError unless
// 0 <= d <= dimension().
SparseIntMatrix boundary_matrix(const SimplicialComplex& c, int d);

// Rank over the field. Characteristic 0 uses fraction-free (Bareiss)
// elimination on 64-bit integers, switching to arbitrary precision if an
// intermediate minor overflows. Characteristic p reduces mod p first.
std::size_t rank_exact(const IntMatrix& m, Field f);
std::size_t rank_exact(const SparseIntMatrix& m, Field f);

// Reduced homology dimensions for -1 <= d <= dimension of the complex,
// computed on the augmented chain complex.
struct HomologyDims {
    // dims[d + 1] is the dimension in degree d.
    std::vector<std::size_t> dims;

    // Zero outside the stored range.
    std::size_t operator()(int d) const {
        const int idx = d + 1;
        return idx >= 0 && static_cast<std::size_t>(idx) < dims.size() ? dims[idx] : 0;
    }
    int max_degree() const { return static_cast<int>(dims.size()) - 2; }

    friend bool operator==(const HomologyDims&, const HomologyDims&) = default;
};

HomologyDims reduced_homology_dims(const SimplicialComplex& c, Field f = Field::rationals());

// Reduced homology of the clique complex of a graph on at most 64 vertices
// given as adjacency words (bit q of adjacency[p] set iff p ~ q, 0-based).
// Same result as reduced_homology_dims(clique_complex(g), f) without
// materialising the complex; this is the Hochster oracle's inner loop.
HomologyDims clique_complex_homology(std::span<const std::uint64_t> adjacency, Field f = Field::rationals());

}  // namespace edgebetti
