#include "edgebetti/homology.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "edgebetti/error.hpp"

namespace edgebetti {
namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q) {
        if (p % q == 0) return false;
    }
    return true;
}

struct BareissOverflow {};

// One fraction-free update (a * pivot - b * c) / previous_pivot. The
// division is exact; the quotient is a minor of the input matrix.
struct MachineStep {
    std::int64_t operator()(std::int64_t a, std::int64_t pivot, std::int64_t b, std::int64_t c,
                            std::int64_t previous) const {
        __int128 v = static_cast<__int128>(a) * pivot - static_cast<__int128>(b) * c;
        v /= previous;
        if (v > INT64_MAX || v < INT64_MIN) throw BareissOverflow{};
        return static_cast<std::int64_t>(v);
    }
};

struct BigStep {
    using Big = boost::multiprecision::cpp_int;
    Big operator()(const Big& a, const Big& pivot, const Big& b, const Big& c, const Big& previous) const {
        return (a * pivot - b * c) / previous;
    }
};

template <typename T, typename Step>
std::size_t bareiss_rank(std::vector<T> a, std::size_t rows, std::size_t cols, Step step) {
    auto at = [&](std::size_t r, std::size_t c) -> T& { return a[r * cols + c]; };
    auto magnitude = [](const T& v) { return v < 0 ? T(-v) : v; };
    T previous = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot_row = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (at(r, c) != 0 && (pivot_row == rows || magnitude(at(r, c)) < magnitude(at(pivot_row, c)))) {
                pivot_row = r;
            }
        }
        if (pivot_row == rows) continue;
        if (pivot_row != rank) {
            for (std::size_t j = c; j < cols; ++j) std::swap(at(pivot_row, j), at(rank, j));
        }
        const T pivot = at(rank, c);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const T lead = at(r, c);
            for (std::size_t j = c + 1; j < cols; ++j) at(r, j) = step(at(r, j), pivot, lead, at(rank, j), previous);
            at(r, c) = 0;
        }
        previous = pivot;
        ++rank;
    }
    return rank;
}

std::uint64_t power_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1U) result = result * base % p;
        base = base * base % p;
        exp >>= 1U;
    }
    return result;
}

std::size_t modular_rank(const IntMatrix& m, std::uint64_t p) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::uint64_t> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const std::int64_t v = m(r, c) % static_cast<std::int64_t>(p);
            a[r * cols + c] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
        }
    }
    auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return a[r * cols + c]; };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot_row = rank;
        while (pivot_row < rows && at(pivot_row, c) == 0) ++pivot_row;
        if (pivot_row == rows) continue;
        if (pivot_row != rank) {
            for (std::size_t j = c; j < cols; ++j) std::swap(at(pivot_row, j), at(rank, j));
        }
        const std::uint64_t inv = power_mod(at(rank, c), p - 2, p);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (at(r, c) == 0) continue;
            const std::uint64_t factor = at(r, c) * inv % p;
            for (std::size_t j = c; j < cols; ++j) {
                at(r, j) = (at(r, j) + (p - factor) * at(rank, j)) % p;
            }
        }
        ++rank;
    }
    return rank;
}

void validate_face(const Face& f, std::size_t n, std::size_t expected_size) {
    if (f.size() != expected_size) throw InputError("face has the wrong number of vertices for its dimension");
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (f[k] < 1 || f[k] > n) throw InputError("face vertex " + std::to_string(f[k]) + " out of range");
        if (k > 0 && f[k - 1] >= f[k]) throw InputError("face vertices must be strictly ascending");
    }
}

void collect_cliques(const Graph& g, Face& face, VertexSet candidates, std::vector<std::vector<Face>>& out) {
    for (Vertex v = candidates.first(); v != 0; v = candidates.first()) {
        candidates.erase(v);
        face.push_back(v);
        if (out.size() < face.size()) out.resize(face.size());
        out[face.size() - 1].push_back(face);
        collect_cliques(g, face, candidates & g.neighbors(v), out);
        face.pop_back();
    }
}

void collect_clique_masks(std::span<const std::uint64_t> adjacency, std::uint64_t face, std::uint64_t candidates,
                          std::size_t size, std::vector<std::vector<std::uint64_t>>& out) {
    while (candidates != 0) {
        const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
        candidates &= candidates - 1;
        const std::uint64_t grown = face | (std::uint64_t{1} << v);
        if (out.size() <= size) out.resize(size + 1);
        out[size].push_back(grown);
        collect_clique_masks(adjacency, grown, candidates & adjacency[v], size + 1, out);
    }
}

}  // namespace

Field::Field(std::uint32_t characteristic) : characteristic_(characteristic) {
    if (characteristic != 0 && (!is_prime(characteristic) || characteristic >= (1U << 31))) {
        throw InputError("field characteristic must be 0 or a prime below 2^31, got " +
                         std::to_string(characteristic));
    }
}

SimplicialComplex::SimplicialComplex(std::size_t n_vertices, std::vector<std::vector<Face>> faces_by_dim)
    : n_vertices_(n_vertices), faces_by_dim_(std::move(faces_by_dim)) {
    while (!faces_by_dim_.empty() && faces_by_dim_.back().empty()) faces_by_dim_.pop_back();
    for (std::size_t d = 0; d < faces_by_dim_.size(); ++d) {
        auto& layer = faces_by_dim_[d];
        for (const Face& f : layer) validate_face(f, n_vertices_, d + 1);
        std::sort(layer.begin(), layer.end());
        if (std::adjacent_find(layer.begin(), layer.end()) != layer.end()) {
            throw InputError("duplicate face in dimension " + std::to_string(d));
        }
        if (d == 0) continue;
        const auto& below = faces_by_dim_[d - 1];
        for (const Face& f : layer) {
            for (std::size_t k = 0; k < f.size(); ++k) {
                Face facet = f;
                facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(k));
                if (!std::binary_search(below.begin(), below.end(), facet)) {
                    throw InputError("complex is not closed under taking facets");
                }
            }
        }
    }
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t n_vertices, const std::vector<Face>& facets) {
    std::vector<std::set<Face>> layers;
    for (const Face& facet : facets) {
        if (facet.empty()) continue;
        Face sorted = facet;
        std::sort(sorted.begin(), sorted.end());
        validate_face(sorted, n_vertices, sorted.size());
        const std::size_t k = sorted.size();
        if (layers.size() < k) layers.resize(k);
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
            Face sub;
            for (std::size_t t = 0; t < k; ++t) {
                if ((mask >> t) & 1U) sub.push_back(sorted[t]);
            }
            layers[sub.size() - 1].insert(std::move(sub));
        }
    }
    std::vector<std::vector<Face>> faces;
    for (auto& layer : layers) faces.emplace_back(layer.begin(), layer.end());
    return SimplicialComplex(n_vertices, std::move(faces));
}

std::size_t SimplicialComplex::face_count(int d) const {
    if (d == -1) return 1;
    return faces(d).size();
}

const std::vector<Face>& SimplicialComplex::faces(int d) const {
    static const std::vector<Face> none;
    if (d < 0 || d > dimension()) return none;
    return faces_by_dim_[static_cast<std::size_t>(d)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Face& f) const {
    if (f.empty()) return 0;
    const auto& layer = faces(static_cast<int>(f.size()) - 1);
    auto it = std::lower_bound(layer.begin(), layer.end(), f);
    if (it == layer.end() || *it != f) return std::nullopt;
    return static_cast<std::size_t>(it - layer.begin());
}

SimplicialComplex clique_complex(const Graph& g) {
    std::vector<std::vector<Face>> faces;
    Face face;
    collect_cliques(g, face, g.vertices(), faces);
    return SimplicialComplex(g.vertex_count(), std::move(faces));
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (data_.size() != rows * cols) throw InputError("matrix data does not match its shape");
}

IntMatrix IntMatrix::from_sparse(const SparseIntMatrix& m) {
    IntMatrix dense(m.rows, m.cols);
    for (std::size_t c = 0; c < m.cols; ++c) {
        for (const auto& [r, v] : m.columns[c]) dense(r, c) = v;
    }
    return dense;
}

SparseIntMatrix boundary_matrix(const SimplicialComplex& c, int d) {
    if (d < 0 || d > c.dimension()) {
        throw InputError("boundary degree " + std::to_string(d) + " outside 0.." + std::to_string(c.dimension()));
    }
    const auto& cols = c.faces(d);
    SparseIntMatrix m;
    m.rows = c.face_count(d - 1);
    m.cols = cols.size();
    m.columns.resize(cols.size());
    if (d == 0) {
        for (auto& col : m.columns) col.emplace_back(0, 1);
        return m;
    }
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Face& f = cols[j];
        for (std::size_t k = 0; k < f.size(); ++k) {
            Face facet = f;
            facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(k));
            const auto row = c.index_of(facet);
            if (!row) throw InvariantViolation("facet missing from a validated complex");
            m.columns[j].emplace_back(*row, k % 2 == 0 ? 1 : -1);
        }
        std::sort(m.columns[j].begin(), m.columns[j].end());
    }
    return m;
}

std::size_t rank_exact(const IntMatrix& m, Field f) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (!f.is_rational()) return modular_rank(m, f.characteristic());

    std::vector<std::int64_t> data(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) data[r * m.cols() + c] = m(r, c);
    }
    try {
        return bareiss_rank(std::move(data), m.rows(), m.cols(), MachineStep{});
    } catch (const BareissOverflow&) {
        std::vector<BigStep::Big> big(m.rows() * m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) big[r * m.cols() + c] = m(r, c);
        }
        return bareiss_rank(std::move(big), m.rows(), m.cols(), BigStep{});
    }
}

std::size_t rank_exact(const SparseIntMatrix& m, Field f) { return rank_exact(IntMatrix::from_sparse(m), f); }

HomologyDims reduced_homology_dims(const SimplicialComplex& c, Field f) {
    const int top = c.dimension();
    // ranks[d] = rank of the boundary out of degree d; ranks[top + 1] = 0.
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
    for (int d = 0; d <= top; ++d) ranks[static_cast<std::size_t>(d)] = rank_exact(boundary_matrix(c, d), f);

    HomologyDims out;
    out.dims.resize(static_cast<std::size_t>(top + 2));
    out.dims[0] = 1 - (top >= 0 ? ranks[0] : 0);
    for (int d = 0; d <= top; ++d) {
        const auto ud = static_cast<std::size_t>(d);
        out.dims[ud + 1] = c.face_count(d) - ranks[ud] - ranks[ud + 1];
    }
    return out;
}

HomologyDims clique_complex_homology(std::span<const std::uint64_t> adjacency, Field f) {
    const std::size_t k = adjacency.size();
    if (k > 64) throw ResourceError("word-level clique complexes need at most 64 vertices");
    // layers[d] holds the d-faces as vertex masks, sorted for lookup. Face
    // order does not affect ranks.
    std::vector<std::vector<std::uint64_t>> layers;
    const std::uint64_t all = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    collect_clique_masks(adjacency, 0, all, 0, layers);
    for (auto& layer : layers) std::sort(layer.begin(), layer.end());

    const int top = static_cast<int>(layers.size()) - 1;
    std::vector<std::size_t> ranks(layers.size() + 1, 0);
    if (top >= 0) ranks[0] = 1;
    for (int d = 1; d <= top; ++d) {
        const auto& cols = layers[static_cast<std::size_t>(d)];
        const auto& rows = layers[static_cast<std::size_t>(d) - 1];
        IntMatrix m(rows.size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            std::uint64_t rest = cols[j];
            for (int pos = 0; rest != 0; ++pos, rest &= rest - 1) {
                const std::uint64_t facet = cols[j] & ~(rest & (~rest + 1));
                const auto row = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), facet) - rows.begin());
                m(row, j) = pos % 2 == 0 ? 1 : -1;
            }
        }
        ranks[static_cast<std::size_t>(d)] = rank_exact(m, f);
    }

    HomologyDims out;
    out.dims.resize(static_cast<std::size_t>(top + 2));
    out.dims[0] = 1 - ranks[0];
    for (int d = 0; d <= top; ++d) {
        const auto ud = static_cast<std::size_t>(d);
        out.dims[ud + 1] = layers[ud].size() - ranks[ud] - ranks[ud + 1];
    }
    return out;
}

}  // namespace edgebetti
