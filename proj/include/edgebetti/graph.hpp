#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace edgebetti {

// Vertices are labeled 1..n throughout the public API.
using Vertex = std::size_t;

// Graphs larger than one bitset word are rejected unless the caller raises
// the cap explicitly.
inline constexpr std::size_t kDefaultVertexCap = 64;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Subset of {1..universe}.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

    // Bit b of mask is vertex b + 1.
    static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

    std::size_t universe() const { return bits_.size(); }
    std::size_t size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }

    // Out-of-range vertices are simply not members.
    bool contains(Vertex v) const { return v >= 1 && v <= bits_.size() && bits_.test(v - 1); }

    // Throws InputError when v is outside 1..universe.
    void insert(Vertex v);
    void erase(Vertex v);

    // 0 when there is no such member.
    Vertex first() const;
    Vertex next(Vertex v) const;

    std::vector<Vertex> members() const;
    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    // Only meaningful when universe <= 64.
    std::uint64_t to_mask() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (auto b = bits_.find_first(); b != Bits::npos; b = bits_.find_next(b)) fn(Vertex{b + 1});
    }

    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    using Bits = boost::dynamic_bitset<std::uint64_t>;
    Bits bits_;
};

// Simple undirected graph on vertices 1..n. Immutable once built.
class Graph {
public:
    Graph() = default;

    // Validates every edge: endpoints in 1..n, no loops, no duplicates
    // (InputError). n above vertex_cap is a ResourceError.
    Graph(std::size_t n, std::span<const Edge> edges, std::size_t vertex_cap = kDefaultVertexCap);
    Graph(std::size_t n, std::initializer_list<Edge> edges, std::size_t vertex_cap = kDefaultVertexCap)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size()), vertex_cap) {}

    // Edge mask bit t is the t-th pair of (1,2), (1,3), ..., (1,n), (2,3), ...
    // Requires C(n, 2) <= 64.
    static Graph from_edge_mask(std::size_t n, std::uint64_t mask);
    std::uint64_t edge_mask() const;

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }

    bool adjacent(Vertex u, Vertex v) const;
    const VertexSet& neighbors(Vertex v) const;
    VertexSet vertices() const;

    // Lexicographically sorted with u < v.
    std::vector<Edge> edges() const;

    // Adjacency of v as a word; requires n <= 64.
    std::uint64_t neighbor_mask(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    void check_vertex(Vertex v) const;

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::uint64_t> word_adj_;
};

struct InducedSubgraph {
    Graph graph;
    // labels[k - 1] is the original vertex that became vertex k.
    std::vector<Vertex> labels;
};

std::size_t degree(const Graph& g, Vertex v);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

Graph complement(const Graph& g);

// Disjoint union; vertices of b are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

// Connected components ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
std::size_t isolated_vertex_count(const Graph& g);

// Maximum-cardinality search order, reversed, when it is a perfect
// elimination ordering; nullopt otherwise.
std::optional<std::vector<Vertex>> perfect_elimination_order(const Graph& g);
bool is_chordal(const Graph& g);

bool has_induced_c4(const Graph& g);

}  // namespace edgebetti
