#pragma once

#include <cstddef>
#include <cstdint>

#include "edgebetti/graph.hpp"

namespace edgebetti {

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);

// Parts {1..a} and {a+1..a+b}.
Graph complete_bipartite_graph(std::size_t a, std::size_t b);

// 1-2-...-n-1; n >= 3.
Graph cycle_graph(std::size_t n);

// 1-2-...-n; n >= 1.
Graph path_graph(std::size_t n);

// Hub 1 joined to the rim cycle 2-3-...-(n+1)-2; n >= 3, so W_n has n + 1
// vertices.
Graph wheel_graph(std::size_t n);

// Erdos-Renyi G(n, p). Pairs (u, v), u < v, are visited in lexicographic
// order; each consumes one std::mt19937_64 draw x and becomes an edge iff
// (x >> 11) * 2^-53 < p. Fully determined by (n, p, seed) on every platform.
Graph random_graph(std::size_t n, double p, std::uint64_t seed, std::size_t vertex_cap = kDefaultVertexCap);

// Uniform labeled tree via a Pruefer sequence of n - 2 entries, each
// 1 + (x mod n) for successive std::mt19937_64 draws x.
Graph random_tree(std::size_t n, std::uint64_t seed, std::size_t vertex_cap = kDefaultVertexCap);

}  // namespace edgebetti
