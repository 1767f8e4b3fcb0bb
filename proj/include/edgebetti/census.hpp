#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "edgebetti/combinatorics.hpp"
#include "edgebetti/graph.hpp"

namespace edgebetti {

inline constexpr std::size_t kMaxPatternVertices = 5;

// Upper triangle of the adjacency matrix as a bitmask, pairs in
// lexicographic order, minimised over every relabeling. Unique per
// isomorphism class of graphs on at most five vertices.
std::uint16_t canonical_code(const Graph& g);

struct Pattern {
    std::string name;
    Graph graph;
    bool connected = true;
    std::uint16_t canonical = 0;

    // Throws UnsupportedPattern for graphs above kMaxPatternVertices or
    // with no vertices.
    static Pattern make(std::string name, Graph graph);
};

// The 5-vertex, 7-edge graph with edges ab, ac, cd, bd, ce, be, ed
// (a..e = 1..5). Its complement is a 3-vertex path plus a disjoint edge.
Graph graph_d();

// Throws InputError for r == 0. Zero when r exceeds the vertex count.
Count count_cliques(const Graph& g, std::size_t r);

// Induced copies of K_{a,b}, one per vertex subset. Symmetric in a, b.
Count count_complete_bipartite(const Graph& g, std::size_t a, std::size_t b);

// Chordless cycles of length 3, 4 or 5; other lengths throw
// UnsupportedPattern.
Count count_induced_cycles(const Graph& g, std::size_t length);

Count count_wheels_w4(const Graph& g);
Count count_pattern_d(const Graph& g);

// Generic engine: number of vertex subsets inducing a graph isomorphic to
// the pattern.
Count count_induced_isomorphic(const Graph& g, const Pattern& pattern);

struct CensusReport {
    std::map<std::size_t, Count> cliques;
    // Keys normalised to a <= b.
    std::map<std::pair<std::size_t, std::size_t>, Count> bipartite;
    Count c4 = 0;
    Count w4 = 0;
    Count d = 0;

    // Lookups of keys that were not censused throw std::out_of_range.
    Count k(std::size_t r) const { return cliques.at(r); }
    Count k(std::size_t a, std::size_t b) const { return bipartite.at({std::min(a, b), std::max(a, b)}); }

    friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

// k_r for 2 <= r <= n, k_{a,b} for 2 <= a <= b with a + b <= n, and the
// fixed counts c4, w4, d.
CensusReport take_census(const Graph& g);

}  // namespace edgebetti
