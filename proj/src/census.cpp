#include "edgebetti/census.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "edgebetti/error.hpp"
#include "edgebetti/generators.hpp"

namespace edgebetti {
namespace {

constexpr std::size_t pair_index(std::size_t p, std::size_t q, std::size_t k) {
    // 0-based p < q on k vertices, lexicographic pair order.
    return p * k - p * (p + 1) / 2 + (q - p - 1);
}

std::uint16_t code_of(const std::array<std::array<bool, kMaxPatternVertices>, kMaxPatternVertices>& adj,
                      std::size_t k) {
    std::uint16_t code = 0;
    for (std::size_t p = 0; p < k; ++p) {
        for (std::size_t q = p + 1; q < k; ++q) {
            if (adj[p][q]) code |= static_cast<std::uint16_t>(1U << pair_index(p, q, k));
        }
    }
    return code;
}

// canonical[k][code] for every labeled graph on k <= 5 vertices.
const std::array<std::vector<std::uint16_t>, kMaxPatternVertices + 1>& canonical_tables() {
    static const auto tables = [] {
        std::array<std::vector<std::uint16_t>, kMaxPatternVertices + 1> t;
        for (std::size_t k = 0; k <= kMaxPatternVertices; ++k) {
            const std::size_t pairs = k * (k - (k > 0 ? 1 : 0)) / 2;
            t[k].assign(std::size_t{1} << pairs, 0);
            std::vector<std::size_t> perm(k);
            for (std::uint32_t code = 0; code < (1U << pairs); ++code) {
                std::array<std::array<bool, kMaxPatternVertices>, kMaxPatternVertices> adj{};
                for (std::size_t p = 0; p < k; ++p) {
                    for (std::size_t q = p + 1; q < k; ++q) {
                        adj[p][q] = adj[q][p] = (code >> pair_index(p, q, k)) & 1U;
                    }
                }
                std::iota(perm.begin(), perm.end(), std::size_t{0});
                auto best = static_cast<std::uint16_t>(code);
                do {
                    std::array<std::array<bool, kMaxPatternVertices>, kMaxPatternVertices> relabeled{};
                    for (std::size_t p = 0; p < k; ++p) {
                        for (std::size_t q = 0; q < k; ++q) relabeled[perm[p]][perm[q]] = adj[p][q];
                    }
                    best = std::min(best, code_of(relabeled, k));
                } while (std::next_permutation(perm.begin(), perm.end()));
                t[k][code] = best;
            }
        }
        return t;
    }();
    return tables;
}

// Visits every k-subset (ascending vertex list) whose induced graph has
// exactly target_edges edges, pruning partial subsets that already have
// too many edges or can no longer reach the target.
template <typename Leaf>
void for_each_subset_with_edges(const Graph& g, std::size_t k, std::size_t target_edges, Leaf&& leaf) {
    const std::size_t n = g.vertex_count();
    if (k > n || target_edges > k * (k - (k > 0 ? 1 : 0)) / 2) return;
    std::vector<Vertex> chosen;
    chosen.reserve(k);

    auto recurse = [&](auto&& self, Vertex start, std::size_t edges) -> void {
        const std::size_t have = chosen.size();
        if (have == k) {
            leaf(chosen);
            return;
        }
        const std::size_t rest = k - have;
        if (edges + have * rest + rest * (rest - 1) / 2 < target_edges) return;
        for (Vertex v = start; v + rest - 1 <= n; ++v) {
            std::size_t added = 0;
            for (Vertex u : chosen) added += g.adjacent(u, v) ? 1 : 0;
            if (edges + added > target_edges) continue;
            chosen.push_back(v);
            self(self, v + 1, edges + added);
            chosen.pop_back();
        }
    };
    recurse(recurse, 1, 0);
}

std::vector<std::size_t> induced_degrees(const Graph& g, const std::vector<Vertex>& s) {
    std::vector<std::size_t> deg(s.size(), 0);
    for (std::size_t p = 0; p < s.size(); ++p) {
        for (std::size_t q = p + 1; q < s.size(); ++q) {
            if (g.adjacent(s[p], s[q])) {
                ++deg[p];
                ++deg[q];
            }
        }
    }
    std::sort(deg.begin(), deg.end());
    return deg;
}

bool induced_connected(const Graph& g, const std::vector<Vertex>& s) {
    std::vector<bool> seen(s.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t p = stack.back();
        stack.pop_back();
        for (std::size_t q = 0; q < s.size(); ++q) {
            if (!seen[q] && g.adjacent(s[p], s[q])) {
                seen[q] = true;
                ++reached;
                stack.push_back(q);
            }
        }
    }
    return reached == s.size();
}

// Cliques of size `need` inside `candidates`.
Count count_cliques_within(const Graph& g, VertexSet candidates, std::size_t need) {
    if (need == 0) return 1;
    if (candidates.size() < need) return 0;
    if (need == 1) return static_cast<Count>(candidates.size());
    Count total = 0;
    for (Vertex v = candidates.first(); v != 0; v = candidates.first()) {
        candidates.erase(v);
        if (candidates.size() + 1 < need) break;
        total = checked_add(total, count_cliques_within(g, candidates & g.neighbors(v), need - 1));
    }
    return total;
}

// Independent sets of size `need` inside `candidates`.
Count count_independent_within(const Graph& g, VertexSet candidates, std::size_t need) {
    if (need == 0) return 1;
    if (candidates.size() < need) return 0;
    if (need == 1) return static_cast<Count>(candidates.size());
    Count total = 0;
    for (Vertex v = candidates.first(); v != 0; v = candidates.first()) {
        candidates.erase(v);
        if (candidates.size() + 1 < need) break;
        total = checked_add(total, count_independent_within(g, candidates - g.neighbors(v), need - 1));
    }
    return total;
}

// Ordered pairs (A, B): A independent of size a, B an independent b-subset
// of the common neighbourhood of A.
Count count_bipartite_pairs(const Graph& g, VertexSet candidates, VertexSet common, std::size_t a,
                            std::size_t b) {
    if (a == 0) return count_independent_within(g, common, b);
    Count total = 0;
    for (Vertex v = candidates.first(); v != 0; v = candidates.first()) {
        candidates.erase(v);
        VertexSet next_common = common & g.neighbors(v);
        if (next_common.size() < b) continue;
        total = checked_add(total, count_bipartite_pairs(g, candidates - g.neighbors(v), next_common, a - 1, b));
    }
    return total;
}

}  // namespace

std::uint16_t canonical_code(const Graph& g) {
    const std::size_t k = g.vertex_count();
    if (k > kMaxPatternVertices) {
        throw UnsupportedPattern("canonical codes cover at most 5 vertices, got " + std::to_string(k));
    }
    std::uint16_t code = 0;
    for (const Edge& e : g.edges()) code |= static_cast<std::uint16_t>(1U << pair_index(e.u - 1, e.v - 1, k));
    return canonical_tables()[k][code];
}

Pattern Pattern::make(std::string name, Graph graph) {
    const std::size_t k = graph.vertex_count();
    if (k == 0 || k > kMaxPatternVertices) {
        throw UnsupportedPattern("pattern '" + name + "' has " + std::to_string(k) +
                                 " vertices; supported sizes are 1..5");
    }
    Pattern p;
    p.name = std::move(name);
    p.connected = components(graph).size() == 1;
    p.canonical = canonical_code(graph);
    p.graph = std::move(graph);
    return p;
}

Graph graph_d() {
    // a=1, b=2, c=3, d=4, e=5; the centre e splits the b-c diagonal.
    return Graph(5, {{1, 2}, {1, 3}, {3, 4}, {2, 4}, {3, 5}, {2, 5}, {4, 5}});
}

Count count_cliques(const Graph& g, std::size_t r) {
    if (r == 0) throw InputError("clique size must be at least 1");
    if (r > g.vertex_count()) return 0;
    if (r == 1) return static_cast<Count>(g.vertex_count());
    if (r == 2) return static_cast<Count>(g.edge_count());
    return count_cliques_within(g, g.vertices(), r);
}

Count count_complete_bipartite(const Graph& g, std::size_t a, std::size_t b) {
    if (a < 1 || b < 1) throw InputError("complete bipartite parts must be non-empty");
    if (a > b) std::swap(a, b);
    if (a + b > g.vertex_count()) return 0;
    const Count ordered = count_bipartite_pairs(g, g.vertices(), g.vertices(), a, b);
    // With equal parts each subset appears once per choice of side.
    return a == b ? ordered / 2 : ordered;
}

Count count_induced_cycles(const Graph& g, std::size_t length) {
    if (length < 3 || length > 5) {
        throw UnsupportedPattern("induced cycle census covers lengths 3..5, got " + std::to_string(length));
    }
    if (length == 3) return count_cliques(g, 3);
    Count total = 0;
    for_each_subset_with_edges(g, length, length, [&](const std::vector<Vertex>& s) {
        const auto deg = induced_degrees(g, s);
        if (deg.front() == 2 && deg.back() == 2 && induced_connected(g, s)) ++total;
    });
    return total;
}

Count count_wheels_w4(const Graph& g) {
    // On five vertices, eight edges with degrees (3,3,3,3,4) force the
    // complement to be two disjoint edges plus the isolated hub.
    static const std::vector<std::size_t> wheel_degrees{3, 3, 3, 3, 4};
    Count total = 0;
    for_each_subset_with_edges(g, 5, 8, [&](const std::vector<Vertex>& s) {
        if (induced_degrees(g, s) == wheel_degrees) ++total;
    });
    return total;
}

Count count_pattern_d(const Graph& g) {
    // Seven edges with degrees (2,3,3,3,3): the complement has degrees
    // (2,1,1,1,1), i.e. a 3-vertex path plus a disjoint edge.
    static const std::vector<std::size_t> d_degrees{2, 3, 3, 3, 3};
    Count total = 0;
    for_each_subset_with_edges(g, 5, 7, [&](const std::vector<Vertex>& s) {
        if (induced_degrees(g, s) == d_degrees) ++total;
    });
    return total;
}

Count count_induced_isomorphic(const Graph& g, const Pattern& pattern) {
    const std::size_t k = pattern.graph.vertex_count();
    if (k == 0 || k > kMaxPatternVertices) {
        throw UnsupportedPattern("pattern '" + pattern.name + "' is outside the supported size range 1..5");
    }
    const auto& table = canonical_tables()[k];
    Count total = 0;
    for_each_subset_with_edges(g, k, pattern.graph.edge_count(), [&](const std::vector<Vertex>& s) {
        std::uint16_t code = 0;
        for (std::size_t p = 0; p < k; ++p) {
            for (std::size_t q = p + 1; q < k; ++q) {
                if (g.adjacent(s[p], s[q])) code |= static_cast<std::uint16_t>(1U << pair_index(p, q, k));
            }
        }
        if (table[code] == pattern.canonical) ++total;
    });
    return total;
}

CensusReport take_census(const Graph& g) {
    const std::size_t n = g.vertex_count();
    CensusReport report;
    for (std::size_t r = 2; r <= std::max<std::size_t>(n, 2); ++r) report.cliques[r] = count_cliques(g, r);
    for (std::size_t a = 2; 2 * a <= n; ++a) {
        for (std::size_t b = a; a + b <= n; ++b) report.bipartite[{a, b}] = count_complete_bipartite(g, a, b);
    }
    report.c4 = count_induced_cycles(g, 4);
    report.w4 = count_wheels_w4(g);
    report.d = count_pattern_d(g);
    return report;
}

}  // namespace edgebetti
