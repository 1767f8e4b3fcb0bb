#include "edgebetti/generators.hpp"

#include <queue>
#include <random>
#include <string>
#include <vector>

#include "edgebetti/error.hpp"

namespace edgebetti {

Graph empty_graph(std::size_t n) { return Graph(n, std::span<const Edge>{}); }

Graph complete_graph(std::size_t n) {
    std::vector<Edge> es;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) es.push_back({u, v});
    }
    return Graph(n, es);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
    if (a < 1 || b < 1) throw InputError("complete bipartite graph needs both parts non-empty");
    std::vector<Edge> es;
    for (Vertex u = 1; u <= a; ++u) {
        for (Vertex v = a + 1; v <= a + b; ++v) es.push_back({u, v});
    }
    return Graph(a + b, es);
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices, got " + std::to_string(n));
    std::vector<Edge> es;
    for (Vertex u = 1; u < n; ++u) es.push_back({u, u + 1});
    es.push_back({1, n});
    return Graph(n, es);
}

Graph path_graph(std::size_t n) {
    if (n < 1) throw InputError("path needs at least 1 vertex");
    std::vector<Edge> es;
    for (Vertex u = 1; u < n; ++u) es.push_back({u, u + 1});
    return Graph(n, es);
}

Graph wheel_graph(std::size_t n) {
    if (n < 3) throw InputError("wheel rim needs at least 3 vertices, got " + std::to_string(n));
    std::vector<Edge> es;
    for (Vertex v = 2; v <= n + 1; ++v) es.push_back({1, v});
    for (Vertex v = 2; v <= n; ++v) es.push_back({v, v + 1});
    es.push_back({2, n + 1});
    return Graph(n + 1, es);
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed, std::size_t vertex_cap) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
    if (n > vertex_cap) {
        throw ResourceError("graph has " + std::to_string(n) + " vertices, above the vertex cap of " +
                            std::to_string(vertex_cap));
    }
    std::mt19937_64 rng(seed);
    std::vector<Edge> es;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
            const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (x < p) es.push_back({u, v});
        }
    }
    return Graph(n, es, vertex_cap);
}

Graph random_tree(std::size_t n, std::uint64_t seed, std::size_t vertex_cap) {
    if (n < 1) throw InputError("tree needs at least 1 vertex");
    if (n > vertex_cap) {
        throw ResourceError("graph has " + std::to_string(n) + " vertices, above the vertex cap of " +
                            std::to_string(vertex_cap));
    }
    if (n == 1) return Graph(1, std::span<const Edge>{}, vertex_cap);
    if (n == 2) return Graph(2, {Edge{1, 2}}, vertex_cap);

    std::mt19937_64 rng(seed);
    std::vector<Vertex> code(n - 2);
    for (auto& c : code) c = 1 + static_cast<Vertex>(rng() % n);

    std::vector<std::size_t> remaining(n + 1, 1);
    for (Vertex c : code) ++remaining[c];
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 1; v <= n; ++v) {
        if (remaining[v] == 1) leaves.push(v);
    }
    std::vector<Edge> es;
    for (Vertex c : code) {
        const Vertex leaf = leaves.top();
        leaves.pop();
        es.push_back({std::min(leaf, c), std::max(leaf, c)});
        if (--remaining[c] == 1) leaves.push(c);
    }
    const Vertex a = leaves.top();
    leaves.pop();
    const Vertex b = leaves.top();
    es.push_back({std::min(a, b), std::max(a, b)});
    return Graph(n, es, vertex_cap);
}

}  // namespace edgebetti
