#include "edgebetti/graph.hpp"

#include <algorithm>
#include <string>

#include "edgebetti/error.hpp"

namespace edgebetti {

VertexSet::VertexSet(std::size_t universe) : bits_(universe) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : bits_(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
    VertexSet s(universe);
    for (std::size_t b = 0; b < 64 && mask >> b; ++b) {
        if ((mask >> b) & 1U) s.insert(b + 1);
    }
    return s;
}

void VertexSet::insert(Vertex v) {
    if (v < 1 || v > bits_.size()) {
        throw InputError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(bits_.size()));
    }
    bits_.set(v - 1);
}

void VertexSet::erase(Vertex v) {
    if (v >= 1 && v <= bits_.size()) bits_.reset(v - 1);
}

Vertex VertexSet::first() const {
    auto b = bits_.find_first();
    return b == Bits::npos ? 0 : b + 1;
}

Vertex VertexSet::next(Vertex v) const {
    auto b = bits_.find_next(v - 1);
    return b == Bits::npos ? 0 : b + 1;
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    if (other.universe() == universe()) return bits_.is_subset_of(other.bits_);
    bool ok = true;
    for_each([&](Vertex v) { ok = ok && other.contains(v); });
    return ok;
}

bool VertexSet::intersects(const VertexSet& other) const { return bits_.intersects(other.bits_); }

std::uint64_t VertexSet::to_mask() const {
    std::uint64_t m = 0;
    for_each([&](Vertex v) {
        if (v <= 64) m |= std::uint64_t{1} << (v - 1);
    });
    return m;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    bits_ &= o.bits_;
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    bits_ |= o.bits_;
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    bits_ -= o.bits_;
    return *this;
}

Graph::Graph(std::size_t n, std::span<const Edge> edges, std::size_t vertex_cap) : n_(n) {
    if (n > vertex_cap) {
        throw ResourceError("graph has " + std::to_string(n) + " vertices, above the vertex cap of " +
                            std::to_string(vertex_cap));
    }
    adj_.assign(n, VertexSet(n));
    for (const Edge& e : edges) {
        const std::string where = "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
            throw InputError(where + " has an endpoint outside 1.." + std::to_string(n));
        }
        if (e.u == e.v) throw InputError(where + " is a loop");
        if (adj_[e.u - 1].contains(e.v)) throw InputError(where + " is a duplicate");
        adj_[e.u - 1].insert(e.v);
        adj_[e.v - 1].insert(e.u);
        ++m_;
    }
    if (n <= 64) {
        word_adj_.resize(n);
        for (std::size_t i = 0; i < n; ++i) word_adj_[i] = adj_[i].to_mask();
    }
}

Graph Graph::from_edge_mask(std::size_t n, std::uint64_t mask) {
    if (n * (n - (n > 0 ? 1 : 0)) / 2 > 64) throw InputError("edge masks cover at most 11 vertices");
    std::vector<Edge> es;
    std::size_t t = 0;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v, ++t) {
            if ((mask >> t) & 1U) es.push_back({u, v});
        }
    }
    return Graph(n, es);
}

std::uint64_t Graph::edge_mask() const {
    if (n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2 > 64) throw InputError("edge masks cover at most 11 vertices");
    std::uint64_t mask = 0;
    std::size_t t = 0;
    for (Vertex u = 1; u <= n_; ++u) {
        for (Vertex v = u + 1; v <= n_; ++v, ++t) {
            if (adjacent(u, v)) mask |= std::uint64_t{1} << t;
        }
    }
    return mask;
}

void Graph::check_vertex(Vertex v) const {
    if (v < 1 || v > n_) throw InputError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    return adj_[u - 1].contains(v);
}

const VertexSet& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v - 1];
}

VertexSet Graph::vertices() const {
    VertexSet s(n_);
    for (Vertex v = 1; v <= n_; ++v) s.insert(v);
    return s;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 1; u <= n_; ++u) {
        adj_[u - 1].for_each([&](Vertex v) {
            if (u < v) out.push_back({u, v});
        });
    }
    return out;
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
    check_vertex(v);
    if (word_adj_.empty()) throw ResourceError("word adjacency needs at most 64 vertices");
    return word_adj_[v - 1];
}

std::size_t degree(const Graph& g, Vertex v) { return g.neighbors(v).size(); }

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    const std::size_t n = g.vertex_count();
    VertexSet members(n);
    s.for_each([&](Vertex v) {
        if (v > n) throw InputError("vertex " + std::to_string(v) + " is not in the graph");
        members.insert(v);
    });

    InducedSubgraph out;
    out.labels = members.members();
    std::vector<std::size_t> relabel(n + 1, 0);
    for (std::size_t k = 0; k < out.labels.size(); ++k) relabel[out.labels[k]] = k + 1;

    std::vector<Edge> es;
    for (Vertex u : out.labels) {
        (g.neighbors(u) & members).for_each([&](Vertex v) {
            if (u < v) es.push_back({relabel[u], relabel[v]});
        });
    }
    out.graph = Graph(out.labels.size(), es, std::max(out.labels.size(), kDefaultVertexCap));
    return out;
}

Graph complement(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<Edge> es;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
            if (!g.adjacent(u, v)) es.push_back({u, v});
        }
    }
    return Graph(n, es, std::max(n, kDefaultVertexCap));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const std::size_t shift = a.vertex_count();
    std::vector<Edge> es = a.edges();
    for (const Edge& e : b.edges()) es.push_back({e.u + shift, e.v + shift});
    const std::size_t n = shift + b.vertex_count();
    return Graph(n, es, std::max(n, kDefaultVertexCap));
}

std::vector<VertexSet> components(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<VertexSet> out;
    VertexSet unseen = g.vertices();
    while (!unseen.empty()) {
        VertexSet comp(n);
        VertexSet frontier(n);
        frontier.insert(unseen.first());
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet reached(n);
            frontier.for_each([&](Vertex v) { reached |= g.neighbors(v); });
            frontier = reached - comp;
        }
        unseen -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

std::size_t isolated_vertex_count(const Graph& g) {
    std::size_t count = 0;
    for (Vertex v = 1; v <= g.vertex_count(); ++v) count += g.neighbors(v).empty() ? 1 : 0;
    return count;
}

std::optional<std::vector<Vertex>> perfect_elimination_order(const Graph& g) {
    const std::size_t n = g.vertex_count();
    // Maximum-cardinality search visits vertices in reverse elimination order.
    std::vector<std::size_t> weight(n + 1, 0);
    std::vector<bool> visited(n + 1, false);
    std::vector<Vertex> visit;
    visit.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = 0;
        for (Vertex v = 1; v <= n; ++v) {
            if (!visited[v] && (best == 0 || weight[v] > weight[best])) best = v;
        }
        visited[best] = true;
        visit.push_back(best);
        g.neighbors(best).for_each([&](Vertex w) {
            if (!visited[w]) ++weight[w];
        });
    }
    std::vector<Vertex> order(visit.rbegin(), visit.rend());

    std::vector<std::size_t> pos(n + 1, 0);
    for (std::size_t k = 0; k < n; ++k) pos[order[k]] = k;
    for (Vertex v : order) {
        VertexSet later(n);
        Vertex parent = 0;
        g.neighbors(v).for_each([&](Vertex w) {
            if (pos[w] > pos[v]) {
                later.insert(w);
                if (parent == 0 || pos[w] < pos[parent]) parent = w;
            }
        });
        if (parent == 0) continue;
        later.erase(parent);
        if (!later.is_subset_of(g.neighbors(parent))) return std::nullopt;
    }
    return order;
}

bool is_chordal(const Graph& g) { return perfect_elimination_order(g).has_value(); }

bool has_induced_c4(const Graph& g) {
    // An induced C4 is a non-adjacent pair whose common neighbourhood holds
    // another non-adjacent pair.
    const std::size_t n = g.vertex_count();
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex w = u + 1; w <= n; ++w) {
            if (g.adjacent(u, w)) continue;
            const VertexSet common = g.neighbors(u) & g.neighbors(w);
            if (common.size() < 2) continue;
            bool found = false;
            common.for_each([&](Vertex x) {
                if (found) return;
                VertexSet rest = common - g.neighbors(x);
                rest.erase(x);
                found = !rest.empty();
            });
            if (found) return true;
        }
    }
    return false;
}

}  // namespace edgebetti
