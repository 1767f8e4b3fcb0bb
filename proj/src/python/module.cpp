#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "edgebetti/betti.hpp"
#include "edgebetti/census.hpp"
#include "edgebetti/error.hpp"
#include "edgebetti/generators.hpp"
#include "edgebetti/homology.hpp"
#include "edgebetti/io.hpp"
#include "edgebetti/verify.hpp"

namespace py = pybind11;
using namespace edgebetti;

namespace {

Graph make_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges, std::size_t cap) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& [u, v] : edges) es.push_back({u, v});
    return Graph(n, es, cap);
}

VertexSet to_set(const Graph& g, const std::vector<Vertex>& members) {
    VertexSet s(g.vertex_count());
    for (Vertex v : members) s.insert(v);
    return s;
}

py::dict table_to_dict(const BettiTable& t) {
    py::dict d;
    for (const auto& [key, beta] : t.entries) d[py::make_tuple(key.first, key.second)] = beta;
    return d;
}

}  // namespace

PYBIND11_MODULE(_edgebetti, m) {
    m.doc() = "Graded Betti numbers of edge ideals";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<UnsupportedPattern>(m, "UnsupportedPattern", PyExc_ValueError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::pair<std::size_t, std::size_t>>{},
             py::arg("vertex_cap") = kDefaultVertexCap)
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::pair<std::size_t, std::size_t>> out;
                 for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                 return out;
             })
        .def("adjacent", &Graph::adjacent)
        .def("neighbors", [](const Graph& g, Vertex v) { return g.neighbors(v).members(); })
        .def("degree", [](const Graph& g, Vertex v) { return degree(g, v); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "Graph(n=" << g.vertex_count() << ", edges=" << g.edge_count() << ")";
            return s.str();
        });

    m.def("complete_graph", &complete_graph);
    m.def("complete_bipartite_graph", &complete_bipartite_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("path_graph", &path_graph);
    m.def("wheel_graph", &wheel_graph);
    m.def("random_graph", &random_graph, py::arg("n"), py::arg("p"), py::arg("seed"),
          py::arg("vertex_cap") = kDefaultVertexCap);
    m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed"), py::arg("vertex_cap") = kDefaultVertexCap);
    m.def("graph_d", &graph_d);

    m.def("complement", &complement);
    m.def("induced_subgraph", [](const Graph& g, const std::vector<Vertex>& s) {
        auto sub = induced_subgraph(g, to_set(g, s));
        return py::make_tuple(sub.graph, sub.labels);
    });
    m.def("components", [](const Graph& g) {
        std::vector<std::vector<Vertex>> out;
        for (const auto& c : components(g)) out.push_back(c.members());
        return out;
    });
    m.def("is_chordal", &is_chordal);
    m.def("has_induced_c4", &has_induced_c4);

    m.def("parse_edge_list", [](const std::string& text, std::size_t cap) {
        std::istringstream in(text);
        return parse_edge_list(in, cap);
    }, py::arg("text"), py::arg("vertex_cap") = kDefaultVertexCap);
    m.def("read_edge_list", &read_edge_list, py::arg("path"), py::arg("vertex_cap") = kDefaultVertexCap);
    m.def("read_json_graph", &read_json_graph, py::arg("path"), py::arg("vertex_cap") = kDefaultVertexCap);

    m.def("count_cliques", &count_cliques);
    m.def("count_complete_bipartite", &count_complete_bipartite);
    m.def("count_induced_cycles", &count_induced_cycles);
    m.def("count_wheels_w4", &count_wheels_w4);
    m.def("count_pattern_d", &count_pattern_d);
    m.def("census_json", [](const Graph& g) { return to_json(take_census(g)).dump(); });

    m.def("clique_complex_homology", [](const Graph& g, std::uint32_t field) {
        return reduced_homology_dims(clique_complex(g), Field(field)).dims;
    }, py::arg("g"), py::arg("field") = 0, "Reduced homology dimensions for degrees -1, 0, 1, ...");
    m.def("rank_exact", [](const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t field) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows[0].size();
        std::vector<std::int64_t> data;
        for (const auto& row : rows) {
            if (row.size() != c) throw InputError("ragged matrix");
            data.insert(data.end(), row.begin(), row.end());
        }
        return rank_exact(IntMatrix(r, c, std::move(data)), Field(field));
    }, py::arg("rows"), py::arg("field") = 0);

    m.def("betti_table", [](const Graph& g, std::uint32_t field, std::size_t cap, std::size_t threads) {
        OracleOptions o;
        o.cap = cap;
        o.threads = threads;
        BettiTable t;
        {
            py::gil_scoped_release release;
            t = betti_table_hochster(g, Field(field), o);
        }
        return table_to_dict(t);
    }, py::arg("g"), py::arg("field") = 0, py::arg("cap") = kDefaultOracleCap, py::arg("threads") = 0,
          "Hochster-formula Betti table as {(i, j): beta}");
    m.def("linear_strand_components", &linear_strand_components);
    m.def("linear_strand_no_c4", [](const Graph& g, std::size_t i) {
        const auto v = linear_strand_no_c4(g, i);
        return py::make_tuple(v.value, v.applicable);
    }, "Returns (value, applicable)");
    m.def("beta_2_4_exact", &beta_2_4_exact);
    m.def("beta_3_5_exact", &beta_3_5_exact);
    m.def("lower_bound", &lower_bound);
    m.def("upper_bound", &upper_bound);
    m.def("lex_segment", [](std::size_t num_edges, std::size_t n) {
        const LexSegment s = lex_segment(num_edges, n);
        py::dict d;
        d["j"] = s.rows_full;
        d["l"] = s.tail;
        d["monomials"] = s.monomials;
        d["u"] = s.max_index;
        return d;
    });
    m.def("triangle_lower_bound", &triangle_lower_bound);
    m.def("has_linear_resolution", [](const Graph& g, std::uint32_t field, bool certify) {
        const auto r = has_linear_resolution(g, Field(field), certify);
        py::dict d;
        d["complement_chordal"] = r.complement_chordal;
        d["oracle_linear"] = r.oracle_linear ? py::cast(*r.oracle_linear) : py::none();
        return d;
    }, py::arg("g"), py::arg("field") = 0, py::arg("certify") = false);
    m.def("closed_form_complete", &closed_form_complete);
    m.def("closed_form_complete_bipartite", &closed_form_complete_bipartite);
    m.def("strand_report_json", [](const Graph& g, std::uint32_t field) {
        return to_json(strand_report(g, Field(field))).dump();
    }, py::arg("g"), py::arg("field") = 0);
    m.def("check_graph", [](const Graph& g, std::uint32_t field) {
        VerifyOptions o;
        o.field = Field(field);
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& f : check_graph(g, o)) out.emplace_back(f.check, f.detail);
        return out;
    }, py::arg("g"), py::arg("field") = 0, "List of (check, detail) failures; empty when consistent");
}
