#include "edgebetti/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <set>
#include <sstream>

#include "edgebetti/error.hpp"
#include "edgebetti/generators.hpp"

namespace edgebetti {
namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;) out.push_back(tok);
    return out;
}

std::size_t parse_label(const std::string& token, std::size_t line_no) {
    std::size_t value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw InputError("line " + std::to_string(line_no) + ": '" + token + "' is not a non-negative integer");
    }
    return value;
}

std::size_t json_size(const nlohmann::json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw InputError(where + " must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

std::string cell(const std::optional<Count>& v) { return v ? std::to_string(*v) : std::string{}; }

nlohmann::ordered_json nullable(const std::optional<Count>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

Graph parse_edge_list(std::istream& in, std::size_t vertex_cap) {
    std::optional<std::size_t> declared;
    std::vector<Edge> edges;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::size_t largest = 0;
    bool content_seen = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto tokens = split_tokens(line);
        const std::string at = "line " + std::to_string(line_no) + ": ";

        if (tokens[0] == "n") {
            if (content_seen) throw InputError(at + "the 'n <count>' header must come before any edge");
            if (tokens.size() != 2) throw InputError(at + "expected 'n <count>'");
            declared = parse_label(tokens[1], line_no);
            if (*declared > vertex_cap) {
                throw ResourceError(at + "graph declares " + tokens[1] + " vertices, above the vertex cap of " +
                                    std::to_string(vertex_cap));
            }
            content_seen = true;
            continue;
        }
        content_seen = true;
        if (tokens.size() != 2) throw InputError(at + "expected an edge 'u v'");
        const std::size_t u = parse_label(tokens[0], line_no);
        const std::size_t v = parse_label(tokens[1], line_no);
        if (u == 0 || v == 0) throw InputError(at + "vertex labels start at 1");
        if (u == v) throw InputError(at + "loop at vertex " + std::to_string(u));
        if (declared && std::max(u, v) > *declared) {
            throw InputError(at + "vertex " + std::to_string(std::max(u, v)) + " exceeds declared n = " +
                             std::to_string(*declared));
        }
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
            throw InputError(at + "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
        largest = std::max({largest, u, v});
        edges.push_back({std::min(u, v), std::max(u, v)});
    }
    return Graph(declared.value_or(largest), edges, vertex_cap);
}

Graph read_edge_list(const std::filesystem::path& path, std::size_t vertex_cap) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open edge list '" + path.string() + "'");
    return parse_edge_list(in, vertex_cap);
}

Graph parse_json_graph(const nlohmann::json& doc, std::size_t vertex_cap) {
    if (!doc.is_object()) throw InputError("JSON graph must be an object with 'n' and 'edges'");
    if (!doc.contains("n")) throw InputError("JSON graph is missing 'n'");
    const std::size_t n = json_size(doc.at("n"), "'n'");
    if (n > vertex_cap) {
        throw ResourceError("graph has " + std::to_string(n) + " vertices, above the vertex cap of " +
                            std::to_string(vertex_cap));
    }
    std::vector<Edge> edges;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    if (doc.contains("edges")) {
        const auto& list = doc.at("edges");
        if (!list.is_array()) throw InputError("'edges' must be an array");
        for (std::size_t k = 0; k < list.size(); ++k) {
            const std::string at = "edges[" + std::to_string(k) + "]";
            const auto& e = list[k];
            if (!e.is_array() || e.size() != 2) throw InputError(at + " must be a 2-element array");
            const std::size_t u = json_size(e[0], at);
            const std::size_t v = json_size(e[1], at);
            if (u < 1 || v < 1 || u > n || v > n) throw InputError(at + " has an endpoint outside 1.." + std::to_string(n));
            if (u == v) throw InputError(at + " is a loop at vertex " + std::to_string(u));
            if (!seen.insert({std::min(u, v), std::max(u, v)}).second) throw InputError(at + " duplicates an earlier edge");
            edges.push_back({std::min(u, v), std::max(u, v)});
        }
    }
    return Graph(n, edges, vertex_cap);
}

Graph read_json_graph(const std::filesystem::path& path, std::size_t vertex_cap) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open JSON graph '" + path.string() + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
    return parse_json_graph(doc, vertex_cap);
}

Graph generate(const GeneratorSpec& spec, std::size_t vertex_cap) {
    using F = GeneratorSpec::Family;
    const std::size_t want = spec.family == F::complete_bipartite ? 2 : 1;
    if (spec.sizes.size() != want) throw InputError("generator expects " + std::to_string(want) + " size parameter(s)");
    for (std::size_t s : spec.sizes) {
        if (s == 0) throw InputError("generator sizes must be at least 1");
    }
    std::size_t total = spec.sizes[0] + (want == 2 ? spec.sizes[1] : 0);
    if (spec.family == F::wheel) total += 1;
    if (total > vertex_cap) {
        throw ResourceError("generated graph would have " + std::to_string(total) +
                            " vertices, above the vertex cap of " + std::to_string(vertex_cap));
    }
    switch (spec.family) {
        case F::complete: return complete_graph(spec.sizes[0]);
        case F::complete_bipartite: return complete_bipartite_graph(spec.sizes[0], spec.sizes[1]);
        case F::cycle: return cycle_graph(spec.sizes[0]);
        case F::path: return path_graph(spec.sizes[0]);
        case F::wheel: return wheel_graph(spec.sizes[0]);
        case F::random: return random_graph(spec.sizes[0], spec.p, spec.seed, vertex_cap);
        case F::random_tree: return random_tree(spec.sizes[0], spec.seed, vertex_cap);
    }
    throw InputError("unknown generator family");
}

nlohmann::ordered_json to_json(const Graph& g) {
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

nlohmann::ordered_json to_json(const BettiTable& table) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [key, beta] : table.entries) entries.push_back({{"i", key.first}, {"j", key.second}, {"beta", beta}});
    return {{"n", table.n}, {"entries", entries}};
}

BettiTable betti_table_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries") || !doc.at("entries").is_array()) {
        throw InputError("Betti table JSON needs 'n' and an 'entries' array");
    }
    BettiTable table;
    table.n = json_size(doc.at("n"), "'n'");
    for (std::size_t k = 0; k < doc.at("entries").size(); ++k) {
        const auto& e = doc.at("entries")[k];
        const std::string at = "entries[" + std::to_string(k) + "]";
        if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("beta")) {
            throw InputError(at + " needs 'i', 'j' and 'beta'");
        }
        table.add(json_size(e.at("i"), at + ".i"), json_size(e.at("j"), at + ".j"),
                  static_cast<Count>(json_size(e.at("beta"), at + ".beta")));
    }
    return table;
}

nlohmann::ordered_json to_json(const CensusReport& census) {
    nlohmann::ordered_json k = nlohmann::ordered_json::object();
    for (const auto& [r, count] : census.cliques) k[std::to_string(r)] = count;
    nlohmann::ordered_json kb = nlohmann::ordered_json::object();
    for (const auto& [ab, count] : census.bipartite) kb[std::to_string(ab.first) + "," + std::to_string(ab.second)] = count;
    return {{"k", k}, {"k_bipartite", kb}, {"c4", census.c4}, {"w4", census.w4}, {"d", census.d}};
}

nlohmann::ordered_json to_json(const StrandReport& report) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const StrandRow& r : report.rows) {
        rows.push_back({{"i", r.i},
                        {"oracle", nullable(r.oracle)},
                        {"components", r.components},
                        {"formula_no_c4", {{"value", r.no_c4.value}, {"applicable", r.no_c4.applicable}}},
                        {"beta24", nullable(r.beta24)},
                        {"beta35", nullable(r.beta35)},
                        {"lower", r.lower},
                        {"upper", r.upper},
                        {"lower_tight", r.lower_tight},
                        {"upper_tight", r.upper_tight}});
    }
    return {{"n", report.n},
            {"edges", report.edges},
            {"field", report.characteristic},
            {"has_induced_c4", report.has_induced_c4},
            {"rows", rows}};
}

std::string render_betti_table(const BettiTable& table) {
    if (table.entries.empty()) return "zero ideal: no non-zero Betti numbers\n";
    std::size_t max_i = 0;
    std::size_t min_row = SIZE_MAX;
    std::size_t max_row = 0;
    for (const auto& [key, beta] : table.entries) {
        max_i = std::max(max_i, key.first);
        min_row = std::min(min_row, key.second - key.first);
        max_row = std::max(max_row, key.second - key.first);
    }
    std::vector<Count> totals(max_i + 1, 0);
    for (const auto& [key, beta] : table.entries) totals[key.first] += beta;

    std::size_t width = 1;
    for (Count t : totals) width = std::max(width, std::to_string(t).size());
    width += 1;

    std::ostringstream out;
    out << std::setw(7) << "";
    for (std::size_t i = 0; i <= max_i; ++i) out << std::setw(static_cast<int>(width)) << i;
    out << "\n" << std::setw(7) << std::left << "total:" << std::right;
    for (Count t : totals) out << std::setw(static_cast<int>(width)) << t;
    out << "\n";
    for (std::size_t row = min_row; row <= max_row; ++row) {
        out << std::setw(6) << row << ":";
        for (std::size_t i = 0; i <= max_i; ++i) {
            const Count v = table(i, i + row);
            out << std::setw(static_cast<int>(width)) << (v == 0 ? std::string(".") : std::to_string(v));
        }
        out << "\n";
    }
    return out.str();
}

std::string render_betti_csv(const BettiTable& table) {
    std::ostringstream out;
    out << "i,j,beta\n";
    for (const auto& [key, beta] : table.entries) out << key.first << "," << key.second << "," << beta << "\n";
    return out.str();
}

std::string render_strand_table(const StrandReport& report) {
    std::ostringstream out;
    out << "n=" << report.n << " edges=" << report.edges << " field=" << report.characteristic
        << " induced_c4=" << (report.has_induced_c4 ? "yes" : "no") << "\n";
    out << std::setw(3) << "i" << std::setw(10) << "oracle" << std::setw(10) << "comp" << std::setw(10) << "no_c4"
        << std::setw(10) << "beta24" << std::setw(10) << "beta35" << std::setw(10) << "lower" << std::setw(10)
        << "upper" << "  tight\n";
    for (const StrandRow& r : report.rows) {
        const std::string no_c4 = std::to_string(r.no_c4.value) + (r.no_c4.applicable ? "" : "*");
        std::string tight;
        if (r.lower_tight) tight += "lower";
        if (r.upper_tight) tight += tight.empty() ? "upper" : ",upper";
        out << std::setw(3) << r.i << std::setw(10) << (r.oracle ? std::to_string(*r.oracle) : "-") << std::setw(10)
            << r.components << std::setw(10) << no_c4 << std::setw(10) << (r.beta24 ? std::to_string(*r.beta24) : "-")
            << std::setw(10) << (r.beta35 ? std::to_string(*r.beta35) : "-") << std::setw(10) << r.lower
            << std::setw(10) << r.upper << "  " << (tight.empty() ? "-" : tight) << "\n";
    }
    if (report.has_induced_c4 && report.rows.size() > 2) out << "* no-C4 formula not applicable for i >= 2\n";
    return out.str();
}

std::string render_strand_csv(const StrandReport& report) {
    std::ostringstream out;
    out << "i,oracle,formula_no_c4,beta24,beta35,lower,upper\n";
    for (const StrandRow& r : report.rows) {
        out << r.i << "," << cell(r.oracle) << ","
            << (r.no_c4.applicable ? std::to_string(r.no_c4.value) : std::string{}) << "," << cell(r.beta24) << ","
            << cell(r.beta35) << "," << r.lower << "," << r.upper << "\n";
    }
    return out.str();
}

}  // namespace edgebetti
