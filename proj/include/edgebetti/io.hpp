#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "edgebetti/betti.hpp"
#include "edgebetti/census.hpp"
#include "edgebetti/graph.hpp"

namespace edgebetti {

// Edge-list text: "u v" per line, '#' comment lines, blank lines ignored,
// optional first line "n <count>" declaring the vertex count (otherwise
// the largest label). Loops, duplicates and malformed lines raise
// InputError naming the line.
Graph parse_edge_list(std::istream& in, std::size_t vertex_cap = kDefaultVertexCap);
Graph read_edge_list(const std::filesystem::path& path, std::size_t vertex_cap = kDefaultVertexCap);

// {"n": <int>, "edges": [[u, v], ...]}. Errors name the offending entry.
Graph parse_json_graph(const nlohmann::json& doc, std::size_t vertex_cap = kDefaultVertexCap);
Graph read_json_graph(const std::filesystem::path& path, std::size_t vertex_cap = kDefaultVertexCap);

struct GeneratorSpec {
    enum class Family { complete, complete_bipartite, cycle, path, wheel, random, random_tree };

    Family family = Family::complete;
    // n, or (a, b) for complete_bipartite.
    std::vector<std::size_t> sizes;
    double p = 0.0;
    std::uint64_t seed = 0;
};

Graph generate(const GeneratorSpec& spec, std::size_t vertex_cap = kDefaultVertexCap);

nlohmann::ordered_json to_json(const Graph& g);
nlohmann::ordered_json to_json(const BettiTable& table);
nlohmann::ordered_json to_json(const CensusReport& census);
nlohmann::ordered_json to_json(const StrandReport& report);

BettiTable betti_table_from_json(const nlohmann::json& doc);

// Macaulay2-style: columns are homological degrees i, rows are j - i.
std::string render_betti_table(const BettiTable& table);
// "i,j,beta" rows sorted by (i, j).
std::string render_betti_csv(const BettiTable& table);

std::string render_strand_table(const StrandReport& report);
// Header i,oracle,formula_no_c4,beta24,beta35,lower,upper; inapplicable
// cells are empty.
std::string render_strand_csv(const StrandReport& report);

}  // namespace edgebetti
