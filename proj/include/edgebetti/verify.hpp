#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "edgebetti/graph.hpp"
#include "edgebetti/homology.hpp"

namespace edgebetti {

// Cross-checks every closed form, bound and criterion against the Hochster
// oracle on small graphs.
struct VerifyFailure {
    std::size_t n = 0;
    std::uint64_t edge_mask = 0;
    std::string check;
    std::string detail;
};

struct VerifyOptions {
    Field field = Field::rationals();
    // Field for the characteristic-independence comparison; defaults to
    // GF(2) when `field` is the rationals and to the rationals otherwise.
    std::optional<Field> comparison;
    // Graph-level parallelism; 0 selects hardware concurrency.
    std::size_t threads = 0;
    bool stop_at_first_failure = true;
};

struct VerifySummary {
    // Graphs checked per vertex count.
    std::map<std::size_t, std::size_t> graphs_checked;
    std::vector<VerifyFailure> failures;

    bool ok() const { return failures.empty(); }
    std::size_t total() const;
};

// Check names: vanishing, components, no_c4, beta24, beta35, sandwich,
// lower_tight, linear_resolution, characteristic, triangle.
std::vector<VerifyFailure> check_graph(const Graph& g, const VerifyOptions& options);

// Every labeled graph (edge mask) on n = 1..max_n vertices; max_n <= 7.
VerifySummary verify_exhaustive(std::size_t max_n, const VerifyOptions& options);

// `count` uniformly random labeled graphs on n vertices (n <= 11), edge
// masks drawn from std::mt19937_64(seed).
VerifySummary verify_sample(std::size_t n, std::size_t count, std::uint64_t seed, const VerifyOptions& options);

// Same checks over an explicit list of graphs (each with n <= 11).
VerifySummary verify_graphs(const std::vector<Graph>& graphs, const VerifyOptions& options);

}  // namespace edgebetti
