#include "edgebetti/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "edgebetti/betti.hpp"
#include "edgebetti/census.hpp"
#include "edgebetti/error.hpp"

namespace edgebetti {
namespace {

Field comparison_field(const VerifyOptions& options) {
    if (options.comparison) return *options.comparison;
    return options.field.is_rational() ? Field(2) : Field::rationals();
}

std::size_t resolve_threads(std::size_t requested) {
    return requested == 0 ? std::max(1U, std::thread::hardware_concurrency()) : requested;
}

}  // namespace

std::size_t VerifySummary::total() const {
    std::size_t sum = 0;
    for (const auto& [n, count] : graphs_checked) sum += count;
    return sum;
}

std::vector<VerifyFailure> check_graph(const Graph& g, const VerifyOptions& options) {
    const std::size_t n = g.vertex_count();
    std::vector<VerifyFailure> failures;
    const std::uint64_t mask = n <= 11 ? g.edge_mask() : 0;
    auto fail = [&](const std::string& check, const std::string& detail) {
        failures.push_back({n, mask, check, detail});
    };
    auto num = [](Count v) { return std::to_string(v); };

    OracleOptions oracle;
    oracle.threads = 1;
    oracle.cap = std::max(n, kDefaultOracleCap);
    const BettiTable table = betti_table_hochster(g, options.field, oracle);

    for (const auto& [key, beta] : table.entries) {
        const auto [i, j] = key;
        if (j < i + 2) fail("vanishing", "beta_{" + std::to_string(i) + "," + std::to_string(j) + "} below the strand");
        if (j > n) fail("vanishing", "beta_{" + std::to_string(i) + "," + std::to_string(j) + "} beyond n");
        if (i == 0 && j != 2) fail("vanishing", "generator in degree " + std::to_string(j));
    }
    if (table(0, 2) != static_cast<Count>(g.edge_count())) {
        fail("vanishing", "beta_{0,2} = " + num(table(0, 2)) + " but |E| = " + std::to_string(g.edge_count()));
    }

    const BettiTable other = betti_table_hochster(g, comparison_field(options), oracle);

    for (std::size_t i = 0; i + 2 <= n; ++i) {
        const std::string at = "i=" + std::to_string(i) + ": ";
        const Count beta = table(i, i + 2);

        const Count comp = linear_strand_components(g, i);
        if (comp != beta) fail("components", at + num(comp) + " vs oracle " + num(beta));

        const FormulaValue no_c4 = linear_strand_no_c4(g, i);
        if (no_c4.applicable && no_c4.value != beta) fail("no_c4", at + num(no_c4.value) + " vs oracle " + num(beta));

        const Count lo = lower_bound(g, i);
        const Count hi = upper_bound(g, i);
        if (lo > beta || beta > hi) fail("sandwich", at + num(lo) + " <= " + num(beta) + " <= " + num(hi) + " fails");
        if (i <= 2 && lo != beta) fail("lower_tight", at + "lower " + num(lo) + " vs oracle " + num(beta));

        if (other(i, i + 2) != beta) {
            fail("characteristic", at + num(other(i, i + 2)) + " vs " + num(beta));
        }
    }

    if (const Count b24 = beta_2_4_exact(g); b24 != table(2, 4)) {
        fail("beta24", num(b24) + " vs oracle " + num(table(2, 4)));
    }
    if (const Count b35 = beta_3_5_exact(g); b35 != table(3, 5)) {
        fail("beta35", num(b35) + " vs oracle " + num(table(3, 5)));
    }

    const bool chordal = is_chordal(complement(g));
    if (chordal != table.is_linear()) {
        fail("linear_resolution", std::string("complement chordal = ") + (chordal ? "true" : "false") +
                            " but oracle linear = " + (table.is_linear() ? "true" : "false"));
    }

    if (const Count tb = triangle_lower_bound(g), k3 = count_cliques(g, 3); tb > k3) {
        fail("triangle", "bound " + num(tb) + " exceeds k3 = " + num(k3));
    }
    return failures;
}

VerifySummary verify_graphs(const std::vector<Graph>& graphs, const VerifyOptions& options) {
    VerifySummary summary;
    const std::size_t threads = std::min(resolve_threads(options.threads), std::max<std::size_t>(graphs.size(), 1));
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex lock;
    std::vector<std::size_t> checked(graphs.size(), 0);
    std::vector<std::pair<std::size_t, VerifyFailure>> failures;
    std::exception_ptr error;

    auto work = [&] {
        try {
            for (std::size_t k = next++; k < graphs.size() && !stop; k = next++) {
                auto found = check_graph(graphs[k], options);
                checked[k] = 1;
                if (found.empty()) continue;
                std::lock_guard guard(lock);
                for (auto& f : found) failures.emplace_back(k, std::move(f));
                if (options.stop_at_first_failure) stop = true;
            }
        } catch (...) {
            std::lock_guard guard(lock);
            if (!error) error = std::current_exception();
            stop = true;
        }
    };
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    }
    if (error) std::rethrow_exception(error);

    std::stable_sort(failures.begin(), failures.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (options.stop_at_first_failure && !failures.empty()) {
        // Keep only the earliest failing graph so output does not depend on
        // scheduling.
        const std::size_t first = failures.front().first;
        std::erase_if(failures, [&](const auto& f) { return f.first != first; });
    }
    for (std::size_t k = 0; k < graphs.size(); ++k) {
        if (checked[k] != 0) ++summary.graphs_checked[graphs[k].vertex_count()];
    }
    for (auto& [k, f] : failures) summary.failures.push_back(std::move(f));
    return summary;
}

VerifySummary verify_exhaustive(std::size_t max_n, const VerifyOptions& options) {
    if (max_n > 7) throw ResourceError("exhaustive verification is limited to max_n <= 7");
    VerifySummary summary;
    for (std::size_t n = 1; n <= max_n; ++n) {
        const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
        std::vector<Graph> graphs;
        graphs.reserve(masks);
        for (std::uint64_t m = 0; m < masks; ++m) graphs.push_back(Graph::from_edge_mask(n, m));
        VerifySummary part = verify_graphs(graphs, options);
        for (const auto& [k, c] : part.graphs_checked) summary.graphs_checked[k] += c;
        for (auto& f : part.failures) summary.failures.push_back(std::move(f));
        if (!summary.ok() && options.stop_at_first_failure) break;
    }
    return summary;
}

VerifySummary verify_sample(std::size_t n, std::size_t count, std::uint64_t seed, const VerifyOptions& options) {
    if (n > 11) throw ResourceError("sampled verification uses edge masks and is limited to n <= 11");
    const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t keep = pairs >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pairs) - 1;
    std::mt19937_64 rng(seed);
    std::vector<Graph> graphs;
    graphs.reserve(count);
    for (std::size_t k = 0; k < count; ++k) graphs.push_back(Graph::from_edge_mask(n, rng() & keep));
    return verify_graphs(graphs, options);
}

}  // namespace edgebetti
