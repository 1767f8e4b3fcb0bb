#include "edgebetti/betti.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <numeric>
#include <thread>

#include "edgebetti/census.hpp"
#include "edgebetti/error.hpp"

namespace edgebetti {
namespace {

// The oracle enumerates vertex subsets as 64-bit masks.
constexpr std::size_t kOracleHardLimit = 40;

Count degree_binomial_sum(const Graph& g, std::size_t k) {
    Count total = 0;
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        total = checked_add(total, binomial(static_cast<Count>(degree(g, v)), static_cast<Count>(k)));
    }
    return total;
}

// Number of connected components of the complement of G_S, S given as
// ascending 0-based indices.
std::size_t complement_components(const Graph& g, std::span<const std::size_t> s) {
    std::vector<std::size_t> parent(s.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t count = s.size();
    for (std::size_t p = 0; p < s.size(); ++p) {
        for (std::size_t q = p + 1; q < s.size(); ++q) {
            if (g.adjacent(s[p] + 1, s[q] + 1)) continue;
            const std::size_t a = find(p);
            const std::size_t b = find(q);
            if (a != b) {
                parent[a] = b;
                --count;
            }
        }
    }
    return count;
}

// Packs the bits of x selected by mask into the low bits, in order.
std::uint64_t compress(std::uint64_t x, std::uint64_t mask) {
    std::uint64_t out = 0;
    std::size_t p = 0;
    for (; mask != 0; mask &= mask - 1, ++p) {
        if (x & mask & (~mask + 1)) out |= std::uint64_t{1} << p;
    }
    return out;
}

void check_oracle_cap(const Graph& g, const OracleOptions& options) {
    const std::size_t n = g.vertex_count();
    if (n > options.cap) {
        throw ResourceError("Hochster oracle on " + std::to_string(n) + " vertices exceeds the oracle cap of " +
                            std::to_string(options.cap) + " (raise it with --cap)");
    }
    if (n > kOracleHardLimit) {
        throw ResourceError("Hochster oracle is limited to " + std::to_string(kOracleHardLimit) + " vertices");
    }
}

}  // namespace

void BettiTable::add(std::size_t i, std::size_t j, Count value) {
    if (value == 0) return;
    Count& slot = entries[{i, j}];
    slot = checked_add(slot, value);
}

bool BettiTable::is_linear() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& kv) { return kv.first.second == kv.first.first + 2; });
}

BettiTable betti_table_hochster(const Graph& g, Field f, const OracleOptions& options) {
    check_oracle_cap(g, options);
    const std::size_t n = g.vertex_count();
    BettiTable table;
    table.n = n;
    if (n < 2) return table;

    std::vector<std::uint64_t> adjacency(n);
    for (Vertex v = 1; v <= n; ++v) adjacency[v - 1] = g.neighbor_mask(v);
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::size_t threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<std::size_t>(std::min<std::uint64_t>(threads, subsets / 64 + 1));

    // accum[t][i * (n + 1) + j]
    std::vector<std::vector<Count>> accum(threads, std::vector<Count>((n + 1) * (n + 1), 0));
    std::vector<std::exception_ptr> errors(threads);

    auto work = [&](std::size_t t) {
        try {
            auto& local = accum[t];
            std::vector<std::uint64_t> local_adj(n);
            const std::uint64_t begin = subsets * t / threads;
            const std::uint64_t end = subsets * (t + 1) / threads;
            for (std::uint64_t mask = begin; mask < end; ++mask) {
                const auto j = static_cast<std::size_t>(std::popcount(mask));
                // Singletons have contractible complexes; H~_{-1} vanishes
                // for every non-empty S.
                if (j < 2) continue;
                // Complement of G_S on local indices 0..j-1.
                std::size_t p = 0;
                for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1, ++p) {
                    const auto v = static_cast<std::size_t>(std::countr_zero(rest));
                    local_adj[p] = compress(~adjacency[v] & mask & ~(std::uint64_t{1} << v), mask);
                }
                const HomologyDims dims = clique_complex_homology(std::span(local_adj.data(), j), f);
                for (int d = 0; d <= std::min<int>(dims.max_degree(), static_cast<int>(j) - 2); ++d) {
                    const std::size_t i = j - 2 - static_cast<std::size_t>(d);
                    local[i * (n + 1) + j] += static_cast<Count>(dims(d));
                }
            }
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            Count sum = 0;
            for (const auto& local : accum) sum = checked_add(sum, local[i * (n + 1) + j]);
            table.add(i, j, sum);
        }
    }
    return table;
}

Count linear_strand_components(const Graph& g, std::size_t i) {
    Count total = 0;
    for_each_combination(g.vertex_count(), i + 2, [&](std::span<const std::size_t> s) {
        total = checked_add(total, static_cast<Count>(complement_components(g, s)) - 1);
    });
    return total;
}

FormulaValue linear_strand_no_c4(const Graph& g, std::size_t i) {
    FormulaValue out;
    out.value = checked_sub(degree_binomial_sum(g, i + 1), count_cliques(g, i + 2));
    out.applicable = i <= 1 || !has_induced_c4(g);
    return out;
}

Count beta_2_4_exact(const Graph& g) {
    return checked_add(checked_sub(degree_binomial_sum(g, 3), count_cliques(g, 4)), count_complete_bipartite(g, 2, 2));
}

Count beta_3_5_exact(const Graph& g) {
    Count total = checked_sub(degree_binomial_sum(g, 4), count_cliques(g, 5));
    total = checked_add(total, count_complete_bipartite(g, 2, 3));
    total = checked_add(total, count_wheels_w4(g));
    return checked_add(total, count_pattern_d(g));
}

Count lower_bound(const Graph& g, std::size_t i) {
    Count total = checked_sub(degree_binomial_sum(g, i + 1), count_cliques(g, i + 2));
    for (std::size_t a = 2; a <= (i + 2) / 2; ++a) total = checked_add(total, count_complete_bipartite(g, a, i + 2 - a));
    return std::max<Count>(total, 0);
}

LexSegment lex_segment(std::size_t num_edges, std::size_t n) {
    if (num_edges > n * (n + 1) / 2) {
        throw InputError(std::to_string(num_edges) + " monomials requested but only " +
                         std::to_string(n * (n + 1) / 2) + " degree-2 monomials exist in " + std::to_string(n) +
                         " variables");
    }
    LexSegment seg;
    seg.num_edges = num_edges;
    seg.n = n;
    if (num_edges == 0) return seg;

    // Smallest j with num_edges <= n + (n-1) + ... + (n-j).
    std::size_t before = 0;
    std::size_t j = 0;
    while (num_edges > before + (n - j)) {
        before += n - j;
        ++j;
    }
    seg.rows_full = j;
    seg.tail = num_edges - before;

    for (std::size_t row = 1; row <= j + 1; ++row) {
        const std::size_t last = row <= j ? n : j + seg.tail;
        for (std::size_t q = row; q <= last; ++q) {
            seg.monomials.emplace_back(row, q);
            seg.max_index.push_back(q);
        }
    }
    return seg;
}

Count lex_upper_bound(std::size_t num_edges, std::size_t n, std::size_t i) {
    const LexSegment seg = lex_segment(num_edges, n);
    Count total = 0;
    for (std::size_t u : seg.max_index) {
        total = checked_add(total, binomial(static_cast<Count>(u) - 1, static_cast<Count>(i)));
    }
    return total;
}

Count upper_bound(const Graph& g, std::size_t i) { return lex_upper_bound(g.edge_count(), g.vertex_count(), i); }

Count triangle_lower_bound(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const LexSegment seg = lex_segment(g.edge_count(), n);
    const auto j = static_cast<Count>(seg.rows_full);
    const auto l = static_cast<Count>(seg.tail);
    Count value = degree_binomial_sum(g, 2);
    value = checked_sub(value, checked_mul(j, binomial(static_cast<Count>(n), 2)));
    // C(j, j-3) read as C(j, 3); both vanish for j < 3.
    value = checked_add(value, binomial(j, 3));
    // j + (j+1) + ... + (j+l-1)
    value = checked_sub(value, checked_add(checked_mul(j, l), l * (l - 1) / 2));
    return std::max<Count>(value, 0);
}

LinearResolutionReport has_linear_resolution(const Graph& g, Field f, bool certify, const OracleOptions& options) {
    LinearResolutionReport report;
    report.complement_chordal = is_chordal(complement(g));
    if (certify) report.oracle_linear = betti_table_hochster(g, f, options).is_linear();
    return report;
}

Count closed_form_complete(std::size_t n, std::size_t i) {
    if (n < 2) throw InputError("complete graph closed form needs n >= 2");
    return checked_mul(static_cast<Count>(i) + 1, binomial(static_cast<Count>(n), static_cast<Count>(i) + 2));
}

Count closed_form_complete_bipartite(std::size_t a, std::size_t b, std::size_t i) {
    if (a < 1 || b < 1) throw InputError("complete bipartite closed form needs a, b >= 1");
    const auto k = static_cast<Count>(i) + 2;
    Count v = binomial(static_cast<Count>(a + b), k);
    v = checked_sub(v, binomial(static_cast<Count>(a), k));
    return checked_sub(v, binomial(static_cast<Count>(b), k));
}

StrandReport strand_report(const Graph& g, Field f, const StrandOptions& options) {
    const std::size_t n = g.vertex_count();
    StrandReport report;
    report.n = n;
    report.edges = g.edge_count();
    report.characteristic = f.characteristic();
    report.has_induced_c4 = has_induced_c4(g);
    if (n < 2) return report;

    std::optional<BettiTable> table;
    if (options.run_oracle && n <= options.oracle.cap) table = betti_table_hochster(g, f, options.oracle);

    std::size_t top = n - 2;
    if (options.max_i) top = std::min(top, *options.max_i);
    for (std::size_t i = 0; i <= top; ++i) {
        StrandRow row;
        row.i = i;
        if (table) row.oracle = (*table)(i, i + 2);
        row.components = linear_strand_components(g, i);
        row.no_c4 = linear_strand_no_c4(g, i);
        if (i == 2) row.beta24 = beta_2_4_exact(g);
        if (i == 3) row.beta35 = beta_3_5_exact(g);
        row.lower = lower_bound(g, i);
        row.upper = upper_bound(g, i);
        const Count reference = row.oracle.value_or(row.components);
        row.lower_tight = row.lower == reference;
        row.upper_tight = row.upper == reference;
        report.rows.push_back(row);
    }
    return report;
}

std::vector<std::string> strand_inconsistencies(const StrandReport& report) {
    std::vector<std::string> problems;
    for (const StrandRow& row : report.rows) {
        const std::string at = "i=" + std::to_string(row.i) + ": ";
        const Count ref = row.oracle.value_or(row.components);
        auto expect_equal = [&](const std::string& what, Count value) {
            if (value != ref) {
                problems.push_back(at + what + " = " + std::to_string(value) + " but reference = " + std::to_string(ref));
            }
        };
        if (row.oracle) expect_equal("component formula", row.components);
        if (row.no_c4.applicable) expect_equal("no-C4 formula", row.no_c4.value);
        if (row.beta24) expect_equal("beta_{2,4} formula", *row.beta24);
        if (row.beta35) expect_equal("beta_{3,5} formula", *row.beta35);
        if (row.lower > ref) problems.push_back(at + "lower bound " + std::to_string(row.lower) + " exceeds " + std::to_string(ref));
        if (row.upper < ref) problems.push_back(at + "upper bound " + std::to_string(row.upper) + " below " + std::to_string(ref));
        if (row.i <= 2 && row.lower != ref) problems.push_back(at + "lower bound not tight");
    }
    return problems;
}

}  // namespace edgebetti
