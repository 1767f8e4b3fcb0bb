#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgebetti/combinatorics.hpp"
#include "edgebetti/graph.hpp"
#include "edgebetti/homology.hpp"

namespace edgebetti {

inline constexpr std::size_t kDefaultOracleCap = 14;

// Graded Betti numbers beta_{i,j} of an edge ideal. Only non-zero entries
// are stored.
struct BettiTable {
    std::size_t n = 0;
    std::map<std::pair<std::size_t, std::size_t>, Count> entries;

    Count operator()(std::size_t i, std::size_t j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    // Zero contributions are dropped.
    void add(std::size_t i, std::size_t j, Count value);

    // True when every entry lies on j = i + 2.
    bool is_linear() const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

struct OracleOptions {
    std::size_t cap = kDefaultOracleCap;
    // 0 selects std::thread::hardware_concurrency().
    std::size_t threads = 0;
};

// Hochster's formula: beta_{i,j} = sum over j-subsets S of the reduced
// homology of the clique complex of the complement of G_S in degree
// j - i - 2. Exponential in n; graphs above options.cap raise a
// ResourceError. The result does not depend on the thread count.
BettiTable betti_table_hochster(const Graph& g, Field f = Field::rationals(), const OracleOptions& options = {});

// beta_{i,i+2} as the sum over (i+2)-subsets S of (#components of the
// complement of G_S) - 1. No homology involved.
Count linear_strand_components(const Graph& g, std::size_t i);

struct FormulaValue {
    Count value = 0;
    bool applicable = false;

    friend bool operator==(const FormulaValue&, const FormulaValue&) = default;
};

// sum_v C(deg v, i+1) - k_{i+2}. Exact when g has no induced 4-cycle or
// i <= 1; otherwise the value is still returned but marked inapplicable.
FormulaValue linear_strand_no_c4(const Graph& g, std::size_t i);

// sum_v C(deg v, 3) - k_4 + k_{2,2}.
Count beta_2_4_exact(const Graph& g);

// sum_v C(deg v, 4) - k_5 + k_{2,3} + w_4 + d.
Count beta_3_5_exact(const Graph& g);

// sum_v C(deg v, i+1) - k_{i+2} + sum_{a=2}^{floor((i+2)/2)} k_{a,i+2-a},
// clamped below at zero.
Count lower_bound(const Graph& g, std::size_t i);

// The num_edges lexicographically largest degree-2 monomials in n
// variables. Row r (1-based) holds x_r x_r, x_r x_{r+1}, ..., x_r x_n; the
// segment is `rows_full` complete rows followed by `tail` monomials of the
// next row.
struct LexSegment {
    std::size_t num_edges = 0;
    std::size_t n = 0;
    std::size_t rows_full = 0;  // j
    std::size_t tail = 0;       // l
    // (p, q) with p <= q stands for x_p x_q.
    std::vector<std::pair<std::size_t, std::size_t>> monomials;
    // Largest variable index of each monomial.
    std::vector<std::size_t> max_index;
};

// Throws InputError when num_edges exceeds the n(n+1)/2 degree-2 monomials.
LexSegment lex_segment(std::size_t num_edges, std::size_t n);

// sum over the lex segment of C(u_t - 1, i). Depends on |E| and |V| only.
Count lex_upper_bound(std::size_t num_edges, std::size_t n, std::size_t i);
Count upper_bound(const Graph& g, std::size_t i);

// max{0, sum_v C(deg v, 2) - j C(n, 2) + C(j, 3) - (j + ... + (j + l - 1))},
// a lower bound on the number of triangles.
Count triangle_lower_bound(const Graph& g);

struct LinearResolutionReport {
    bool complement_chordal = false;
    // Set in certificate mode: every oracle entry is on the linear strand.
    std::optional<bool> oracle_linear;

    bool agrees() const { return !oracle_linear || *oracle_linear == complement_chordal; }
};

LinearResolutionReport has_linear_resolution(const Graph& g, Field f = Field::rationals(), bool certify = false,
                                             const OracleOptions& options = {});

// (i+1) C(n, i+2); n >= 2.
Count closed_form_complete(std::size_t n, std::size_t i);

// C(a+b, i+2) - C(a, i+2) - C(b, i+2); a, b >= 1.
Count closed_form_complete_bipartite(std::size_t a, std::size_t b, std::size_t i);

struct StrandRow {
    std::size_t i = 0;
    std::optional<Count> oracle;
    Count components = 0;
    FormulaValue no_c4;
    std::optional<Count> beta24;  // i == 2 only
    std::optional<Count> beta35;  // i == 3 only
    Count lower = 0;
    Count upper = 0;
    // Against the oracle when present, otherwise the component formula.
    bool lower_tight = false;
    bool upper_tight = false;

    friend bool operator==(const StrandRow&, const StrandRow&) = default;
};

struct StrandReport {
    std::size_t n = 0;
    std::size_t edges = 0;
    std::uint32_t characteristic = 0;
    bool has_induced_c4 = false;
    std::vector<StrandRow> rows;

    friend bool operator==(const StrandReport&, const StrandReport&) = default;
};

struct StrandOptions {
    std::optional<std::size_t> max_i;
    // When false, or when the graph is above the oracle cap, rows carry no
    // oracle value.
    bool run_oracle = true;
    OracleOptions oracle;
};

// Rows for i = 0 .. n-2 (clipped at max_i).
StrandReport strand_report(const Graph& g, Field f = Field::rationals(), const StrandOptions& options = {});

// Every disagreement between an exact formula and the reference value, and
// every violated bound. Empty for a correct engine.
std::vector<std::string> strand_inconsistencies(const StrandReport& report);

}  // namespace edgebetti
