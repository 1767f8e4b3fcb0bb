#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <type_traits>
#include <vector>

#include "edgebetti/error.hpp"

namespace edgebetti {

// Signed so that the lower bound, which subtracts census terms, can go
// negative before it is clamped.
using Count = std::int64_t;

inline Count checked_add(Count a, Count b) {
    Count r{};
    if (__builtin_add_overflow(a, b, &r)) throw ResourceError("count exceeds 64-bit range");
    return r;
}

inline Count checked_sub(Count a, Count b) {
    Count r{};
    if (__builtin_sub_overflow(a, b, &r)) throw ResourceError("count exceeds 64-bit range");
    return r;
}

inline Count checked_mul(Count a, Count b) {
    Count r{};
    if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("count exceeds 64-bit range");
    return r;
}

// C(n, k), zero whenever k < 0 or k > n (including negative n).
inline Count binomial(Count n, Count k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    __int128 acc = 1;
    for (Count i = 0; i < k; ++i) {
        acc = acc * (n - i) / (i + 1);
        if (acc > INT64_MAX) throw ResourceError("binomial coefficient exceeds 64-bit range");
    }
    return static_cast<Count>(acc);
}

// Calls fn(std::span<const std::size_t>) for every k-subset of {0..n-1},
// as an ascending index list, in lexicographic order. Stops early when fn
// returns false (if fn returns bool).
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        if constexpr (std::is_same_v<decltype(fn(std::span<const std::size_t>(idx))), bool>) {
            if (!fn(std::span<const std::size_t>(idx))) return;
        } else {
            fn(std::span<const std::size_t>(idx));
        }
        if (k == 0) return;
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
        if (pos == 0) return;
        ++idx[pos - 1];
        for (std::size_t t = pos; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
}

}  // namespace edgebetti
