#pragma once

// Generating functions for p(n), p_k(n) and a_k(n), plus an exact
// brute-force counting oracle for a_k(n) that shares no code with the
// series engine.
//
// a_k(n) counts partitions of n in which each odd part carries one of k
// color labels and even parts are uncolored; its generating function is
// f_2^{k-1} / f_1^k.

#include <cstdint>

#include "etaq/trunc_series.hpp"

namespace etaq {

enum class PartitionFamily { plain, colored, odd_colored };

struct PartitionSeries {
    PartitionFamily family;
    std::uint32_t k; // color count
    TruncSeries series;
};

// Coefficient n is a_k(n) mod `modulus`. k >= 1.
PartitionSeries gen_a(std::uint32_t k, std::uint32_t modulus,
                      std::size_t precision);

// Plain partition numbers p(n) mod `modulus` (equals gen_a with k = 1).
PartitionSeries gen_p(std::uint32_t modulus, std::size_t precision);

// k-colored partition numbers p_k(n) mod `modulus` (1 / f_1^k).
PartitionSeries gen_p_colored(std::uint32_t k, std::uint32_t modulus,
                              std::size_t precision);

inline constexpr std::uint32_t kBruteForceDefaultGuard = 60;

// Exact a_k(n) by direct enumeration over part sizes, counting the color
// multisets of each odd part size with a stars-and-bars factor. Throws if
// n exceeds the guard rail or if the exact count overflows 64 bits.
unsigned long long brute_force_a(std::uint32_t k, std::uint32_t n,
                                 std::uint32_t guard = kBruteForceDefaultGuard);

} // namespace etaq
