#pragma once

// The three Ramanujan congruences of a_11 and the dissection support facts
// behind them:
//   a_11(5n+4)  == 0 (mod 5)
//   a_11(7n+4)  == 0 (mod 7)
//   a_11(11n+1) == 0 (mod 11)

#include <cstdint>
#include <set>
#include <string>

#include "etaq/report.hpp"
#include "etaq/trunc_series.hpp"

namespace etaq {

struct DissectionProfile {
    std::string series_id;
    std::uint32_t modulus = 1;
    // Residues mod `modulus` carrying at least one nonzero coefficient
    // within the series precision.
    std::set<std::uint32_t> classes;
};

// Residue classes of exponents with nonzero coefficients.
DissectionProfile dissection_support(const TruncSeries& series,
                                     std::uint32_t m,
                                     std::string series_id = {});

// One of the three congruences above; `prime_case` picks 5, 7 or 11.
VerificationReport verify_a11(std::uint32_t prime_case, std::uint64_t n_max);

// Generic vanishing check a_k(step*n + residue) == 0 (mod prime) for
// n <= n_max; verify_a11 is this with (11, prime, {5,7,11}-progression).
VerificationReport verify_vanishing(std::uint32_t k_colors, std::uint32_t prime,
                                    std::uint64_t step, std::uint64_t residue,
                                    std::uint64_t n_max);

} // namespace etaq
