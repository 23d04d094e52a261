#pragma once

// Machine-readable outcomes of verification runs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etaq/trunc_series.hpp"

namespace etaq {

enum class VerifyStatus { pass, fail };

struct VerificationReport {
    std::string claim;          // what was compared
    std::uint64_t precision = 0; // series precision the check ran at
    std::optional<std::uint64_t> sturm_bound;
    VerifyStatus status = VerifyStatus::fail;
    // First n at which the checked relation breaks (progression step for
    // vanishing checks, output index for series comparisons).
    std::optional<std::uint64_t> first_failure;
    // +1/-1 when the verified relation is a comparison up to sign.
    std::optional<int> sign;
    double duration_ms = 0.0;
    std::vector<std::string> notes;

    bool passed() const noexcept { return status == VerifyStatus::pass; }
};

// A statement "a_K(M n + c) == 0 (mod m) for all n <= n_max".
struct CongruenceClaim {
    std::uint32_t k_colors = 1;
    std::uint64_t step = 1;    // M
    std::uint64_t residue = 0; // c, 0 <= c < M
    std::uint32_t prime = 3;   // m
    std::uint64_t n_max = 0;

    std::string to_string() const;
};

// Checks that series[step*n + residue] == 0 for 0 <= n <= n_max; the series
// must have been computed to at least step*n_max + residue + 1 terms.
VerificationReport check_vanishing(const TruncSeries& series,
                                   const CongruenceClaim& claim);

} // namespace etaq
