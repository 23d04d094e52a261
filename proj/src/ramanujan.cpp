#include "etaq/ramanujan.hpp"

#include <chrono>
#include <stdexcept>

#include "etaq/partitions.hpp"

namespace etaq {

DissectionProfile dissection_support(const TruncSeries& series,
                                     std::uint32_t m, std::string series_id) {
    if (m < 2)
        throw std::invalid_argument("dissection_support: modulus must be >= 2");
    DissectionProfile profile;
    profile.series_id = std::move(series_id);
    profile.modulus = m;
    for (std::size_t n = 0; n < series.precision(); ++n)
        if (series.coeffs()[n] != 0)
            profile.classes.insert(static_cast<std::uint32_t>(n % m));
    return profile;
}

VerificationReport verify_vanishing(std::uint32_t k_colors, std::uint32_t prime,
                                    std::uint64_t step, std::uint64_t residue,
                                    std::uint64_t n_max) {
    const auto start = std::chrono::steady_clock::now();
    CongruenceClaim claim{k_colors, step, residue, prime, n_max};
    const std::size_t precision =
        static_cast<std::size_t>(step * n_max + residue + 1);
    const TruncSeries s = gen_a(k_colors, prime, precision).series;
    VerificationReport rep = check_vanishing(s, claim);
    rep.duration_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    return rep;
}

VerificationReport verify_a11(std::uint32_t prime_case, std::uint64_t n_max) {
    std::uint64_t residue = 0;
    switch (prime_case) {
        case 5:
        case 7: residue = 4; break;
        case 11: residue = 1; break;
        default:
            throw std::invalid_argument(
                "verify_a11: case must be one of 5, 7, 11");
    }
    return verify_vanishing(11, prime_case, prime_case, residue, n_max);
}

} // namespace etaq
