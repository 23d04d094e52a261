#pragma once

// Test-only oracles, kept independent of the library's arithmetic paths.

#include <cstdint>
#include <vector>

namespace etaq::tests {

// Schoolbook convolution mod m, truncated to min length.
inline std::vector<std::uint8_t> naive_convolution(
    const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b,
    std::uint32_t m) {
    const std::size_t p = std::min(a.size(), b.size());
    std::vector<std::uint8_t> out(p, 0);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; i + j < p; ++j)
            out[i + j] = static_cast<std::uint8_t>(
                (out[i + j] + a[i] * b[j]) % m);
    return out;
}

// E4 = 1 + 240 sum_{n>=1} sigma_3(n) q^n, with sigma_3 accumulated exactly
// before the final reduction mod m.
inline std::vector<std::uint8_t> e4_series_mod(std::uint32_t m,
                                               std::size_t precision) {
    std::vector<unsigned long long> sigma3(precision, 0);
    for (unsigned long long d = 1; d < precision; ++d) {
        const unsigned long long cube = d * d * d;
        for (unsigned long long n = d; n < precision; n += d) sigma3[n] += cube;
    }
    std::vector<std::uint8_t> out(precision, 0);
    out[0] = static_cast<std::uint8_t>(1 % m);
    for (std::size_t n = 1; n < precision; ++n)
        out[n] = static_cast<std::uint8_t>((240 % m) * (sigma3[n] % m) % m);
    return out;
}

} // namespace etaq::tests
