#include "etaq/partitions.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace etaq {

PartitionSeries gen_a(std::uint32_t k, std::uint32_t modulus,
                      std::size_t precision) {
    if (k == 0)
        throw std::invalid_argument("gen_a: k must be >= 1 (a_0 is undefined)");
    TruncSeries s = TruncSeries::one(modulus, precision);
    s = mul_eta(s, 2, static_cast<long long>(k) - 1);
    s = mul_eta(s, 1, -static_cast<long long>(k));
    if (s.coeff(0) != 1)
        throw std::logic_error("gen_a: constant term must be 1");
    return {PartitionFamily::odd_colored, k, std::move(s)};
}

PartitionSeries gen_p(std::uint32_t modulus, std::size_t precision) {
    TruncSeries s = mul_eta(TruncSeries::one(modulus, precision), 1, -1);
    return {PartitionFamily::plain, 1, std::move(s)};
}

PartitionSeries gen_p_colored(std::uint32_t k, std::uint32_t modulus,
                              std::size_t precision) {
    if (k == 0)
        throw std::invalid_argument("gen_p_colored: k must be >= 1");
    TruncSeries s = mul_eta(TruncSeries::one(modulus, precision), 1,
                            -static_cast<long long>(k));
    return {PartitionFamily::colored, k, std::move(s)};
}

namespace {

using u128 = unsigned __int128;

constexpr u128 kU64Max = static_cast<u128>(~0ULL);

// C(a, b) exactly; caller keeps arguments small enough for u128.
u128 binomial(std::uint64_t a, std::uint64_t b) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    u128 r = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;
    }
    return r;
}

} // namespace

unsigned long long brute_force_a(std::uint32_t k, std::uint32_t n,
                                 std::uint32_t guard) {
    if (k == 0)
        throw std::invalid_argument("brute_force_a: k must be >= 1");
    if (n > guard) {
        std::ostringstream os;
        os << "brute_force_a: n = " << n << " exceeds oracle guard rail "
           << guard;
        throw std::invalid_argument(os.str());
    }

    // dp[rem] = count using part sizes > s only; sizes processed descending.
    std::vector<u128> dp(n + 1, 0);
    dp[n] = 1;
    for (std::uint32_t s = n; s >= 1; --s) {
        std::vector<u128> next(n + 1, 0);
        for (std::uint32_t rem = 0; rem <= n; ++rem) {
            if (dp[rem] == 0) continue;
            for (std::uint32_t mu = 0; mu * s <= rem; ++mu) {
                u128 mult = 1;
                if (s % 2 == 1)
                    mult = binomial(static_cast<std::uint64_t>(k) + mu - 1, mu);
                const u128 add = dp[rem] * mult;
                if (add / mult != dp[rem])
                    throw std::overflow_error("brute_force_a: overflow");
                next[rem - mu * s] += add;
            }
        }
        dp.swap(next);
    }
    if (dp[0] > kU64Max)
        throw std::overflow_error("brute_force_a: result exceeds 64 bits");
    return static_cast<unsigned long long>(dp[0]);
}

} // namespace etaq
