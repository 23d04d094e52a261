#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "etaq/partitions.hpp"
#include "etaq/ramanujan.hpp"

using namespace etaq;

namespace {

// sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}, reduced mod m.
TruncSeries triangular_expansion(std::uint32_t m, std::size_t precision) {
    std::vector<long long> c(precision, 0);
    for (std::uint64_t k = 0;; ++k) {
        const std::uint64_t e = k * (k + 1) / 2;
        if (e >= precision) break;
        c[e] += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(2 * k + 1);
    }
    return TruncSeries::from_signed(m, c, precision);
}

} // namespace

TEST_CASE("verify_a11 worked cases") {
    // n = 0 of the mod-11 case is a_11(1) = 11
    const auto r0 = verify_a11(11, 0);
    CHECK(r0.passed());
    CHECK(brute_force_a(11, 1) == 11);

    CHECK(verify_a11(5, 300).passed());
    CHECK(verify_a11(7, 300).passed());
    CHECK(verify_a11(11, 300).passed());
    CHECK_THROWS_AS(verify_a11(3, 10), std::invalid_argument);
}

TEST_CASE("a progression that genuinely fails is reported with its n") {
    // a_11(5n+1) mod 5 contains a_11(1) = 11 != 0
    const auto rep = verify_vanishing(11, 5, 5, 1, 50);
    CHECK(!rep.passed());
    CHECK(rep.first_failure == 0);
}

TEST_CASE("f1^3 mod 7: triangular expansion and support") {
    const std::size_t P = 10000;
    const auto f1 = eta_product(1, 1, 7, P);
    const auto cube = mul(f1, mul(f1, f1));
    CHECK(cube == triangular_expansion(7, P));

    const auto profile = dissection_support(cube, 7, "f1^3 mod 7");
    CHECK(profile.classes == std::set<std::uint32_t>{0, 1, 3});
    CHECK(profile.modulus == 7);
    CHECK(profile.series_id == "f1^3 mod 7");
}

TEST_CASE("dissection support of the zero series is empty") {
    CHECK(dissection_support(TruncSeries(5, 100), 5).classes.empty());
    CHECK_THROWS_AS(dissection_support(TruncSeries(5, 10), 1),
                    std::invalid_argument);
}

TEST_CASE("f2^10/f1^10 mod 5 lives in q^5") {
    const std::size_t P = 10000;
    auto s = TruncSeries::one(5, P);
    s = mul_eta(s, 2, 10);
    s = mul_eta(s, 1, -10);
    const auto profile = dissection_support(s, 5);
    CHECK(profile.classes == std::set<std::uint32_t>{0});
}

TEST_CASE("f2^11/f1^11 mod 11 lives in q^11") {
    const std::size_t P = 10000;
    auto s = TruncSeries::one(11, P);
    s = mul_eta(s, 2, 11);
    s = mul_eta(s, 1, -11);
    const auto profile = dissection_support(s, 11);
    CHECK(profile.classes == std::set<std::uint32_t>{0});
}

TEST_CASE("p(n) q^{2n}: exponents 1 mod 11 and even are 12 mod 22") {
    const std::size_t P = 4000;
    const auto doubled = scale_exponents(gen_p(11, P).series, 2);
    // indices == 1 (mod 11) with nonzero coefficients, within an even-only
    // series, must fall in 12 (mod 22); those coefficients are p(11n+6),
    // which vanish mod 11.
    for (std::size_t e = 0; e < P; ++e) {
        if (doubled.coeffs()[e] == 0) continue;
        CHECK(e % 2 == 0);
        if (e % 11 == 1) CHECK(e % 22 == 12);
    }
    const auto p_series = gen_p(11, P).series;
    for (std::size_t n = 6; n < P / 2; n += 11) {
        CHECK(p_series.coeff(n) == 0); // p(11n+6) == 0 (mod 11)
        CHECK(doubled.coeff(2 * n) == 0);
    }
}
