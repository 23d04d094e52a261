#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "etaq/partitions.hpp"

using namespace etaq;

TEST_CASE("gen_a worked values") {
    // k = 1 is plain p(n): 1,1,2,3,5,7
    for (std::uint32_t m : {3u, 5u, 7u, 11u}) {
        const auto p = gen_a(1, m, 6);
        const std::uint32_t expect[] = {1, 1, 2, 3, 5, 7};
        for (std::size_t n = 0; n < 6; ++n)
            CHECK(p.series.coeff(n) == expect[n] % m);
    }
    // a_2(0..3) = 1, 2, 4, 8
    const auto a2 = gen_a(2, 11, 4);
    CHECK(a2.series.coeffs() == std::vector<std::uint8_t>{1, 2, 4, 8});
    // a_11(1) = 11 == 0 (mod 11)
    CHECK(gen_a(11, 11, 2).series.coeff(1) == 0);

    CHECK(a2.family == PartitionFamily::odd_colored);
    CHECK_THROWS_AS(gen_a(0, 3, 4), std::invalid_argument);
}

TEST_CASE("gen_a equals plain p for k = 1 at depth") {
    const std::size_t P = 1000;
    for (std::uint32_t m : {3u, 7u}) {
        const auto a1 = gen_a(1, m, P);
        const auto inv = eta_product(1, -1, m, P);
        CHECK(a1.series == inv);
        CHECK(gen_p(m, P).series == inv);
    }
}

TEST_CASE("a_k(0) and a_k(1)") {
    for (std::uint32_t k = 1; k <= 30; ++k) {
        for (std::uint32_t m : {3u, 5u, 11u}) {
            const auto s = gen_a(k, m, 2);
            CHECK(s.series.coeff(0) == 1);
            CHECK(s.series.coeff(1) == k % m); // a single part 1 in k colors
        }
    }
}

TEST_CASE("brute force oracle values") {
    CHECK(brute_force_a(3, 0) == 1);
    CHECK(brute_force_a(2, 3) == 8);
    CHECK(brute_force_a(1, 4) == 5);
    CHECK(brute_force_a(2, 18) == 3948);
    CHECK(brute_force_a(2, 18) % 3 == 0);
    CHECK(brute_force_a(11, 3) == 308);

    CHECK_THROWS_AS(brute_force_a(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_a(2, 61), std::invalid_argument);
    CHECK(brute_force_a(2, 61, 61) > 0); // guard is configurable
}

TEST_CASE("series engine agrees with the oracle") {
    for (std::uint32_t m : {3u, 5u, 7u, 11u}) {
        for (std::uint32_t k = 1; k <= 6; ++k) {
            const auto s = gen_a(k, m, 60);
            for (std::uint32_t n = 0; n <= 25; ++n)
                CHECK(s.series.coeff(n) == brute_force_a(k, n) % m);
        }
    }
}

TEST_CASE("p_k series") {
    const auto p2 = gen_p_colored(2, 5, 6);
    // p_2(n) = sum p(i) p(n-i): 1, 2, 5, 10, 20, 36
    const std::uint32_t expect[] = {1, 2, 5, 10, 20, 36};
    for (std::size_t n = 0; n < 6; ++n)
        CHECK(p2.series.coeff(n) == expect[n] % 5);
    CHECK_THROWS_AS(gen_p_colored(0, 3, 4), std::invalid_argument);
}
