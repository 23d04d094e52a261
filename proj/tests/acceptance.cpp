// Acceptance suite: runs every top-level reproduction target and prints one
// pass/fail line per criterion. Exit code 0 iff all criteria pass.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "etaq/hecke.hpp"
#include "etaq/partitions.hpp"
#include "etaq/prover.hpp"
#include "etaq/ramanujan.hpp"
#include "series_oracles.hpp"

using namespace etaq;

namespace {

struct Criterion {
    int number;
    std::string label;
    bool pass = true;
    std::vector<std::string> details;
    double seconds = 0;
};

void note(Criterion& c, const std::string& line) { c.details.push_back(line); }

void require(Criterion& c, bool ok, const std::string& what) {
    if (!ok) {
        c.pass = false;
        c.details.push_back("FAILED: " + what);
    }
}

template <typename Fn>
Criterion run(int number, const std::string& label, Fn&& fn) {
    Criterion c{number, label};
    const auto start = std::chrono::steady_clock::now();
    try {
        fn(c);
    } catch (const std::exception& e) {
        c.pass = false;
        c.details.push_back(std::string("exception: ") + e.what());
    }
    c.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    return c;
}

TruncSeries random_series(std::uint32_t m, std::size_t p, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(0, static_cast<int>(m) - 1);
    std::vector<std::uint8_t> c(p);
    for (auto& v : c) v = static_cast<std::uint8_t>(dist(rng));
    return TruncSeries(m, std::move(c));
}

void criterion1(Criterion& c) {
    // Internal congruence through the Sturm bound for all 25 listed alphas,
    // with the modular certification (24-conditions, cusp nonnegativity).
    for (std::uint32_t alpha : theorem_alpha_list()) {
        const auto start = std::chrono::steady_clock::now();
        const auto rep = verify_internal(alpha);
        const double secs = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - start)
                                .count();
        std::ostringstream os;
        os << "alpha=" << alpha << " bound=" << rep.sturm_bound.value_or(0)
           << " sign=" << (rep.sign ? (*rep.sign > 0 ? "+1" : "-1") : "?")
           << " (" << static_cast<int>(secs * 1000) << " ms)";
        note(c, os.str());
        require(c, rep.passed(), "verify_internal(" + std::to_string(alpha) + ")");
        require(c, secs <= 60.0,
                "alpha=" + std::to_string(alpha) + " exceeded 60 s");
        // strict cusp positivity is also expected for the listed alphas;
        // flag any alpha where only the weak form holds
        const auto p = derive_params(alpha);
        for (const auto& eq : {g1_eta_data(p), g2_eta_data(p)}) {
            const auto mc = check_modularity(eq);
            require(c, mc.ok() && mc.cusps_nonnegative,
                    "cusp nonnegativity at alpha=" + std::to_string(alpha));
            if (!mc.cusps_strictly_positive)
                note(c, "alpha=" + std::to_string(alpha) +
                            ": only weak cusp nonnegativity holds");
        }
    }
}

void criterion2(Criterion& c) {
    for (std::uint32_t j = 0; j <= 2; ++j)
        for (std::uint32_t t = 0; t <= 8; ++t) {
            const auto rep = verify_base(j, t, 50);
            require(c, rep.passed(),
                    "base j=" + std::to_string(j) + " t=" + std::to_string(t));
        }
    note(c, "27 progressions a_{27j+3t+2}(27n+18+t), n <= 50");
}

void criterion3(Criterion& c) {
    for (std::uint32_t alpha : theorem_alpha_list()) {
        const auto rep = verify_family_member(alpha, 0, 50);
        require(c, rep.passed(), "family alpha=" + std::to_string(alpha) + " k=0");
    }
    for (std::uint32_t alpha : {1u, 4u, 7u, 63u}) {
        const auto rep = verify_family_member(alpha, 1, 10);
        require(c, rep.passed(), "family alpha=" + std::to_string(alpha) + " k=1");
    }
    // the alpha = 1 rows specialize to a_5(27n+19) and a_5(243n+172)
    require(c, delta_index(1, 0) == 19 && delta_index(1, 1) == 172,
            "a_5 progression offsets");
    note(c, "25 alphas at k=0 (n <= 50); alpha in {1,4,7,63} at k=1 (n <= 10)");
}

void criterion4(Criterion& c) {
    InternalOptions opt;
    opt.full_pipeline = false;
    opt.direct_n_max = 100;
    for (std::uint32_t alpha : {2u, 5u}) {
        const auto rep = verify_internal(alpha, opt);
        require(c, !rep.passed(),
                "alpha=" + std::to_string(alpha) + " unexpectedly passed");
        require(c, rep.first_failure.has_value(),
                "alpha=" + std::to_string(alpha) + " lacks a first mismatch");
        if (rep.first_failure) {
            std::ostringstream os;
            os << "alpha=" << alpha << " first mismatch at n=" << *rep.first_failure;
            note(c, os.str());
        }
    }
}

void criterion5(Criterion& c) {
    for (std::uint32_t m : {5u, 7u, 11u}) {
        const auto start = std::chrono::steady_clock::now();
        const auto rep = verify_a11(m, 5000);
        const double secs = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - start)
                                .count();
        std::ostringstream os;
        os << rep.claim << " (" << static_cast<int>(secs * 1000) << " ms)";
        note(c, os.str());
        require(c, rep.passed(), "a_11 case mod " + std::to_string(m));
    }
}

void criterion6(Criterion& c) {
    const std::size_t P = 10000;
    const auto f1 = eta_product(1, 1, 7, P);
    const auto cube = mul(f1, mul(f1, f1));

    std::vector<long long> tri(P, 0);
    for (std::uint64_t k = 0;; ++k) {
        const std::uint64_t e = k * (k + 1) / 2;
        if (e >= P) break;
        tri[e] += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(2 * k + 1);
    }
    require(c, cube == TruncSeries::from_signed(7, tri, P),
            "triangular-number expansion of f1^3");

    const auto support = dissection_support(cube, 7).classes;
    require(c, support == std::set<std::uint32_t>{0, 1, 3},
            "support of f1^3 mod 7");
    note(c, "support classes mod 7: {0, 1, 3}");
}

void criterion7(Criterion& c) {
    for (std::uint32_t m : {3u, 5u, 7u, 11u})
        for (std::uint32_t k = 1; k <= 6; ++k) {
            const auto s = gen_a(k, m, 60);
            for (std::uint32_t n = 0; n <= 25; ++n)
                require(c, s.series.coeff(n) == brute_force_a(k, n) % m,
                        "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                            " mod " + std::to_string(m));
        }
    note(c, "gen_a == brute_force_a for k <= 6, n <= 25, m in {3,5,7,11}");
}

void criterion8(Criterion& c) {
    std::mt19937 rng(123);

    // Frobenius cubing identity
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_series(3, 256, rng);
        if (!(frobenius_pow3(a) == mul(a, mul(a, a)))) {
            require(c, false, "frobenius cubing identity");
            break;
        }
    }

    // pentagonal inverse identity
    for (std::uint32_t m : {3u, 5u, 7u, 11u})
        for (std::uint32_t scale : {1u, 2u, 3u})
            require(c,
                    mul(eta_product(scale, 1, m, 1000),
                        eta_product(scale, -1, m, 1000)) ==
                        TruncSeries::one(m, 1000),
                    "pentagonal inverse at scale " + std::to_string(scale) +
                        " mod " + std::to_string(m));

    // U_p linearity and twisted multiplicativity
    for (int trial = 0; trial < 25; ++trial) {
        const auto a = random_series(3, 135, rng);
        const auto b = random_series(3, 135, rng);
        if (!(u_p(add(a, b), 3) == add(u_p(a, 3), u_p(b, 3)))) {
            require(c, false, "U_p linearity");
            break;
        }
        const auto lhs = u_p(mul(scale_exponents(a, 3), b), 3);
        const auto rhs = mul(a, u_p(b, 3));
        if (first_mismatch(lhs, rhs, lhs.precision() - 1)) {
            require(c, false, "U_p twisted multiplicativity");
            break;
        }
    }

    // E4 == 1 (mod 3) to 10^4 terms
    {
        const auto e4 = tests::e4_series_mod(3, 10000);
        bool ok = e4[0] == 1;
        for (std::size_t n = 1; n < e4.size(); ++n) ok = ok && e4[n] == 0;
        require(c, ok, "E4 == 1 (mod 3)");
    }

    // shift congruences for alpha <= 100
    for (std::uint32_t alpha = 0; alpha <= 100; ++alpha) {
        const auto p = derive_params(alpha);
        require(c, (p.shift1 + p.t) % 9 == 0,
                "s1 == -t (mod 9) at alpha=" + std::to_string(alpha));
        require(c, (p.shift2 + 10 * p.t + 9 * p.j) % 81 == 0,
                "s2 == -(10t+9j) (mod 81) at alpha=" + std::to_string(alpha));
    }

    // character case agreement for the listed alphas
    for (std::uint32_t alpha : theorem_alpha_list()) {
        const auto p = derive_params(alpha);
        const auto mc = check_modularity(g1_eta_data(p));
        const bool expect_trivial = alpha % 4 == 1 || alpha % 4 == 2;
        require(c,
                mc.ok() && (mc.form->character.kind ==
                            (expect_trivial ? CharacterKind::trivial
                                            : CharacterKind::minus_one)),
                "character case at alpha=" + std::to_string(alpha));
    }
}

} // namespace

int main() {
    std::vector<Criterion> results;
    results.push_back(run(1, "internal congruences through Sturm bounds (25 alphas)", criterion1));
    results.push_back(run(2, "base congruence, j <= 2, t <= 8, n <= 50", criterion2));
    results.push_back(run(3, "family spot-checks straight from coefficients", criterion3));
    results.push_back(run(4, "negative controls alpha in {2, 5}", criterion4));
    results.push_back(run(5, "a_11 Ramanujan congruences, n <= 5000", criterion5));
    results.push_back(run(6, "f1^3 mod 7 dissection support", criterion6));
    results.push_back(run(7, "oracle equivalence", criterion7));
    results.push_back(run(8, "property suite", criterion8));

    bool all = true;
    for (const auto& c : results) {
        std::printf("[%s] criterion %d: %s (%.1f s)\n",
                    c.pass ? "PASS" : "FAIL", c.number, c.label.c_str(),
                    c.seconds);
        for (const auto& d : c.details) std::printf("        %s\n", d.c_str());
        all = all && c.pass;
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed"
                            : "acceptance: FAILURES present");
    return all ? 0 : 1;
}
