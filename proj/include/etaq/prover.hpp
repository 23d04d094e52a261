#pragma once

// Machinery for the infinite mod-3 congruence families of the k-colored
// odd-part partition numbers a_K(n), K = 3*alpha + 2.
//
// For a fixed alpha = 9j + t the family rests on two facts:
//
//   base:      a_K(27n + 18 + t)            == 0 (mod 3)
//   internal:  a_K(9n + t) == eps * a_K(81n + 10t + 9j) (mod 3), eps in {+1,-1}
//
// which together lift to a_K(3^{2k+3} n + delta_k) == 0 (mod 3) for all k,
// with delta_k = 9^k (18+t) + alpha (9^k - 1)/8. The sign eps is harmless
// for the lift (the target is 0) and is determined during verification.
//
// The internal congruence is certified through modular forms: two eta
// quotients g1, g2 (g1 carrying an E4 power to match weights) lie in the
// same space M_k(Gamma_0(N), chi), and mod 3 their U_3^2 / U_3^4 images are
// f_1^A f_2^r times the two progression series. Agreement (up to one global
// sign) of the images through the Sturm bound proves agreement everywhere.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "etaq/eta_quotient.hpp"
#include "etaq/report.hpp"
#include "etaq/trunc_series.hpp"

namespace etaq {

enum class CharacterCase { trivial, minus_one };

struct FamilyParams {
    std::uint32_t alpha = 0;
    std::uint32_t j = 0;   // alpha = 9j + t, 0 <= t <= 8
    std::uint32_t t = 0;
    std::uint32_t r = 0;   // in {0,1}, r == alpha+1 (mod 2)
    // A == -3t - 3j - 2r (mod 24), chosen as the smallest nonnegative
    // representative for which both eta quotients have nonnegative cusp
    // sums. All other derived quantities are stable under A -> A + 24
    // up to a common reindexing, so raising A never changes the verified
    // congruence.
    std::uint32_t A = 0;
    bool a_raised = false; // A exceeds the least residue in [0, 24)
    std::uint32_t level = 1;          // N = 24 / gcd(3A + (-alpha-1+3r)/2, 8)
    std::uint64_t weight = 0;         // (81(A+r) - 1) / 2
    CharacterCase character = CharacterCase::trivial;
    std::uint64_t shift1 = 0;         // s1 = (alpha + 3A + 6r) / 8
    std::uint64_t shift2 = 0;         // s2 = (alpha + 27A + 54r) / 8
    std::uint64_t sturm = 0;
};

// The 25 alpha values of the verified infinite family.
const std::vector<std::uint32_t>& theorem_alpha_list();

// floor(weight / 12 * [SL_2(Z) : Gamma_0(level)]).
std::uint64_t sturm_bound(std::uint64_t weight, std::uint32_t level);

// Total over alpha >= 0; every FamilyParams invariant is checked.
FamilyParams derive_params(std::uint32_t alpha);

// Eta data of the two forms. Throws when the level from the parameter
// formula is odd (it cannot host the scale-2 factor); verify_internal
// reports that case as a failed check instead.
EtaQuotient g1_eta_data(const FamilyParams& params);
EtaQuotient g2_eta_data(const FamilyParams& params);

// Mod-3 reductions used for the Hecke comparison:
//   g1 == q^{s1} f_9^A f_18^r  sum a_K(n) q^n
//   g2 == q^{s2} f_81^A f_162^r sum a_K(n) q^n
// (the E4 power drops out, E4 == 1 mod 3).
TruncSeries build_g1_reduced(const FamilyParams& params, std::size_t precision);
TruncSeries build_g2_reduced(const FamilyParams& params, std::size_t precision);

struct InternalOptions {
    // With the full pipeline on, the modular certification runs and the
    // comparison depth is the Sturm bound; a direct coefficient comparison
    // at small n cross-checks the result either way.
    bool full_pipeline = true;
    std::uint64_t direct_n_max = 200;
    // Number of post-Hecke coefficients to compare; must be at least
    // sturm + 1 (the run is refused below that), defaults to exactly that.
    std::optional<std::uint64_t> compare_length;
};

VerificationReport verify_internal(std::uint32_t alpha,
                                   const InternalOptions& options = {});

// Base congruence a_{27j+3t+2}(27n + 18 + t) == 0 (mod 3) for n <= n_max.
VerificationReport verify_base(std::uint32_t j, std::uint32_t t,
                               std::uint64_t n_max);

// delta_k = 9^k (18+t) + alpha (9^k - 1)/8; satisfies
// delta_{k+1} = 9 delta_k + alpha.
std::uint64_t delta_index(std::uint32_t alpha, std::uint32_t k);

// Direct spot-check of a_K(3^{2k+3} n + delta_k) == 0 (mod 3), n <= n_max,
// straight from the generating function; independent of the modular route.
VerificationReport verify_family_member(std::uint32_t alpha, std::uint32_t k,
                                        std::uint64_t n_max);

// Runs the direct-mode internal check for every alpha in [lo, hi] and
// tabulates the outcomes. Purely exploratory.
std::vector<VerificationReport> scan_alpha(
    std::uint32_t lo, std::uint32_t hi, std::uint64_t n_max,
    const std::function<void(const VerificationReport&)>& sink = {});

} // namespace etaq
