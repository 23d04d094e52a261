#pragma once

// Eta quotients prod_{d|N} eta(d z)^{r_d}, optionally times a power of the
// weight-4 Eisenstein series E4, and the sufficient conditions for such a
// quotient to lie in M_k(Gamma_0(N), chi):
//
//   (1) k = (1/2) sum r_d (+ 4 * e4_power) is an integer,
//   (2) sum d * r_d        == 0 (mod 24),
//   (3) sum (N/d) * r_d    == 0 (mod 24),
//   (4) for every divisor d of N:  sum_delta gcd(d, delta)^2 r_delta / delta >= 0.
//
// The cusps of Gamma_0(N) are represented by 1/d for d | N; the sums in (4)
// depend on d only through gcds, so the divisors cover all cusp classes.
// The E4 factor adds 4 per power to the weight and touches nothing else.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace etaq {

// Exact rational with small components; den > 0, reduced.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    Rational operator+(const Rational& o) const;
    bool operator==(const Rational& o) const = default;
    bool negative() const noexcept { return num < 0; }
    bool positive() const noexcept { return num > 0; }
};

// Kronecker symbol (a|n), extended to all integer pairs.
int kronecker_symbol(long long a, long long n);

enum class CharacterKind { trivial, minus_one, general };

struct Character {
    CharacterKind kind = CharacterKind::trivial;
    // Reduced symbol top for the general case: chi(d) = (discriminant | d).
    long long discriminant = 1;

    bool operator==(const Character&) const = default;
};

std::string to_string(const Character& c);

struct FormSpec {
    long long weight = 0;
    std::uint32_t level = 1;
    Character character;

    bool operator==(const FormSpec&) const = default;
};

class EtaQuotient {
public:
    // `exponents` maps each scale delta to r_delta; every key must divide
    // `level`, zero entries are dropped.
    EtaQuotient(std::uint32_t level, std::map<std::uint32_t, long long> exponents,
                std::uint32_t e4_power = 0);

    std::uint32_t level() const noexcept { return level_; }
    const std::map<std::uint32_t, long long>& exponents() const noexcept {
        return exponents_;
    }
    std::uint32_t e4_power() const noexcept { return e4_power_; }

    long long exponent_sum() const noexcept;
    bool integral_weight() const noexcept;
    // (1/2) sum r_d + 4 e4_power; requires integral_weight().
    long long weight() const;

    // q-expansion prefactor exponent sum d*r_d / 24 (may be non-integral or
    // negative for ill-formed quotients; the 24-condition makes it integral).
    Rational prefactor_exponent() const;

private:
    std::uint32_t level_;
    std::map<std::uint32_t, long long> exponents_;
    std::uint32_t e4_power_;
};

// The exact cusp sums of condition (4), one per divisor of the level.
std::map<std::uint32_t, Rational> cusp_order_sums(const EtaQuotient& eq);

struct ModularityViolation {
    enum class Kind {
        weight_not_integral,
        scale_sum_not_divisible,      // sum d * r_d mod 24
        level_sum_not_divisible,      // sum (N/d) * r_d mod 24
        negative_cusp_sum,
    };
    Kind kind;
    std::string detail;
};

struct ModularityCheck {
    // Set exactly when all conditions hold.
    std::optional<FormSpec> form;
    std::vector<ModularityViolation> violations;
    // Both cusp verdicts: condition (4) requires nonnegative sums; strict
    // positivity at every cusp is the stronger property some arguments use.
    bool cusps_nonnegative = false;
    bool cusps_strictly_positive = false;

    bool ok() const noexcept { return form.has_value(); }
};

ModularityCheck check_modularity(const EtaQuotient& eq);

} // namespace etaq
