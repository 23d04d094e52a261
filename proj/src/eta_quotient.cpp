#include "etaq/eta_quotient.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace etaq {

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    const long long g = std::gcd(n < 0 ? -n : n, d);
    num = g ? n / g : n;
    den = g ? d / g : d;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

int kronecker_symbol(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    int result = 1;
    // Strip factors of 2 from n; (a|2) = 0, or +-1 by a mod 8.
    int twos = 0;
    while (n % 2 == 0) { n /= 2; ++twos; }
    if (twos % 2 == 1) {
        const long long a8 = ((a % 8) + 8) % 8;
        if (a8 == 3 || a8 == 5) result = -result;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    // n odd and positive from here; standard reciprocity loop.
    a = ((a % n) + n) % n;
    while (a != 0) {
        twos = 0;
        while (a % 2 == 0) { a /= 2; ++twos; }
        if (twos % 2 == 1) {
            const long long n8 = n % 8;
            if (n8 == 3 || n8 == 5) result = -result;
        }
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        const long long t = a;
        a = n % t;
        n = t;
    }
    return n == 1 ? result : 0;
}

std::string to_string(const Character& c) {
    switch (c.kind) {
        case CharacterKind::trivial: return "trivial";
        case CharacterKind::minus_one: return "(-1|d)";
        case CharacterKind::general: {
            std::ostringstream os;
            os << "(" << c.discriminant << "|d)";
            return os.str();
        }
    }
    return "?";
}

EtaQuotient::EtaQuotient(std::uint32_t level,
                         std::map<std::uint32_t, long long> exponents,
                         std::uint32_t e4_power)
    : level_(level), exponents_(std::move(exponents)), e4_power_(e4_power) {
    if (level_ < 1)
        throw std::invalid_argument("EtaQuotient: level must be >= 1");
    for (auto it = exponents_.begin(); it != exponents_.end();) {
        if (it->second == 0) {
            it = exponents_.erase(it);
            continue;
        }
        if (it->first == 0 || level_ % it->first != 0) {
            std::ostringstream os;
            os << "EtaQuotient: scale " << it->first << " does not divide level "
               << level_;
            throw std::invalid_argument(os.str());
        }
        ++it;
    }
}

long long EtaQuotient::exponent_sum() const noexcept {
    long long s = 0;
    for (const auto& [d, r] : exponents_) s += r;
    return s;
}

bool EtaQuotient::integral_weight() const noexcept {
    return exponent_sum() % 2 == 0;
}

long long EtaQuotient::weight() const {
    if (!integral_weight())
        throw std::logic_error("EtaQuotient: half-integral weight");
    return exponent_sum() / 2 + 4LL * e4_power_;
}

Rational EtaQuotient::prefactor_exponent() const {
    long long s = 0;
    for (const auto& [d, r] : exponents_) s += static_cast<long long>(d) * r;
    return Rational(s, 24);
}

namespace {

std::vector<std::uint32_t> divisors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

} // namespace

std::map<std::uint32_t, Rational> cusp_order_sums(const EtaQuotient& eq) {
    std::map<std::uint32_t, Rational> sums;
    for (std::uint32_t d : divisors(eq.level())) {
        Rational total(0, 1);
        for (const auto& [delta, r] : eq.exponents()) {
            const long long g = std::gcd(d, delta);
            total = total + Rational(g * g * r, delta);
        }
        sums.emplace(d, total);
    }
    return sums;
}

ModularityCheck check_modularity(const EtaQuotient& eq) {
    ModularityCheck out;
    const std::uint32_t N = eq.level();

    if (!eq.integral_weight()) {
        std::ostringstream os;
        os << "exponent sum " << eq.exponent_sum() << " is odd";
        out.violations.push_back(
            {ModularityViolation::Kind::weight_not_integral, os.str()});
    }

    long long scale_sum = 0, level_sum = 0;
    for (const auto& [d, r] : eq.exponents()) {
        scale_sum += static_cast<long long>(d) * r;
        level_sum += static_cast<long long>(N / d) * r;
    }
    if (scale_sum % 24 != 0) {
        std::ostringstream os;
        os << "sum d*r_d = " << scale_sum << " != 0 (mod 24)";
        out.violations.push_back(
            {ModularityViolation::Kind::scale_sum_not_divisible, os.str()});
    }
    if (level_sum % 24 != 0) {
        std::ostringstream os;
        os << "sum (N/d)*r_d = " << level_sum << " != 0 (mod 24)";
        out.violations.push_back(
            {ModularityViolation::Kind::level_sum_not_divisible, os.str()});
    }

    const auto sums = cusp_order_sums(eq);
    out.cusps_nonnegative = true;
    out.cusps_strictly_positive = true;
    for (const auto& [d, s] : sums) {
        if (s.negative()) {
            out.cusps_nonnegative = false;
            std::ostringstream os;
            os << "cusp sum at d = " << d << " is " << s.num << "/" << s.den;
            out.violations.push_back(
                {ModularityViolation::Kind::negative_cusp_sum, os.str()});
        }
        if (!s.positive()) out.cusps_strictly_positive = false;
    }

    if (!out.violations.empty()) return out;

    FormSpec spec;
    spec.level = N;
    spec.weight = eq.weight();

    // chi(d) = ((-1)^k prod delta^{r_delta} | d). Only the squarefree kernel
    // of the product matters for the symbol; accumulate prime exponents of
    // each delta times r_delta and keep the odd ones.
    long long kernel = 1;
    std::map<std::uint32_t, long long> prime_exp;
    for (auto [delta, r] : eq.exponents()) {
        std::uint32_t v = delta;
        for (std::uint32_t p = 2; p * p <= v; ++p) {
            while (v % p == 0) { prime_exp[p] += r; v /= p; }
        }
        if (v > 1) prime_exp[v] += r;
    }
    for (const auto& [p, e] : prime_exp)
        if (e % 2 != 0) kernel *= p;
    if (spec.weight % 2 != 0) kernel = -kernel;

    if (kernel == 1) {
        spec.character = {CharacterKind::trivial, 1};
    } else if (kernel == -1) {
        spec.character = {CharacterKind::minus_one, -1};
    } else {
        spec.character = {CharacterKind::general, kernel};
    }

    out.form = spec;
    return out;
}

} // namespace etaq
