#include "etaq/trunc_series.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace etaq {

namespace {

std::atomic<std::size_t> g_precision_cap{std::size_t{1} << 23};

bool is_small_prime(std::uint32_t m) {
    if (m < 2) return false;
    for (std::uint32_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

void validate_modulus(std::uint32_t m) {
    if (m > 64 || !is_small_prime(m)) {
        std::ostringstream os;
        os << "TruncSeries modulus must be a small prime (<= 64), got " << m;
        throw std::invalid_argument(os.str());
    }
}

void validate_precision(std::size_t p) {
    if (p < 1)
        throw std::invalid_argument("TruncSeries precision must be >= 1");
    if (p > series_precision_cap()) {
        std::ostringstream os;
        os << "requested precision " << p << " exceeds cap "
           << series_precision_cap();
        throw std::length_error(os.str());
    }
}

struct PentTerm {
    std::size_t offset;
    std::int32_t sign;
};

// Offsets scale*k(3k-+1)/2 with sign (-1)^k, ascending, offset < limit.
std::vector<PentTerm> pentagonal_terms(std::uint64_t scale, std::size_t limit) {
    std::vector<PentTerm> terms;
    for (std::uint64_t k = 1;; ++k) {
        const std::uint64_t g1 = k * (3 * k - 1) / 2;
        if (scale > limit / g1) break; // also guards scale*g1 overflow
        const std::uint64_t o1 = scale * g1;
        if (o1 >= limit) break;
        const std::int32_t sign = (k & 1) ? -1 : 1;
        terms.push_back({static_cast<std::size_t>(o1), sign});
        const std::uint64_t o2 = scale * (k * (3 * k + 1) / 2);
        if (o2 < limit) terms.push_back({static_cast<std::size_t>(o2), sign});
    }
    return terms;
}

// In-place multiply by f_scale. Descending n keeps the reads on original
// values, since every read is at an index <= n.
void mul_pentagonal_inplace(std::vector<std::uint8_t>& c, std::uint32_t m,
                            std::uint64_t scale) {
    const auto terms = pentagonal_terms(scale, c.size());
    if (terms.empty()) return;
    const std::size_t lo = terms.front().offset;
    for (std::size_t n = c.size(); n-- > lo;) {
        std::int32_t acc = c[n];
        for (const auto& t : terms) {
            if (t.offset > n) break;
            acc += t.sign * static_cast<std::int32_t>(c[n - t.offset]);
        }
        acc %= static_cast<std::int32_t>(m);
        if (acc < 0) acc += static_cast<std::int32_t>(m);
        c[n] = static_cast<std::uint8_t>(acc);
    }
}

// In-place divide by f_scale via the pentagonal recurrence
// v(n) = a(n) - sum_k sign_k * v(n - offset_k).
void div_pentagonal_inplace(std::vector<std::uint8_t>& c, std::uint32_t m,
                            std::uint64_t scale) {
    const auto terms = pentagonal_terms(scale, c.size());
    if (terms.empty()) return;
    for (std::size_t n = terms.front().offset; n < c.size(); ++n) {
        std::int32_t acc = c[n];
        for (const auto& t : terms) {
            if (t.offset > n) break;
            acc -= t.sign * static_cast<std::int32_t>(c[n - t.offset]);
        }
        acc %= static_cast<std::int32_t>(m);
        if (acc < 0) acc += static_cast<std::int32_t>(m);
        c[n] = static_cast<std::uint8_t>(acc);
    }
}

// Apply f_scale^exponent by sequential sparse passes; mod 3 first rewrites
// the exponent in base 3, turning f_d^{3^i} into f_{d*3^i}.
void apply_eta_inplace(std::vector<std::uint8_t>& c, std::uint32_t m,
                       std::uint32_t scale, long long exponent) {
    if (exponent == 0) return;
    unsigned long long e =
        exponent < 0 ? -static_cast<unsigned long long>(exponent)
                     : static_cast<unsigned long long>(exponent);
    const bool invert = exponent < 0;
    if (m == 3) {
        std::uint64_t sc = scale;
        while (e != 0 && sc < c.size()) {
            const unsigned digit = static_cast<unsigned>(e % 3);
            for (unsigned i = 0; i < digit; ++i) {
                if (invert)
                    div_pentagonal_inplace(c, m, sc);
                else
                    mul_pentagonal_inplace(c, m, sc);
            }
            e /= 3;
            sc *= 3;
        }
    } else {
        for (unsigned long long i = 0; i < e; ++i) {
            if (invert)
                div_pentagonal_inplace(c, m, scale);
            else
                mul_pentagonal_inplace(c, m, scale);
        }
    }
}

} // namespace

std::size_t series_precision_cap() noexcept {
    return g_precision_cap.load(std::memory_order_relaxed);
}

void set_series_precision_cap(std::size_t cap) noexcept {
    g_precision_cap.store(cap, std::memory_order_relaxed);
}

TruncSeries::TruncSeries(std::uint32_t modulus, std::size_t precision)
    : modulus_(modulus) {
    validate_modulus(modulus);
    validate_precision(precision);
    coeffs_.assign(precision, 0);
}

TruncSeries::TruncSeries(std::uint32_t modulus, std::vector<std::uint8_t> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
    validate_modulus(modulus);
    validate_precision(coeffs_.size());
    for (std::uint8_t v : coeffs_)
        if (v >= modulus)
            throw std::invalid_argument("coefficient not reduced mod m");
}

TruncSeries TruncSeries::one(std::uint32_t modulus, std::size_t precision) {
    TruncSeries s(modulus, precision);
    s.coeffs_[0] = 1;
    return s;
}

TruncSeries TruncSeries::from_signed(std::uint32_t modulus,
                                     std::span<const long long> values,
                                     std::size_t precision) {
    TruncSeries s(modulus, precision);
    const auto m = static_cast<long long>(modulus);
    for (std::size_t i = 0; i < values.size() && i < precision; ++i) {
        long long v = values[i] % m;
        if (v < 0) v += m;
        s.coeffs_[i] = static_cast<std::uint8_t>(v);
    }
    return s;
}

std::uint8_t TruncSeries::coeff(std::size_t n) const {
    if (n >= coeffs_.size()) {
        std::ostringstream os;
        os << "coefficient index " << n << " out of range (precision "
           << coeffs_.size() << ")";
        throw std::out_of_range(os.str());
    }
    return coeffs_[n];
}

bool TruncSeries::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](std::uint8_t v) { return v == 0; });
}

std::size_t TruncSeries::nonzero_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(),
                      [](std::uint8_t v) { return v != 0; }));
}

namespace {

void require_same_modulus(const TruncSeries& a, const TruncSeries& b) {
    if (a.modulus() != b.modulus()) {
        std::ostringstream os;
        os << "modulus mismatch: " << a.modulus() << " vs " << b.modulus();
        throw std::invalid_argument(os.str());
    }
}

} // namespace

TruncSeries add(const TruncSeries& a, const TruncSeries& b) {
    require_same_modulus(a, b);
    const std::size_t p = std::min(a.precision(), b.precision());
    const auto m = static_cast<std::uint32_t>(a.modulus());
    std::vector<std::uint8_t> out(p);
    for (std::size_t i = 0; i < p; ++i) {
        std::uint32_t v = static_cast<std::uint32_t>(a.coeffs()[i]) + b.coeffs()[i];
        if (v >= m) v -= m;
        out[i] = static_cast<std::uint8_t>(v);
    }
    return TruncSeries(a.modulus(), std::move(out));
}

TruncSeries sub(const TruncSeries& a, const TruncSeries& b) {
    require_same_modulus(a, b);
    const std::size_t p = std::min(a.precision(), b.precision());
    const auto m = static_cast<std::int32_t>(a.modulus());
    std::vector<std::uint8_t> out(p);
    for (std::size_t i = 0; i < p; ++i) {
        std::int32_t v = static_cast<std::int32_t>(a.coeffs()[i]) - b.coeffs()[i];
        if (v < 0) v += m;
        out[i] = static_cast<std::uint8_t>(v);
    }
    return TruncSeries(a.modulus(), std::move(out));
}

TruncSeries negate(const TruncSeries& a) {
    return sub(TruncSeries(a.modulus(), a.precision()), a);
}

TruncSeries mul(const TruncSeries& a, const TruncSeries& b) {
    require_same_modulus(a, b);
    const std::size_t p = std::min(a.precision(), b.precision());
    const std::uint32_t m = a.modulus();

    // Iterate over the operand with fewer nonzero terms in the window.
    auto count_nonzero = [p](const TruncSeries& s) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < p; ++i) c += s.coeffs()[i] != 0;
        return c;
    };
    const bool a_outer = count_nonzero(a) <= count_nonzero(b);
    const auto& x = a_outer ? a : b;
    const auto& y = a_outer ? b : a;

    std::vector<std::uint32_t> acc(p, 0);
    // Each output slot accumulates at most one term per outer iteration;
    // reduce before uint32 can overflow.
    const std::uint64_t per_term =
        static_cast<std::uint64_t>(m - 1) * (m - 1);
    const std::uint64_t reduce_every =
        per_term ? std::numeric_limits<std::uint32_t>::max() / per_term : p;
    std::uint64_t since_reduce = 0;

    const std::uint8_t* yd = y.coeffs().data();
    for (std::size_t i = 0; i < p; ++i) {
        const std::uint32_t xi = x.coeffs()[i];
        if (xi == 0) continue;
        std::uint32_t* out = acc.data() + i;
        const std::size_t len = p - i;
        for (std::size_t j = 0; j < len; ++j)
            out[j] += xi * static_cast<std::uint32_t>(yd[j]);
        if (++since_reduce >= reduce_every) {
            for (auto& v : acc) v %= m;
            since_reduce = 0;
        }
    }

    std::vector<std::uint8_t> out(p);
    for (std::size_t i = 0; i < p; ++i)
        out[i] = static_cast<std::uint8_t>(acc[i] % m);
    return TruncSeries(a.modulus(), std::move(out));
}

TruncSeries pow(const TruncSeries& a, std::uint64_t exponent) {
    TruncSeries result = TruncSeries::one(a.modulus(), a.precision());
    if (exponent == 0) return result;
    TruncSeries base = a;
    while (true) {
        if (exponent & 1) result = mul(result, base);
        exponent >>= 1;
        if (exponent == 0) break;
        base = mul(base, base);
    }
    return result;
}

TruncSeries shift(const TruncSeries& a, std::size_t s) {
    std::vector<std::uint8_t> out(a.precision(), 0);
    for (std::size_t n = 0; n + s < a.precision(); ++n)
        out[n + s] = a.coeffs()[n];
    return TruncSeries(a.modulus(), std::move(out));
}

TruncSeries scale_exponents(const TruncSeries& a, std::uint32_t d) {
    if (d == 0) throw std::invalid_argument("scale_exponents: d must be >= 1");
    if (d == 1) return a;
    std::vector<std::uint8_t> out(a.precision(), 0);
    for (std::size_t n = 0; n * static_cast<std::size_t>(d) < a.precision(); ++n)
        out[n * d] = a.coeffs()[n];
    return TruncSeries(a.modulus(), std::move(out));
}

TruncSeries frobenius_pow3(const TruncSeries& a) {
    if (a.modulus() != 3)
        throw std::invalid_argument("frobenius_pow3 requires modulus 3");
    return scale_exponents(a, 3);
}

TruncSeries eta_product(std::uint32_t scale, long long exponent,
                        std::uint32_t modulus, std::size_t precision) {
    if (scale == 0) throw std::invalid_argument("eta_product: scale must be >= 1");
    TruncSeries s = TruncSeries::one(modulus, precision);
    if (exponent == 0) return s;
    if (modulus == 3 || exponent == 1 || exponent == -1)
        return mul_eta(s, scale, exponent);
    // Other small moduli: expand the base once, then binary powering.
    const TruncSeries base = mul_eta(s, scale, exponent < 0 ? -1 : 1);
    unsigned long long e = exponent < 0
                               ? -static_cast<unsigned long long>(exponent)
                               : static_cast<unsigned long long>(exponent);
    return pow(base, e);
}

TruncSeries mul_eta(const TruncSeries& a, std::uint32_t scale,
                    long long exponent) {
    if (scale == 0) throw std::invalid_argument("mul_eta: scale must be >= 1");
    if (exponent == 0) return a;
    const std::uint32_t m = a.modulus();
    if (m == 3 || exponent == 1 || exponent == -1) {
        std::vector<std::uint8_t> c = a.coeffs();
        apply_eta_inplace(c, m, scale, exponent);
        return TruncSeries(m, std::move(c));
    }
    return mul(a, eta_product(scale, exponent, m, a.precision()));
}

std::optional<std::size_t> first_mismatch(const TruncSeries& a,
                                          const TruncSeries& b,
                                          std::size_t through) {
    require_same_modulus(a, b);
    if (through >= a.precision() || through >= b.precision()) {
        std::ostringstream os;
        os << "first_mismatch through index " << through
           << " exceeds available precision (" << a.precision() << ", "
           << b.precision() << ")";
        throw std::invalid_argument(os.str());
    }
    for (std::size_t n = 0; n <= through; ++n)
        if (a.coeffs()[n] != b.coeffs()[n]) return n;
    return std::nullopt;
}

} // namespace etaq
