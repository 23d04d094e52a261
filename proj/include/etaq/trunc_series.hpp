#pragma once

// Truncated formal power series over Z/mZ for a small prime m.
//
// A TruncSeries holds the first P coefficients of a series in q; index n is
// the coefficient of q^n. All exponents are integers (any fractional-exponent
// bookkeeping, e.g. from eta prefactors, must be resolved to an integer shift
// before a series is built). Values are stored as full residues in [0, m).
//
// Series are immutable after construction; every operation returns a new
// value. Operations on operands of different precision truncate to the
// minimum precision.

#include <cstdint>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace etaq {

// Global cap on series precision. Constructors and expanders refuse larger
// requests so a bad parameter cannot silently allocate gigabytes.
std::size_t series_precision_cap() noexcept;
void set_series_precision_cap(std::size_t cap) noexcept;

class TruncSeries {
public:
    // Zero series of the given precision.
    TruncSeries(std::uint32_t modulus, std::size_t precision);

    // Takes ownership of a coefficient vector already reduced mod m.
    TruncSeries(std::uint32_t modulus, std::vector<std::uint8_t> coeffs);

    static TruncSeries one(std::uint32_t modulus, std::size_t precision);

    // Convenience: reduce signed integer coefficients mod m. If `precision`
    // exceeds values.size() the tail is zero-filled.
    static TruncSeries from_signed(std::uint32_t modulus,
                                   std::span<const long long> values,
                                   std::size_t precision);

    std::uint32_t modulus() const noexcept { return modulus_; }
    std::size_t precision() const noexcept { return coeffs_.size(); }

    // Bounds-checked coefficient access; n must be < precision().
    std::uint8_t coeff(std::size_t n) const;

    const std::vector<std::uint8_t>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    std::size_t nonzero_count() const noexcept;

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    std::uint32_t modulus_;
    std::vector<std::uint8_t> coeffs_;
};

TruncSeries add(const TruncSeries& a, const TruncSeries& b);
TruncSeries sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries negate(const TruncSeries& a);

// Full convolution product truncated to min(a.precision, b.precision).
// The moduli must match. Internally iterates over the sparser operand.
TruncSeries mul(const TruncSeries& a, const TruncSeries& b);

// Binary powering; pow(a, 0) is the constant 1 at a's precision.
TruncSeries pow(const TruncSeries& a, std::uint64_t exponent);

// Multiply by q^s: coefficient n moves to n+s, precision preserved.
TruncSeries shift(const TruncSeries& a, std::size_t s);

// Substitute q -> q^d: coefficient n moves to d*n, precision preserved
// (tail zero-filled). d >= 1.
TruncSeries scale_exponents(const TruncSeries& a, std::uint32_t d);

// The cube map mod 3: F(q)^3 == F(q^3), realized as the exponent spread
// n -> 3n. Requires modulus 3.
TruncSeries frobenius_pow3(const TruncSeries& a);

// f_scale^exponent truncated to `precision`, where f_k = prod (1 - q^{kn}).
// exponent +1 is the sparse pentagonal-number expansion, -1 the pentagonal
// recurrence for the reciprocal. Larger exponents decompose by base-3 digits
// of the exponent mod 3 (driving everything through sparse factors) and by
// binary powering for other moduli. The q^{scale*exponent/24} eta prefactor
// is NOT included; callers track that shift.
TruncSeries eta_product(std::uint32_t scale, long long exponent,
                        std::uint32_t modulus, std::size_t precision);

// mul(a, eta_product(scale, exponent, a.modulus, a.precision)) without
// materializing a dense intermediate when the modulus is 3.
TruncSeries mul_eta(const TruncSeries& a, std::uint32_t scale,
                    long long exponent);

// Smallest index <= `through` where the coefficients differ, comparing only
// indices available in both operands. `through` is inclusive.
std::optional<std::size_t> first_mismatch(const TruncSeries& a,
                                          const TruncSeries& b,
                                          std::size_t through);

} // namespace etaq
