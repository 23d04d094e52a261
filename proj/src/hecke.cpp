#include "etaq/hecke.hpp"

#include <sstream>
#include <stdexcept>

namespace etaq {

namespace {

void require_modulus_p(const TruncSeries& a, std::uint32_t p) {
    if (a.modulus() != p) {
        std::ostringstream os;
        os << "U_p coincides with the Hecke action only mod p; series modulus "
           << a.modulus() << " != p = " << p;
        throw std::invalid_argument(os.str());
    }
}

} // namespace

TruncSeries u_p(const TruncSeries& a, std::uint32_t p) {
    require_modulus_p(a, p);
    const std::size_t out_p = a.precision() / p;
    if (out_p == 0) {
        std::ostringstream os;
        os << "u_p: input precision " << a.precision()
           << " is below the minimum " << p;
        throw std::invalid_argument(os.str());
    }
    std::vector<std::uint8_t> out(out_p);
    for (std::size_t n = 0; n < out_p; ++n)
        out[n] = a.coeffs()[n * p];
    return TruncSeries(a.modulus(), std::move(out));
}

HeckeResult u_p_iter(const TruncSeries& a, std::uint32_t p, std::uint32_t e) {
    require_modulus_p(a, p);
    if (e < 1) throw std::invalid_argument("u_p_iter: e must be >= 1");
    std::size_t needed = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (needed > series_precision_cap() / p)
            throw std::invalid_argument("u_p_iter: p^e exceeds the precision cap");
        needed *= p;
    }
    if (a.precision() < needed) {
        std::ostringstream os;
        os << "u_p_iter: input precision " << a.precision()
           << " is below the minimum " << needed << " required for e = " << e;
        throw std::invalid_argument(os.str());
    }
    HeckeResult result{a, e, a.precision(), a.precision()};
    TruncSeries current = a;
    for (std::uint32_t i = 0; i < e; ++i) current = u_p(current, p);
    result.output_precision = current.precision();
    result.series = std::move(current);
    return result;
}

} // namespace etaq
