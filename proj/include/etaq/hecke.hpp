#pragma once

// The operator U_p on truncated q-expansions: coefficient n of the image is
// coefficient p*n of the input. Modulo p this is exactly the action of the
// Hecke operator T_p, which is the only regime implemented; the series
// modulus must therefore equal p.
//
// Precision bookkeeping is explicit: applying U_p e times divides the
// precision by p^e (floor), and HeckeResult records the ledger so callers
// can prove they computed enough terms before comparing at a bound.

#include <cstdint>

#include "etaq/trunc_series.hpp"

namespace etaq {

struct HeckeResult {
    TruncSeries series;
    std::uint32_t iterations;
    std::size_t input_precision;
    std::size_t output_precision; // == floor(input_precision / p^iterations)
};

// Single application; requires a.modulus() == p and a.precision() >= p.
TruncSeries u_p(const TruncSeries& a, std::uint32_t p);

// e-fold application; requires a.precision() >= p^e, else throws with the
// minimum input precision in the message.
HeckeResult u_p_iter(const TruncSeries& a, std::uint32_t p, std::uint32_t e);

} // namespace etaq
