#include "etaq/report.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace etaq {

std::string CongruenceClaim::to_string() const {
    std::ostringstream os;
    os << "a_" << k_colors << "(" << step << "n";
    if (residue != 0) os << "+" << residue;
    os << ") == 0 (mod " << prime << ") for 0 <= n <= " << n_max;
    return os.str();
}

VerificationReport check_vanishing(const TruncSeries& series,
                                   const CongruenceClaim& claim) {
    const auto start = std::chrono::steady_clock::now();
    if (claim.residue >= claim.step)
        throw std::invalid_argument("CongruenceClaim: residue must be < step");
    const std::uint64_t top = claim.step * claim.n_max + claim.residue;
    if (top >= series.precision()) {
        std::ostringstream os;
        os << "check_vanishing: series precision " << series.precision()
           << " is below required " << top + 1;
        throw std::invalid_argument(os.str());
    }

    VerificationReport rep;
    rep.claim = claim.to_string();
    rep.precision = series.precision();
    rep.status = VerifyStatus::pass;
    for (std::uint64_t n = 0; n <= claim.n_max; ++n) {
        if (series.coeffs()[claim.step * n + claim.residue] != 0) {
            rep.status = VerifyStatus::fail;
            rep.first_failure = n;
            break;
        }
    }
    rep.duration_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    return rep;
}

} // namespace etaq
