#include "etaq/prover.hpp"

#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "etaq/hecke.hpp"
#include "etaq/partitions.hpp"

namespace etaq {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

long long icast(std::uint64_t v) { return static_cast<long long>(v); }

} // namespace

const std::vector<std::uint32_t>& theorem_alpha_list() {
    static const std::vector<std::uint32_t> list = {
        1,  3,  4,  6,  7,  9,  11, 12, 14, 15, 20, 22, 23,
        27, 28, 30, 31, 36, 38, 39, 46, 47, 54, 55, 63};
    return list;
}

std::uint64_t sturm_bound(std::uint64_t weight, std::uint32_t level) {
    if (level < 1) throw std::invalid_argument("sturm_bound: level must be >= 1");
    // [SL_2(Z) : Gamma_0(N)] = N prod_{p | N} (1 + 1/p)
    std::uint64_t index = level;
    std::uint32_t n = level;
    for (std::uint32_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        index = index / p * (p + 1);
        while (n % p == 0) n /= p;
    }
    if (n > 1) index = index / n * (n + 1);
    return weight * index / 12;
}

FamilyParams derive_params(std::uint32_t alpha) {
    FamilyParams fp;
    fp.alpha = alpha;
    fp.j = alpha / 9;
    fp.t = alpha % 9;
    fp.r = (alpha % 2 == 0) ? 1 : 0;

    const long long cls =
        -3LL * fp.t - 3LL * fp.j - 2LL * fp.r;
    const std::uint32_t least = static_cast<std::uint32_t>(((cls % 24) + 24) % 24);

    // Raise A within its residue class until both quotients clear the cusp
    // condition. Only the sums at odd d can go negative; doubling out the
    // denominators they read
    //   g1: 18A - 3(alpha + 1 - 3r)   g2: 162A - 3(alpha + 1 - 27r).
    std::uint64_t A = least;
    const long long need1 = 3LL * (icast(alpha) + 1 - 3LL * fp.r);
    const long long need2 = 3LL * (icast(alpha) + 1 - 27LL * fp.r);
    while (18LL * icast(A) < need1 || 162LL * icast(A) < need2) A += 24;
    fp.A = static_cast<std::uint32_t>(A);
    fp.a_raised = fp.A != least;

    if ((fp.A + fp.r) % 2 != 1)
        throw std::domain_error(
            "derive_params: no admissible A gives integral weight");
    fp.weight = (81ULL * (fp.A + fp.r) - 1) / 2;

    const long long num = -icast(alpha) - 1 + 3LL * fp.r;
    if (num % 2 != 0)
        throw std::logic_error("derive_params: (-alpha-1+3r) must be even");
    const long long x = 3LL * fp.A + num / 2;
    const long long g = x == 0 ? 8 : std::gcd(x < 0 ? -x : x, 8LL);
    fp.level = static_cast<std::uint32_t>(24 / g);

    fp.character = (alpha % 4 == 1 || alpha % 4 == 2) ? CharacterCase::trivial
                                                      : CharacterCase::minus_one;

    const long long s1_num = icast(alpha) + 3LL * fp.A + 6LL * fp.r;
    const long long s2_num = icast(alpha) + 27LL * fp.A + 54LL * fp.r;
    if (s1_num % 8 != 0 || s2_num % 8 != 0)
        throw std::logic_error("derive_params: shifts are not integral");
    fp.shift1 = static_cast<std::uint64_t>(s1_num / 8);
    fp.shift2 = static_cast<std::uint64_t>(s2_num / 8);
    if ((fp.shift1 + fp.t) % 9 != 0)
        throw std::logic_error("derive_params: s1 != -t (mod 9)");
    if ((fp.shift2 + 10ULL * fp.t + 9ULL * fp.j) % 81 != 0)
        throw std::logic_error("derive_params: s2 != -(10t+9j) (mod 81)");

    fp.sturm = sturm_bound(fp.weight, fp.level);
    return fp;
}

EtaQuotient g1_eta_data(const FamilyParams& p) {
    const long long K = 3LL * p.alpha + 2;
    return EtaQuotient(p.level,
                       {{1, 9LL * p.A - K}, {2, K - 1 + 9LL * p.r}},
                       9 * (p.A + p.r));
}

EtaQuotient g2_eta_data(const FamilyParams& p) {
    const long long K = 3LL * p.alpha + 2;
    return EtaQuotient(p.level,
                       {{1, 81LL * p.A - K}, {2, K - 1 + 81LL * p.r}});
}

namespace {

TruncSeries build_reduced(const FamilyParams& p, std::size_t precision,
                          std::uint32_t base_scale, std::uint64_t shift_by) {
    const std::uint32_t K = 3 * p.alpha + 2;
    TruncSeries s = gen_a(K, 3, precision).series;
    s = mul_eta(s, base_scale, p.A);
    if (p.r != 0) s = mul_eta(s, 2 * base_scale, p.r);
    return shift(s, shift_by);
}

} // namespace

TruncSeries build_g1_reduced(const FamilyParams& p, std::size_t precision) {
    return build_reduced(p, precision, 9, p.shift1);
}

TruncSeries build_g2_reduced(const FamilyParams& p, std::size_t precision) {
    return build_reduced(p, precision, 81, p.shift2);
}

namespace {

struct SignedComparison {
    std::optional<int> sign;
    // True when both signs fit (everything compared was zero), so the sign
    // carries no information.
    bool ambiguous = false;
    std::optional<std::uint64_t> first_failure;   // when no sign works
    std::optional<std::uint64_t> plain_mismatch;  // first plain != index
};

SignedComparison compare_up_to_sign(const TruncSeries& x, const TruncSeries& y,
                                    std::size_t through) {
    SignedComparison out;
    const auto plus = first_mismatch(x, y, through);
    const auto minus = first_mismatch(x, negate(y), through);
    if (!plus) {
        out.sign = 1;
        out.ambiguous = !minus.has_value();
        return out;
    }
    out.plain_mismatch = *plus;
    if (!minus) {
        out.sign = -1;
        return out;
    }
    out.first_failure = std::max<std::uint64_t>(*plus, *minus);
    return out;
}

// The two progression slices of a_K straight from the generating function.
SignedComparison direct_internal_comparison(const FamilyParams& p,
                                            std::uint64_t n_max,
                                            std::uint64_t* precision_out) {
    const std::uint32_t K = 3 * p.alpha + 2;
    const std::uint64_t c81 = 10ULL * p.t + 9ULL * p.j;
    const std::size_t precision = 81 * n_max + c81 + 1;
    if (precision_out) *precision_out = precision;
    const TruncSeries a = gen_a(K, 3, precision).series;
    std::vector<std::uint8_t> lhs(n_max + 1), rhs(n_max + 1);
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        lhs[n] = a.coeffs()[9 * n + p.t];
        rhs[n] = a.coeffs()[81 * n + c81];
    }
    return compare_up_to_sign(TruncSeries(3, std::move(lhs)),
                              TruncSeries(3, std::move(rhs)), n_max);
}

std::string internal_claim(const FamilyParams& p, std::optional<int> sign,
                           bool full, std::uint64_t depth) {
    const std::uint32_t K = 3 * p.alpha + 2;
    std::ostringstream os;
    os << "a_" << K << "(9n+" << p.t << ") == ";
    if (sign && *sign == -1) os << "-";
    os << "a_" << K << "(81n+" << 10 * p.t + 9 * p.j << ") (mod 3) for ";
    if (full)
        os << "all n (U_3 images of g1, g2 compared through Sturm bound "
           << depth << ")";
    else
        os << "0 <= n <= " << depth << " (direct coefficients)";
    return os.str();
}

void describe_params(const FamilyParams& p, std::vector<std::string>& notes) {
    std::ostringstream os;
    os << "alpha=" << p.alpha << " j=" << p.j << " t=" << p.t << " r=" << p.r
       << " A=" << p.A << " N=" << p.level << " weight=" << p.weight
       << " s1=" << p.shift1 << " s2=" << p.shift2;
    notes.push_back(os.str());
    if (p.a_raised)
        notes.push_back(
            "A raised by 24 within its residue class to clear the cusp "
            "condition");
    if (p.t != p.r)
        notes.push_back("first-image progression residue follows the shift "
                        "arithmetic (t), which differs from r here");
}

} // namespace

VerificationReport verify_internal(std::uint32_t alpha,
                                   const InternalOptions& options) {
    const auto start = Clock::now();
    const FamilyParams p = derive_params(alpha);
    VerificationReport rep;
    describe_params(p, rep.notes);

    if (!options.full_pipeline) {
        std::uint64_t precision = 0;
        const auto cmp =
            direct_internal_comparison(p, options.direct_n_max, &precision);
        rep.claim = internal_claim(p, cmp.sign, false, options.direct_n_max);
        rep.precision = precision;
        rep.status = cmp.sign ? VerifyStatus::pass : VerifyStatus::fail;
        rep.sign = cmp.sign;
        rep.first_failure = cmp.first_failure;
        if (cmp.sign && *cmp.sign == -1) {
            std::ostringstream os;
            os << "plain comparison first differs at n=" << *cmp.plain_mismatch
               << "; the images agree after a global negation";
            rep.notes.push_back(os.str());
        }
        rep.duration_ms = ms_since(start);
        return rep;
    }

    rep.claim = internal_claim(p, std::nullopt, true, p.sturm);
    rep.sturm_bound = p.sturm;

    auto fail_with = [&](const std::string& why) {
        rep.status = VerifyStatus::fail;
        rep.notes.push_back(why);
        rep.duration_ms = ms_since(start);
        return rep;
    };

    // Certification first: both quotients must land in one modular space
    // with nonnegative cusp sums before the Sturm comparison means anything.
    if (p.level % 2 != 0)
        return fail_with("level from the parameter formula is odd and cannot "
                         "host the scale-2 eta factor");
    const auto mc1 = check_modularity(g1_eta_data(p));
    const auto mc2 = check_modularity(g2_eta_data(p));
    for (const auto* mc : {&mc1, &mc2}) {
        for (const auto& v : mc->violations)
            rep.notes.push_back((mc == &mc1 ? "g1: " : "g2: ") + v.detail);
    }
    if (!mc1.ok() || !mc2.ok())
        return fail_with("modularity conditions failed");
    if (!(*mc1.form == *mc2.form))
        return fail_with("g1 and g2 do not lie in the same space");
    if (static_cast<std::uint64_t>(mc1.form->weight) != p.weight ||
        mc1.form->level != p.level)
        return fail_with("certified weight/level disagree with the derived "
                         "parameters");
    const bool trivial = mc1.form->character.kind == CharacterKind::trivial;
    if (trivial != (p.character == CharacterCase::trivial) ||
        (!trivial && mc1.form->character.kind != CharacterKind::minus_one))
        return fail_with("certified character disagrees with the derived case");
    {
        std::ostringstream os;
        os << "cusp sums strictly positive: g1="
           << (mc1.cusps_strictly_positive ? "yes" : "no")
           << " g2=" << (mc2.cusps_strictly_positive ? "yes" : "no");
        rep.notes.push_back(os.str());
    }

    const std::uint64_t compare_len =
        options.compare_length.value_or(p.sturm + 1);
    if (compare_len < p.sturm + 1) {
        std::ostringstream os;
        os << "verify_internal: compare length " << compare_len
           << " is below the Sturm-mandated minimum " << p.sturm + 1;
        throw std::invalid_argument(os.str());
    }
    const std::size_t prec1 = 9 * compare_len + p.shift1;
    const std::size_t prec2 = 81 * compare_len + p.shift2;
    rep.precision = prec2;

    const HeckeResult h1 = u_p_iter(build_g1_reduced(p, prec1), 3, 2);
    const HeckeResult h2 = u_p_iter(build_g2_reduced(p, prec2), 3, 4);
    if (h1.output_precision < compare_len || h2.output_precision < compare_len)
        throw std::logic_error("verify_internal: precision ledger breach");

    const auto cmp =
        compare_up_to_sign(h1.series, h2.series, compare_len - 1);
    if (!cmp.sign) {
        rep.first_failure = cmp.first_failure;
        return fail_with("Hecke images disagree under both signs");
    }
    rep.sign = cmp.sign;
    rep.claim = internal_claim(p, cmp.sign, true, p.sturm);
    if (*cmp.sign == -1) {
        std::ostringstream os;
        os << "plain comparison first differs at n=" << *cmp.plain_mismatch
           << "; the images agree after a global negation";
        rep.notes.push_back(os.str());
    }

    // Independent route: the same congruence read off gen_a coefficients.
    const std::uint64_t cross_n = std::min<std::uint64_t>(options.direct_n_max,
                                                          200);
    const auto direct = direct_internal_comparison(p, cross_n, nullptr);
    if (!direct.sign) {
        rep.first_failure = direct.first_failure;
        return fail_with("direct-coefficient cross-check failed");
    }
    if (!direct.ambiguous && *direct.sign != *cmp.sign)
        return fail_with("cross-check sign disagrees with the Hecke comparison");
    {
        std::ostringstream os;
        os << "direct cross-check to n=" << cross_n << " agrees";
        rep.notes.push_back(os.str());
    }

    rep.status = VerifyStatus::pass;
    rep.duration_ms = ms_since(start);
    return rep;
}

VerificationReport verify_base(std::uint32_t j, std::uint32_t t,
                               std::uint64_t n_max) {
    if (t > 8) throw std::invalid_argument("verify_base: t must be in 0..8");
    const auto start = Clock::now();
    const std::uint32_t K = 27 * j + 3 * t + 2;
    CongruenceClaim claim{K, 27, 18ULL + t, 3, n_max};
    const std::size_t precision = 27 * n_max + 18 + t + 1;
    const TruncSeries s = gen_a(K, 3, precision).series;
    VerificationReport rep = check_vanishing(s, claim);
    rep.duration_ms = ms_since(start);
    return rep;
}

std::uint64_t delta_index(std::uint32_t alpha, std::uint32_t k) {
    const std::uint32_t t = alpha % 9;
    unsigned __int128 p9 = 1;
    for (std::uint32_t i = 0; i < k; ++i) p9 *= 9;
    const unsigned __int128 d =
        p9 * (18 + t) + static_cast<unsigned __int128>(alpha) * (p9 - 1) / 8;
    if (d > static_cast<unsigned __int128>(~0ULL))
        throw std::overflow_error("delta_index: overflow");
    return static_cast<std::uint64_t>(d);
}

VerificationReport verify_family_member(std::uint32_t alpha, std::uint32_t k,
                                        std::uint64_t n_max) {
    const auto start = Clock::now();
    const std::uint32_t K = 3 * alpha + 2;
    unsigned __int128 step = 27;
    for (std::uint32_t i = 0; i < k; ++i) step *= 9;
    const std::uint64_t delta = delta_index(alpha, k);
    const unsigned __int128 top = step * n_max + delta;
    if (top + 1 > series_precision_cap()) {
        std::ostringstream os;
        os << "verify_family_member: required precision exceeds the cap ("
           << "alpha=" << alpha << ", k=" << k << ", n_max=" << n_max << ")";
        throw std::invalid_argument(os.str());
    }
    CongruenceClaim claim{K, static_cast<std::uint64_t>(step), delta, 3, n_max};
    const TruncSeries s =
        gen_a(K, 3, static_cast<std::size_t>(top) + 1).series;
    VerificationReport rep = check_vanishing(s, claim);
    rep.duration_ms = ms_since(start);
    return rep;
}

std::vector<VerificationReport> scan_alpha(
    std::uint32_t lo, std::uint32_t hi, std::uint64_t n_max,
    const std::function<void(const VerificationReport&)>& sink) {
    std::vector<VerificationReport> out;
    for (std::uint32_t alpha = lo; alpha <= hi && alpha >= lo; ++alpha) {
        InternalOptions opt;
        opt.full_pipeline = false;
        opt.direct_n_max = n_max;
        out.push_back(verify_internal(alpha, opt));
        if (sink) sink(out.back());
        if (alpha == hi) break;
    }
    return out;
}

} // namespace etaq
