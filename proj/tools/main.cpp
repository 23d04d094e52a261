// Command-line front end: every verification as a scriptable run with
// machine-readable reports.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "etaq/eta_quotient.hpp"
#include "etaq/partitions.hpp"
#include "etaq/prover.hpp"
#include "etaq/ramanujan.hpp"

using namespace etaq;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitAllPass = 0;
constexpr int kExitAnyFail = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
    std::string format = "text";
    std::string output_path;
    unsigned workers = 0; // 0: use ETAQ_WORKERS or hardware_concurrency
    bool zero_durations = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Report format on stdout")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", opts.output_path,
                    "Also write the JSON report to this path");
    cmd->add_option("--workers", opts.workers,
                    "Worker threads (default: ETAQ_WORKERS or all cores)");
    cmd->add_flag("--zero-durations", opts.zero_durations,
                  "Write zeros for timing fields (stable output)");
}

unsigned resolve_workers(const OutputOptions& opts) {
    if (opts.workers > 0) return opts.workers;
    if (const char* env = std::getenv("ETAQ_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? hc : 1;
}

std::vector<VerificationReport> run_tasks(
    std::vector<std::function<VerificationReport()>> tasks, unsigned workers) {
    std::vector<VerificationReport> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            try {
                results[i] = tasks[i]();
            } catch (const std::exception& e) {
                std::scoped_lock lock(error_mutex);
                failed = true;
                if (error.empty()) error = e.what();
            }
        }
    };

    const std::size_t n =
        std::min<std::size_t>(std::max(1u, workers), tasks.size());
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n);
        for (std::size_t i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failed) throw std::runtime_error(error);
    return results;
}

ordered_json report_to_json(const VerificationReport& r, bool zero_durations) {
    ordered_json j;
    j["claim"] = r.claim;
    j["bound"] = r.sturm_bound ? ordered_json(*r.sturm_bound) : ordered_json();
    j["precision"] = r.precision;
    j["status"] = r.passed() ? "pass" : "fail";
    j["first_failure"] =
        r.first_failure ? ordered_json(*r.first_failure) : ordered_json();
    j["sign"] = r.sign ? ordered_json(*r.sign) : ordered_json();
    j["duration_ms"] = zero_durations ? 0.0 : r.duration_ms;
    j["notes"] = r.notes;
    return j;
}

ordered_json document(const std::string& command, ordered_json config,
                      const std::vector<VerificationReport>& reports,
                      bool zero_durations) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["config"] = std::move(config);
    doc["results"] = ordered_json::array();
    for (const auto& r : reports)
        doc["results"].push_back(report_to_json(r, zero_durations));
    return doc;
}

int emit(const std::string& command, ordered_json config,
         const std::vector<VerificationReport>& reports,
         const OutputOptions& opts) {
    const auto doc =
        document(command, std::move(config), reports, opts.zero_durations);
    if (!opts.output_path.empty()) {
        std::ofstream out(opts.output_path);
        if (!out) {
            std::cerr << "error: cannot write " << opts.output_path << "\n";
            return kExitUsage;
        }
        out << doc.dump(2) << "\n";
    }
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.passed();
    if (opts.format == "json") {
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << (r.passed() ? "PASS " : "FAIL ") << r.claim;
            std::cout << " [precision=" << r.precision;
            if (r.sturm_bound) std::cout << ", bound=" << *r.sturm_bound;
            if (r.first_failure)
                std::cout << ", first_failure=" << *r.first_failure;
            if (!opts.zero_durations)
                std::cout << ", " << static_cast<long>(r.duration_ms) << " ms";
            std::cout << "]\n";
            for (const auto& n : r.notes) std::cout << "    note: " << n << "\n";
        }
        std::cout << "summary: " << passed << " passed, "
                  << reports.size() - passed << " failed\n";
    }
    return passed == reports.size() ? kExitAllPass : kExitAnyFail;
}

// --alpha accepts "theorem-list"/"all", single values, ranges "lo..hi",
// and comma-separated mixtures; the result is sorted and deduplicated.
std::vector<std::uint32_t> parse_alpha_spec(const std::string& spec) {
    std::set<std::uint32_t> out;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        if (token == "theorem-list" || token == "all") {
            for (auto a : theorem_alpha_list()) out.insert(a);
            continue;
        }
        const auto dots = token.find("..");
        if (dots != std::string::npos) {
            const unsigned long lo = std::stoul(token.substr(0, dots));
            const unsigned long hi = std::stoul(token.substr(dots + 2));
            if (hi < lo) throw CLI::ValidationError("--alpha", "empty range");
            if (hi - lo > 100000)
                throw CLI::ValidationError("--alpha", "range too large");
            for (unsigned long a = lo; a <= hi; ++a)
                out.insert(static_cast<std::uint32_t>(a));
            continue;
        }
        out.insert(static_cast<std::uint32_t>(std::stoul(token)));
    }
    if (out.empty()) throw CLI::ValidationError("--alpha", "no values given");
    return {out.begin(), out.end()};
}

std::vector<std::uint32_t> parse_small_list(const std::string& spec,
                                            const char* flag,
                                            std::uint32_t max_value) {
    std::set<std::uint32_t> out;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        const auto dots = token.find("..");
        const unsigned long lo =
            std::stoul(dots == std::string::npos ? token : token.substr(0, dots));
        const unsigned long hi =
            dots == std::string::npos ? lo : std::stoul(token.substr(dots + 2));
        for (unsigned long v = lo; v <= hi; ++v) {
            if (v > max_value)
                throw CLI::ValidationError(flag, "value out of range");
            out.insert(static_cast<std::uint32_t>(v));
        }
    }
    if (out.empty()) throw CLI::ValidationError(flag, "no values given");
    return {out.begin(), out.end()};
}

// ---------------------------------------------------------------- coeffs --

struct CoeffsConfig {
    std::uint32_t k = 1;
    std::string n_spec = "0..20";
    std::uint32_t modulus = 3;
    bool exact = false;
};

int cmd_coeffs(const CoeffsConfig& cfg) {
    const auto range = parse_small_list(cfg.n_spec, "--n", 100000000);
    const std::uint32_t hi = range.back();
    const auto series = gen_a(cfg.k, cfg.modulus, hi + 1).series;
    std::printf("%8s  %12s%s\n", "n",
                ("a_" + std::to_string(cfg.k) + " mod " +
                 std::to_string(cfg.modulus))
                    .c_str(),
                cfg.exact ? "  exact" : "");
    for (const auto n : range) {
        std::printf("%8u  %12u", n, series.coeff(n));
        if (cfg.exact) std::printf("  %llu", brute_force_a(cfg.k, n));
        std::printf("\n");
    }
    return kExitAllPass;
}

// ---------------------------------------------------------------- verify --

int cmd_base(const std::vector<std::uint32_t>& js,
             const std::vector<std::uint32_t>& ts, std::uint64_t n_max,
             const OutputOptions& out) {
    std::vector<std::function<VerificationReport()>> tasks;
    for (const auto j : js)
        for (const auto t : ts)
            tasks.push_back([=] { return verify_base(j, t, n_max); });
    const auto reports = run_tasks(std::move(tasks), resolve_workers(out));
    ordered_json cfg{{"j", js}, {"t", ts}, {"n_max", n_max}};
    return emit("verify base", std::move(cfg), reports, out);
}

int cmd_internal(const std::vector<std::uint32_t>& alphas, bool direct,
                 std::uint64_t n_max,
                 std::optional<std::uint64_t> compare_length,
                 const OutputOptions& out) {
    // Refuse infeasible precision requests up front, stating the minimum.
    if (compare_length) {
        for (const auto alpha : alphas) {
            const auto p = derive_params(alpha);
            if (*compare_length < p.sturm + 1) {
                std::cerr << "error: --compare-length " << *compare_length
                          << " is below the Sturm-mandated minimum "
                          << p.sturm + 1 << " for alpha=" << alpha << "\n";
                return kExitUsage;
            }
        }
    }
    std::vector<std::function<VerificationReport()>> tasks;
    for (const auto alpha : alphas) {
        InternalOptions opt;
        opt.full_pipeline = !direct;
        opt.direct_n_max = n_max;
        opt.compare_length = compare_length;
        tasks.push_back([=] { return verify_internal(alpha, opt); });
    }
    const auto reports = run_tasks(std::move(tasks), resolve_workers(out));
    ordered_json cfg{{"alpha", alphas},
                     {"mode", direct ? "direct" : "full"},
                     {"n_max", n_max}};
    cfg["compare_length"] =
        compare_length ? ordered_json(*compare_length) : ordered_json();
    return emit("verify internal", std::move(cfg), reports, out);
}

int cmd_family(const std::vector<std::uint32_t>& alphas,
               const std::vector<std::uint32_t>& ks, std::uint64_t n_max,
               const OutputOptions& out) {
    std::vector<std::function<VerificationReport()>> tasks;
    for (const auto alpha : alphas)
        for (const auto k : ks)
            tasks.push_back([=] { return verify_family_member(alpha, k, n_max); });
    const auto reports = run_tasks(std::move(tasks), resolve_workers(out));
    ordered_json cfg{{"alpha", alphas}, {"k", ks}, {"n_max", n_max}};
    return emit("verify family", std::move(cfg), reports, out);
}

int cmd_ramanujan(const std::vector<std::uint32_t>& cases, std::uint64_t n_max,
                  const OutputOptions& out) {
    std::vector<std::function<VerificationReport()>> tasks;
    for (const auto m : cases)
        tasks.push_back([=] { return verify_a11(m, n_max); });
    const auto reports = run_tasks(std::move(tasks), resolve_workers(out));
    ordered_json cfg{{"cases", cases}, {"n_max", n_max}};
    return emit("verify ramanujan", std::move(cfg), reports, out);
}

int cmd_scan(const std::string& alpha_spec, std::uint64_t n_max,
             const OutputOptions& out) {
    const auto alphas = parse_alpha_spec(alpha_spec);
    std::vector<std::function<VerificationReport()>> tasks;
    for (const auto alpha : alphas) {
        InternalOptions opt;
        opt.full_pipeline = false;
        opt.direct_n_max = n_max;
        tasks.push_back([=] { return verify_internal(alpha, opt); });
    }
    auto reports = run_tasks(std::move(tasks), resolve_workers(out));
    ordered_json cfg{{"alpha", alphas}, {"n_max", n_max}};
    // The scan is exploratory: tabulate rather than gate on failures.
    const int code = emit("verify scan", std::move(cfg), reports, out);
    if (out.format == "text") {
        std::cout << "admitting alphas:";
        for (std::size_t i = 0; i < alphas.size(); ++i)
            if (reports[i].passed()) std::cout << " " << alphas[i];
        std::cout << "\n";
    }
    return code == kExitAnyFail ? kExitAllPass : code;
}

int cmd_sturm(std::uint64_t weight, std::uint32_t level,
              const OutputOptions& out) {
    VerificationReport rep;
    const auto bound = sturm_bound(weight, level);
    std::ostringstream os;
    os << "Sturm bound for weight " << weight << ", level " << level << " is "
       << bound;
    rep.claim = os.str();
    rep.sturm_bound = bound;
    rep.status = VerifyStatus::pass;
    ordered_json cfg{{"weight", weight}, {"level", level}};
    return emit("verify sturm", std::move(cfg), {rep}, out);
}

std::map<std::uint32_t, long long> parse_eta_spec(const std::string& spec) {
    std::map<std::uint32_t, long long> exponents;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const auto colon = token.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--eta", "expected scale:exponent pairs");
        exponents[static_cast<std::uint32_t>(std::stoul(token.substr(0, colon)))] =
            std::stoll(token.substr(colon + 1));
    }
    if (exponents.empty())
        throw CLI::ValidationError("--eta", "no exponents given");
    return exponents;
}

int cmd_eta_check(std::uint32_t level, const std::string& eta_spec,
                  std::uint32_t e4, std::optional<std::uint32_t> alpha,
                  const std::string& form, const OutputOptions& out) {
    std::optional<EtaQuotient> eq;
    ordered_json cfg;
    if (alpha) {
        const auto p = derive_params(*alpha);
        eq = form == "g2" ? g2_eta_data(p) : g1_eta_data(p);
        cfg = ordered_json{{"alpha", *alpha}, {"form", form}};
    } else {
        if (eta_spec.empty()) {
            std::cerr << "error: provide --eta with --level, or --alpha\n";
            return kExitUsage;
        }
        eq = EtaQuotient(level, parse_eta_spec(eta_spec), e4);
        cfg = ordered_json{{"level", level}, {"eta", eta_spec}, {"e4", e4}};
    }

    const auto mc = check_modularity(*eq);
    VerificationReport rep;
    std::ostringstream os;
    if (mc.ok()) {
        os << "eta quotient lies in M_" << mc.form->weight << "(Gamma_0("
           << mc.form->level << "), " << to_string(mc.form->character) << ")";
        rep.status = VerifyStatus::pass;
    } else {
        os << "eta quotient fails the modularity conditions";
        rep.status = VerifyStatus::fail;
        for (const auto& v : mc.violations) rep.notes.push_back(v.detail);
    }
    rep.claim = os.str();
    std::ostringstream cusps;
    cusps << "cusp sums nonnegative: " << (mc.cusps_nonnegative ? "yes" : "no")
          << "; strictly positive: "
          << (mc.cusps_strictly_positive ? "yes" : "no");
    rep.notes.push_back(cusps.str());
    for (const auto& [d, s] : cusp_order_sums(*eq)) {
        std::ostringstream line;
        line << "cusp sum at d=" << d << ": " << s.num;
        if (s.den != 1) line << "/" << s.den;
        rep.notes.push_back(line.str());
    }
    return emit("verify eta-check", std::move(cfg), {rep}, out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-series verification of colored-partition congruences"};
    app.require_subcommand(1);

    // coeffs
    CoeffsConfig coeffs_cfg;
    auto* coeffs = app.add_subcommand(
        "coeffs", "Print a_k(n) modulo m (and exact oracle values)");
    coeffs->add_option("--k", coeffs_cfg.k, "Color count k >= 1")
        ->required()
        ->check(CLI::PositiveNumber);
    coeffs->add_option("--n", coeffs_cfg.n_spec,
                       "Index or range, e.g. 19 or 0..30")
        ->capture_default_str();
    coeffs->add_option("--modulus", coeffs_cfg.modulus, "Residue modulus")
        ->capture_default_str();
    coeffs->add_flag("--exact", coeffs_cfg.exact,
                     "Also print exact counts from the enumeration oracle");

    // verify + subcommands
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->require_subcommand(1);

    OutputOptions base_out;
    std::string base_j = "0..2", base_t = "0..8";
    std::uint64_t base_nmax = 50;
    auto* base = verify->add_subcommand("base", "Base congruence checks");
    base->add_option("--j", base_j, "j values, e.g. 0..2 or 0,1")
        ->capture_default_str();
    base->add_option("--t", base_t, "t values in 0..8")->capture_default_str();
    base->add_option("--n-max", base_nmax, "Progression depth")
        ->capture_default_str();
    add_output_options(base, base_out);

    OutputOptions internal_out;
    std::string internal_alpha;
    bool internal_direct = false;
    std::uint64_t internal_nmax = 200;
    std::optional<std::uint64_t> internal_compare;
    auto* internal = verify->add_subcommand(
        "internal", "Internal congruences via Hecke images and Sturm bounds");
    internal->add_option("--alpha", internal_alpha,
                         "Alpha values ('theorem-list', ranges, lists)")
        ->required();
    internal->add_flag("--direct", internal_direct,
                       "Direct coefficient comparison only (no modular "
                       "certification)");
    internal->add_option("--n-max", internal_nmax,
                         "Depth of the direct comparison")
        ->capture_default_str();
    internal->add_option("--compare-length", internal_compare,
                         "Post-Hecke coefficients to compare (>= Sturm+1)");
    add_output_options(internal, internal_out);

    OutputOptions family_out;
    std::string family_alpha = "theorem-list", family_k = "0";
    std::uint64_t family_nmax = 50;
    auto* family = verify->add_subcommand(
        "family", "Spot-check the infinite families directly");
    family->add_option("--alpha", family_alpha, "Alpha values")
        ->capture_default_str();
    family->add_option("--k", family_k, "Family levels k, e.g. 0,1")
        ->capture_default_str();
    family->add_option("--n-max", family_nmax, "Progression depth")
        ->capture_default_str();
    add_output_options(family, family_out);

    OutputOptions ram_out;
    std::string ram_cases = "5,7,11";
    std::uint64_t ram_nmax = 5000;
    auto* ram = verify->add_subcommand("ramanujan",
                                       "Ramanujan congruences for a_11");
    ram->add_option("--cases", ram_cases, "Moduli among 5,7,11")
        ->capture_default_str();
    ram->add_option("--n-max", ram_nmax, "Progression depth")
        ->capture_default_str();
    add_output_options(ram, ram_out);

    OutputOptions scan_out;
    std::string scan_alpha_spec = "0..80";
    std::uint64_t scan_nmax = 100;
    auto* scan = verify->add_subcommand(
        "scan", "Tabulate which alphas admit the internal congruence");
    scan->add_option("--alpha", scan_alpha_spec, "Alpha range")
        ->capture_default_str();
    scan->add_option("--n-max", scan_nmax, "Comparison depth")
        ->capture_default_str();
    add_output_options(scan, scan_out);

    OutputOptions sturm_out;
    std::uint64_t sturm_weight = 0;
    std::uint32_t sturm_level = 1;
    auto* sturm = verify->add_subcommand("sturm", "Print a Sturm bound");
    sturm->add_option("--weight", sturm_weight, "Modular weight")->required();
    sturm->add_option("--level", sturm_level, "Level N")->required();
    add_output_options(sturm, sturm_out);

    OutputOptions eta_out;
    std::uint32_t eta_level = 1, eta_e4 = 0;
    std::string eta_spec, eta_form = "g1";
    std::optional<std::uint32_t> eta_alpha;
    auto* eta = verify->add_subcommand(
        "eta-check", "Check the modularity conditions of an eta quotient");
    eta->add_option("--level", eta_level, "Level N");
    eta->add_option("--eta", eta_spec, "Exponents as scale:exp pairs, "
                                       "e.g. 1:184,2:4");
    eta->add_option("--e4", eta_e4, "Power of E4 to include");
    eta->add_option("--alpha", eta_alpha, "Use a derived family form instead");
    eta->add_option("--form", eta_form, "Which derived form (g1 or g2)")
        ->check(CLI::IsMember({"g1", "g2"}))
        ->capture_default_str();
    add_output_options(eta, eta_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (coeffs->parsed()) return cmd_coeffs(coeffs_cfg);
        if (base->parsed())
            return cmd_base(parse_small_list(base_j, "--j", 8),
                            parse_small_list(base_t, "--t", 8), base_nmax,
                            base_out);
        if (internal->parsed())
            return cmd_internal(parse_alpha_spec(internal_alpha),
                                internal_direct, internal_nmax,
                                internal_compare, internal_out);
        if (family->parsed())
            return cmd_family(parse_alpha_spec(family_alpha),
                              parse_small_list(family_k, "--k", 12),
                              family_nmax, family_out);
        if (ram->parsed()) {
            const auto cases = parse_small_list(ram_cases, "--cases", 11);
            for (const auto m : cases)
                if (m != 5 && m != 7 && m != 11)
                    throw CLI::ValidationError("--cases",
                                               "must be among 5,7,11");
            return cmd_ramanujan(cases, ram_nmax, ram_out);
        }
        if (scan->parsed()) return cmd_scan(scan_alpha_spec, scan_nmax, scan_out);
        if (sturm->parsed()) return cmd_sturm(sturm_weight, sturm_level, sturm_out);
        if (eta->parsed())
            return cmd_eta_check(eta_level, eta_spec, eta_e4, eta_alpha,
                                 eta_form, eta_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
