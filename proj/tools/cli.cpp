#include "cli.hpp"

#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bercong/bernoulli.hpp"
#include "bercong/expr.hpp"
#include "bercong/family_io.hpp"

namespace bercong::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSufficiencyNote =
    "The checked conditions are sufficient, not necessary: NOT_CERTIFIED does not mean the congruence fails. "
    "M is the minimum t-adic valuation over g0, g1, ..., gn (g0 included).";

json valuation_json(Valuation v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

std::string dash_or(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

std::string observed_text(const PrimeResult& r) {
  if (r.status == PrimeStatus::skipped) return "-";
  return (r.observed_is_lower_bound ? ">=" : "") + std::to_string(r.observed_valuation);
}

}  // namespace

std::string render_check_text(const std::string& name, const CongruenceFamily& family, const ConditionReport& report) {
  std::ostringstream os;
  if (!name.empty()) os << "family: " << name << "\n";
  os << "N = " << family.N() << ", M = " << report.M << "\n";
  os << std::left << std::setw(11) << "condition" << std::setw(8) << "class" << std::setw(6) << "m" << std::setw(10)
     << "v_t" << std::setw(10) << "required" << "result\n";
  for (const auto& c : report.checks) {
    os << std::setw(11) << c.condition << std::setw(8) << dash_or(c.class_k) << std::setw(6) << dash_or(c.m)
       << std::setw(10) << c.computed_vt.str() << std::setw(10) << c.required << (c.pass ? "pass" : "FAIL") << "\n";
  }
  os << "verdict: " << to_string(report.verdict) << "\n";
  if (report.threshold_estimate) {
    os << "threshold estimate (heuristic, not proven): p >= " << *report.threshold_estimate << "\n";
  }
  os << "note: " << kSufficiencyNote << "\n";
  return os.str();
}

std::string render_check_json(const std::string& name, const CongruenceFamily& family, const ConditionReport& report) {
  json doc;
  doc["family"] = name;
  doc["N"] = family.N();
  doc["verdict"] = to_string(report.verdict);
  doc["M"] = valuation_json(report.M);
  doc["checks"] = json::array();
  for (const auto& c : report.checks) {
    json row;
    row["condition"] = c.condition;
    row["class_k"] = c.class_k ? json(*c.class_k) : json(nullptr);
    row["m"] = c.m ? json(*c.m) : json(nullptr);
    row["computed_vt"] = valuation_json(c.computed_vt);
    row["required"] = c.required;
    row["pass"] = c.pass;
    doc["checks"].push_back(row);
  }
  doc["threshold_estimate"] = report.threshold_estimate ? json(*report.threshold_estimate) : json(nullptr);
  doc["note"] = kSufficiencyNote;
  return doc.dump(2) + "\n";
}

std::string render_verify_text(const std::string& name, const VerificationReport& report) {
  std::ostringstream os;
  if (!name.empty()) os << "family: " << name << "\n";
  os << "N = " << report.N << "\n";
  os << std::left << std::setw(8) << "p" << std::setw(15) << "status" << std::setw(11) << "valuation" << "precision\n";
  for (const auto& r : report.prime_results) {
    std::string status = to_string(r.status);
    if (r.status == PrimeStatus::skipped) status += " (" + r.skip_reason + ")";
    os << std::setw(8) << r.p << std::setw(15) << status << std::setw(11) << observed_text(r)
       << (r.status == PrimeStatus::skipped ? "-" : std::to_string(r.precision_used)) << "\n";
  }
  const auto& s = report.summary;
  const std::size_t evaluated = s.pass + s.fail + s.indeterminate;
  os << "summary: " << s.pass << "/" << evaluated << " PASS, " << s.fail << " FAIL, " << s.indeterminate
     << " INDETERMINATE, " << s.skipped << " SKIPPED\n";
  return os.str();
}

std::string render_verify_json(const std::string& name, const VerificationReport& report) {
  json doc;
  doc["family"] = name;
  doc["N"] = report.N;
  doc["prime_results"] = json::array();
  for (const auto& r : report.prime_results) {
    json row;
    row["p"] = r.p;
    row["status"] = to_string(r.status);
    row["reason"] = r.skip_reason.empty() ? json(nullptr) : json(r.skip_reason);
    if (r.status == PrimeStatus::skipped) {
      row["observed_valuation"] = nullptr;
      row["observed_is_lower_bound"] = nullptr;
      row["precision_used"] = nullptr;
    } else {
      row["observed_valuation"] = r.observed_valuation;
      row["observed_is_lower_bound"] = r.observed_is_lower_bound;
      row["precision_used"] = r.precision_used;
    }
    doc["prime_results"].push_back(row);
  }
  doc["summary"] = {{"pass", report.summary.pass},
                    {"fail", report.summary.fail},
                    {"skipped", report.summary.skipped},
                    {"indeterminate", report.summary.indeterminate}};
  return doc.dump(2) + "\n";
}

std::string render_zeta_text(const ZetaCoeffEstimate& est, const std::vector<BoundCheck>* checks) {
  std::ostringstream os;
  os << "p = " << est.p << ", class k = " << est.k << " (first index " << est.nodes.front() << "), degree "
     << est.degree << "\n";
  os << "certified precision: " << est.certified_prec << " (samples carried to " << est.sample_prec << ")\n";
  os << std::left << std::setw(5) << "i" << std::setw(12) << "valuation" << "estimate\n";
  for (std::size_t i = 0; i < est.coeffs.size(); ++i) {
    const PadicApprox trusted = est.coeffs[i].with_precision(est.certified_prec);
    const auto v = trusted.known_valuation();
    os << std::setw(5) << i << std::setw(12) << (v ? std::to_string(*v) : ">=" + std::to_string(est.certified_prec))
       << trusted.str() << "\n";
  }
  if (checks != nullptr) {
    os << "\n" << std::setw(20) << "check" << std::setw(5) << "i" << std::setw(10) << "bound" << std::setw(10)
       << "observed" << "status\n";
    for (const auto& c : *checks) {
      os << std::setw(20) << to_string(c.kind) << std::setw(5) << c.i << std::setw(10) << c.bound.str()
         << std::setw(10) << (c.observed ? std::to_string(*c.observed) : ">=" + std::to_string(est.certified_prec))
         << to_string(c.status) << "\n";
    }
  }
  return os.str();
}

namespace {

struct Options {
  std::string family_path;
  std::string format = "text";
  std::string primes;
  std::int64_t guard = kDefaultGuard;
  unsigned jobs = 1;
  std::int64_t bern_index = 0;
  std::int64_t prime = 0;
  std::int64_t prec = 0;
  std::int64_t zeta_class = 0;
  int degree = 0;
  bool check_bounds = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<std::int64_t, std::int64_t> parse_prime_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--primes expects A:B, got '" + text + "'");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
    const std::int64_t lo = std::stoll(a, &used_a);
    const std::int64_t hi = std::stoll(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("trailing characters");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--primes expects A:B with integers A, B; got '" + text + "'");
  }
}

int do_check(const Options& opt, std::ostream& out) {
  const FamilyFile file = load_family_file(opt.family_path);
  const CongruenceFamily family = to_family(file);
  const ConditionReport report = check_theorem(family);
  out << (opt.format == "json" ? render_check_json(file.name, family, report)
                               : render_check_text(file.name, family, report));
  return report.verdict == Verdict::certified ? kOk : kNegative;
}

int do_verify(const Options& opt, std::ostream& out) {
  const auto [lo, hi] = parse_prime_range(opt.primes);
  if (lo > hi) throw UsageError("--primes: empty range " + opt.primes);
  const FamilyFile file = load_family_file(opt.family_path);
  const CongruenceFamily family = to_family(file);
  const VerificationReport report = verify_range(family, lo, hi, opt.guard, opt.jobs);
  out << (opt.format == "json" ? render_verify_json(file.name, report) : render_verify_text(file.name, report));
  return report.summary.fail == 0 ? kOk : kNegative;
}

int do_bern(const Options& opt, std::ostream& out) {
  if (opt.bern_index < 0) throw UsageError("bern: index must be non-negative");
  if (opt.prime == 0) {
    if (opt.bern_index > kExactBernoulliThreshold) {
      throw UsageError("B_" + std::to_string(opt.bern_index) + " is above the exact threshold " +
                       std::to_string(kExactBernoulliThreshold) + "; pass --prime P --prec K for its residue");
    }
    out << bernoulli_exact(opt.bern_index).str() << "\n";
    return kOk;
  }
  if (opt.prec < 1) throw UsageError("bern: --prec K (K >= 1) is required with --prime");
  if (opt.prime < 5 || !is_prime(opt.prime)) throw UsageError("bern: --prime must be a prime >= 5");
  const PadicApprox b = bernoulli_mod(opt.bern_index, opt.prime, opt.prec);
  out << "B_" << opt.bern_index << " mod " << opt.prime << "^" << opt.prec << ": ";
  if (b.is_zero_class()) {
    out << "valuation >= " << opt.prec << " (zero class)\n";
  } else {
    out << "valuation " << b.v_min() << ", unit digits " << b.residue().get_str() << " mod " << opt.prime << "^"
        << (opt.prec - b.v_min()) << "\n";
  }
  return kOk;
}

int do_zeta(const Options& opt, std::ostream& out) {
  if (opt.prime < 5 || !is_prime(opt.prime)) throw UsageError("zeta-coeffs: --prime must be a prime >= 5");
  if (opt.degree < 0 || opt.degree > opt.prime - 2) throw UsageError("zeta-coeffs: --degree must lie in [0, p - 2]");
  if (opt.zeta_class % 2 != 0) throw UsageError("zeta-coeffs: --class must be even");
  const ZetaCoeffEstimate est = estimate_coeffs(opt.prime, opt.zeta_class, opt.degree);
  if (!opt.check_bounds) {
    out << render_zeta_text(est, nullptr);
    return kOk;
  }
  const auto checks = check_class_bounds(est);
  out << render_zeta_text(est, &checks);
  const bool violated =
      std::any_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.status == BoundStatus::violated; });
  return violated ? kNegative : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certify and test congruences between Bernoulli numbers with polynomial indices", "bercong"};
  app.require_subcommand(1);
  Options opt;

  auto* check = app.add_subcommand("check", "Check the sufficient conditions for a congruence family");
  check->add_option("family", opt.family_path, "Family file (JSON)")->required();
  check->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Test a congruence family prime by prime");
  verify->add_option("family", opt.family_path, "Family file (JSON)")->required();
  verify->add_option("--primes", opt.primes, "Prime range A:B")->required();
  verify->add_option("--guard", opt.guard, "Extra p-adic digits beyond N")->check(CLI::PositiveNumber);
  verify->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));

  auto* bern = app.add_subcommand("bern", "Print B_N exactly, or its class modulo P^K");
  bern->add_option("N", opt.bern_index, "Index")->required();
  auto* prime_opt = bern->add_option("--prime", opt.prime, "Prime P >= 5");
  bern->add_option("--prec", opt.prec, "Absolute precision K")->needs(prime_opt);

  auto* zeta = app.add_subcommand("zeta-coeffs", "Estimate p-adic zeta series coefficients a_i(p, k)");
  zeta->add_option("--prime", opt.prime, "Prime p >= 5")->required();
  zeta->add_option("--class", opt.zeta_class, "Even residue class k mod p - 1")->required();
  zeta->add_option("--degree", opt.degree, "Interpolation degree d <= p - 2")->required();
  zeta->add_flag("--check-bounds", opt.check_bounds, "Test the valuation bounds on the coefficients");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (check->parsed()) return do_check(opt, out);
    if (verify->parsed()) return do_verify(opt, out);
    if (bern->parsed()) return do_bern(opt, out);
    if (zeta->parsed()) return do_zeta(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FamilyFormatError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace bercong::cli
