#include "bercong/checker.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "bercong/bernoulli.hpp"

namespace bercong {

std::string to_string(Verdict v) { return v == Verdict::certified ? "CERTIFIED" : "NOT_CERTIFIED"; }

CongruenceFamily::CongruenceFamily(std::int64_t modulus_exponent, RationalFunction g0, std::vector<FamilyTerm> terms)
    : n_(modulus_exponent), g0_(std::move(g0)), terms_(std::move(terms)) {
  classes_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Polynomial& f = terms_[i].f;
    const std::string where = "term " + std::to_string(i + 1) + " (f = " + f.str() + ")";
    if (!f.has_integer_coeffs()) throw std::invalid_argument(where + ": index polynomial must have integer coefficients");
    if (f.is_constant()) {
      throw std::invalid_argument(where + ": index polynomial is constant; fold g*B_c into g0 instead");
    }
    if (f.leading().sign() <= 0) throw std::invalid_argument(where + ": leading coefficient must be positive");
    const Rational at_one = f.eval(Rational(1));
    classes_.push_back(at_one.num().get_si());
  }
}

CongruenceFamily CongruenceFamily::with_N(std::int64_t n) const { return CongruenceFamily(n, g0_, terms_); }

Valuation min_valuation_M(const CongruenceFamily& family) {
  Valuation m = family.g0().vt();
  for (const auto& term : family.terms()) m = std::min(m, term.g.vt());
  return m;
}

RationalFunction condition1_expression(const CongruenceFamily& family) {
  const RationalFunction t = RationalFunction::t();
  RationalFunction zero_class_sum;
  RationalFunction positive_sum;
  for (std::size_t i = 0; i < family.terms().size(); ++i) {
    const auto& term = family.terms()[i];
    const std::int64_t k = family.index_class(i);
    if (k == 0) {
      zero_class_sum += term.g;
    } else if (k >= 2) {
      const Rational bk_over_k = bernoulli_exact(k) / Rational(k);
      if (bk_over_k.is_zero()) continue;
      const RationalFunction euler = RationalFunction(1) - t.pow(k - 1);
      positive_sum += euler * RationalFunction(bk_over_k) * term.g * RationalFunction(term.f);
    }
  }
  return family.g0() - (RationalFunction(1) - t.pow(-1)) * zero_class_sum - positive_sum;
}

RationalFunction condition2_sum(const CongruenceFamily& family, std::int64_t k, std::int64_t m) {
  if (k > 0 || k % 2 != 0) throw std::invalid_argument("condition (2) needs an even class k <= 0");
  if (m < 1) throw std::invalid_argument("condition (2) needs m >= 1");
  RationalFunction sum;
  for (std::size_t i = 0; i < family.terms().size(); ++i) {
    if (family.index_class(i) != k) continue;
    const auto& term = family.terms()[i];
    sum += term.g * RationalFunction(term.f.pow(static_cast<std::uint64_t>(m)));
  }
  return sum;
}

RationalFunction condition3_sum(const CongruenceFamily& family, std::int64_t k, std::int64_t m) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("condition (3) needs an even class k >= 2");
  if (m < 2) throw std::invalid_argument("condition (3) needs m >= 2");
  const Rational k_pow = Rational(k).pow(m - 1);
  RationalFunction sum;
  for (std::size_t i = 0; i < family.terms().size(); ++i) {
    if (family.index_class(i) != k) continue;
    const auto& term = family.terms()[i];
    const Polynomial inner = term.f.pow(static_cast<std::uint64_t>(m)) - term.f.scaled(k_pow);
    sum += term.g * RationalFunction(inner);
  }
  return sum;
}

namespace {

std::set<std::int64_t> even_classes(const CongruenceFamily& family, bool positive) {
  std::set<std::int64_t> out;
  for (std::size_t i = 0; i < family.terms().size(); ++i) {
    const std::int64_t k = family.index_class(i);
    if (k % 2 != 0) continue;
    if (positive ? k >= 2 : k <= 0) out.insert(k);
  }
  return out;
}

// upper end of the m-range, or nullopt when every range is empty
std::optional<std::int64_t> m_upper(const CongruenceFamily& family, Valuation M) {
  if (M.is_infinite()) return std::nullopt;
  return family.N() - M.value();
}

template <typename SumFn>
void append_class_checks(std::vector<ConditionCheck>& checks, int condition, const std::set<std::int64_t>& classes,
                         std::int64_t m_lo, std::optional<std::int64_t> m_hi, std::int64_t n, SumFn&& sum) {
  if (!m_hi) return;
  for (const std::int64_t k : classes) {
    for (std::int64_t m = m_lo; m <= *m_hi; ++m) {
      const Valuation v = sum(k, m).vt();
      const std::int64_t required = n + 1 - m;
      checks.push_back({condition, k, m, v, required, v >= required});
    }
  }
}

std::int64_t exceptional_bound(const RationalFunction& g) {
  if (g.is_zero()) return 0;
  const auto primes = g.exceptional_primes();
  if (primes.empty()) return 0;
  const Integer& top = primes.back();
  if (!top.fits_slong_p()) throw std::overflow_error("exceptional prime too large: " + top.get_str());
  return top.get_si() + 1;
}

// Cauchy bound: every real root of h lies in (-B, B).
std::int64_t cauchy_bound(const Polynomial& h) {
  Rational best;
  for (std::size_t i = 0; i + 1 < h.coeffs().size(); ++i) {
    best = std::max(best, (h.coeffs()[i] / h.leading()).abs());
  }
  const Rational b = best + Rational(1);
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), b.num().get_mpz_t(), b.den().get_mpz_t());
  return c.fits_slong_p() ? c.get_si() : std::numeric_limits<std::int64_t>::max();
}

// least x such that f(y) >= floor_value for every integer y >= x
std::int64_t eventual_lower_bound(const Polynomial& f, std::int64_t floor_value) {
  const Polynomial h = f - Polynomial(Rational(floor_value));
  const std::int64_t bound = std::min<std::int64_t>(cauchy_bound(h), 10'000'000);
  std::int64_t x = bound;
  while (x > 0 && h.eval(Rational(x - 1)).sign() >= 0) --x;
  return x;
}

}  // namespace

ConditionReport check_theorem(const CongruenceFamily& family) {
  ConditionReport report{min_valuation_M(family), Verdict::not_certified, {}, std::nullopt};
  const std::int64_t n = family.N();
  const Valuation e1 = condition1_expression(family).vt();
  report.checks.push_back({1, std::nullopt, std::nullopt, e1, n, e1 >= n});

  const auto hi = m_upper(family, report.M);
  append_class_checks(report.checks, 2, even_classes(family, false), 1, hi, n,
                      [&](std::int64_t k, std::int64_t m) { return condition2_sum(family, k, m); });
  append_class_checks(report.checks, 3, even_classes(family, true), 2, hi, n,
                      [&](std::int64_t k, std::int64_t m) { return condition3_sum(family, k, m); });

  const bool ok = std::all_of(report.checks.begin(), report.checks.end(), [](const auto& c) { return c.pass; });
  report.verdict = ok ? Verdict::certified : Verdict::not_certified;
  if (ok) report.threshold_estimate = threshold_estimate(family, report);
  return report;
}

std::int64_t threshold_estimate(const CongruenceFamily& family, const ConditionReport& report) {
  if (report.verdict != Verdict::certified) {
    throw std::logic_error("threshold_estimate requires a CERTIFIED report");
  }
  std::int64_t p0 = 5;
  const auto& terms = family.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    p0 = std::max(p0, std::abs(family.index_class(i)) + 1);
    for (std::size_t j = 0; j < terms.size(); ++j) {
      p0 = std::max(p0, std::abs(family.index_class(i) - family.index_class(j)) + 1);
    }
  }
  if (report.M.is_finite()) p0 = std::max(p0, family.N() - report.M.value() + 2);

  p0 = std::max(p0, exceptional_bound(family.g0()));
  for (const auto& term : terms) p0 = std::max(p0, exceptional_bound(term.g));
  p0 = std::max(p0, exceptional_bound(condition1_expression(family)));
  for (const auto& check : report.checks) {
    if (check.condition == 1) continue;
    const RationalFunction expr = check.condition == 2 ? condition2_sum(family, *check.class_k, *check.m)
                                                       : condition3_sum(family, *check.class_k, *check.m);
    p0 = std::max(p0, exceptional_bound(expr));
  }

  // f_i(p) >= 2 and f_i(p) - 1 + M >= N
  std::int64_t floor_value = 2;
  if (report.M.is_finite()) floor_value = std::max(floor_value, family.N() + 1 - report.M.value());
  for (const auto& term : terms) p0 = std::max(p0, eventual_lower_bound(term.f, floor_value));

  return next_prime_at_least(p0);
}

}  // namespace bercong
