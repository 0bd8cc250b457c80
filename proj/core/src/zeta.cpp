#include "bercong/zeta.hpp"

#include <algorithm>
#include <stdexcept>

#include "bercong/bernoulli.hpp"

namespace bercong {

namespace {

// margin of sample digits kept above the certified precision
constexpr std::int64_t kSampleMargin = 2;

bool ceil_at_most(const Rational& bound, std::int64_t v) {
  // v >= bound for an integer v
  return Rational(v) >= bound;
}

}  // namespace

std::string to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::verified: return "VERIFIED";
    case BoundStatus::violated: return "VIOLATED";
    case BoundStatus::untestable: return "UNTESTABLE";
  }
  return "?";
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::constant_term: return "constant-term";
    case BoundKind::general: return "general-bound";
    case BoundKind::small_index: return "small-index-bound";
    case BoundKind::linear_identity: return "linear-identity";
  }
  return "?";
}

std::int64_t residue_rep(std::int64_t k, std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("residue_rep: p must be an odd prime");
  const std::int64_t q = p - 1;
  const std::int64_t r = ((k % q) + q) % q;
  if (r % 2 != 0) throw std::invalid_argument("residue_rep: class " + std::to_string(k) + " is odd");
  return r == 0 ? q : r;
}

std::int64_t tail_bound(std::int64_t p, int d) {
  // floor(((p-2)(d+1) - 2(p-1)) / (p-1))
  const std::int64_t num = (p - 2) * (d + 1) - 2 * (p - 1);
  const std::int64_t den = p - 1;
  return num >= 0 ? num / den : -((-num + den - 1) / den);
}

ZetaCoeffEstimate estimate_coeffs(std::int64_t p, std::int64_t k, int d) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("estimate_coeffs: p must be a prime >= 5");
  if (d < 0 || d > p - 2) {
    throw std::invalid_argument("estimate_coeffs: degree " + std::to_string(d) + " outside [0, p - 2]");
  }
  const std::int64_t first = residue_rep(k, p);
  ZetaCoeffEstimate est{p, first % (p - 1), d, {}, tail_bound(p, d), 0, {}, {}};
  est.sample_prec = std::max<std::int64_t>(1, est.certified_prec + kSampleMargin);

  for (int j = 0; j <= d; ++j) {
    const std::int64_t n = first + j * (p - 1);
    const Rational euler = Rational(1) - Rational(Integer(p)).pow(n - 1);
    est.nodes.push_back(n);
    est.samples.push_back(bernoulli_mod(n, p, est.sample_prec).scaled(euler));
  }

  // Newton divided differences; every node gap (l - j)(p - 1) is a unit
  std::vector<PadicApprox> newton = est.samples;
  for (int level = 1; level <= d; ++level) {
    for (int j = d; j >= level; --j) {
      const Rational gap(est.nodes[j] - est.nodes[j - level]);
      newton[j] = (newton[j] - newton[j - 1]).scaled(Rational(1) / gap);
    }
  }

  // expand sum_j newton[j] prod_{l<j} (x - n_l) into the power basis
  std::vector<PadicApprox> poly{newton[d]};
  for (int j = d - 1; j >= 0; --j) {
    std::vector<PadicApprox> next(poly.size() + 1, PadicApprox::zero(p, est.sample_prec));
    const Rational shift(-est.nodes[j]);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = next[i + 1] + poly[i];
      next[i] = next[i] + poly[i].scaled(shift);
    }
    next[0] = next[0] + newton[j];
    poly = std::move(next);
  }
  est.coeffs = std::move(poly);
  return est;
}

PadicApprox evaluate_series(const ZetaCoeffEstimate& est, std::int64_t n) {
  PadicApprox acc = PadicApprox::zero(est.p, est.sample_prec);
  for (auto it = est.coeffs.rbegin(); it != est.coeffs.rend(); ++it) {
    acc = acc.scaled(Rational(n)) + *it;
  }
  return acc;
}

std::vector<BoundCheck> check_class_bounds(const ZetaCoeffEstimate& est) {
  const std::int64_t p = est.p;
  const std::int64_t c = est.certified_prec;
  std::vector<BoundCheck> out;

  // (1) constant term
  {
    const Rational expected = est.k == 0 ? Rational(1) - Rational(Integer(1), Integer(p)) : Rational(0);
    const PadicApprox diff = est.coeffs[0] - PadicApprox::truncate_rational(expected, p, est.sample_prec);
    const Tri agrees = valuation_at_least(diff, c);
    const auto v = diff.with_precision(c).known_valuation();
    out.push_back({BoundKind::constant_term, est.k, 0, Rational(c), v,
                   agrees == Tri::yes ? BoundStatus::verified : BoundStatus::violated});
  }

  // (2) and (3)
  for (int i = 0; i <= est.degree; ++i) {
    const PadicApprox trusted = est.coeffs[static_cast<std::size_t>(i)].with_precision(c);
    const auto v = trusted.known_valuation();
    auto judge = [&](BoundKind kind, const Rational& bound) {
      BoundStatus status = BoundStatus::untestable;
      if (bound < Rational(c)) {
        // a zero class at precision c means v(a_i) >= c > bound
        status = (!v || ceil_at_most(bound, *v)) ? BoundStatus::verified : BoundStatus::violated;
      }
      out.push_back({kind, est.k, i, bound, v, status});
    };
    judge(BoundKind::general, Rational(Integer((p - 2) * i), Integer(p - 1)) - Rational(2));
    if (p >= i + 2) judge(BoundKind::small_index, Rational(i - 1));
  }

  // the linear coefficient is pinned by the class representative itself
  if (est.k != 0 && est.degree >= 1) {
    const std::int64_t k0 = est.nodes[0];
    PadicApprox rhs = est.samples[0].scaled(Rational(Integer(1), Integer(k0)));
    for (int m = 2; m <= est.degree; ++m) {
      rhs = rhs - est.coeffs[static_cast<std::size_t>(m)].scaled(Rational(Integer(k0)).pow(m - 1));
    }
    const PadicApprox diff = est.coeffs[1] - rhs;
    const auto v = diff.with_precision(c).known_valuation();
    out.push_back({BoundKind::linear_identity, est.k, 1, Rational(c), v,
                   valuation_at_least(diff, c) == Tri::yes ? BoundStatus::verified : BoundStatus::violated});
  }
  return out;
}

std::size_t BoundReport::count(BoundStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const BoundCheck& b) { return b.status == s; }));
}

BoundReport check_bounds(std::int64_t p, int d) {
  BoundReport report{p, d, {}};
  for (std::int64_t k = 0; k < p - 1; k += 2) {
    const auto est = estimate_coeffs(p, k, d);
    auto checks = check_class_bounds(est);
    report.checks.insert(report.checks.end(), checks.begin(), checks.end());
  }
  return report;
}

}  // namespace bercong
