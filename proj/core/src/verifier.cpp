#include "bercong/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "bercong/bernoulli.hpp"

namespace bercong {

std::string to_string(PrimeStatus s) {
  switch (s) {
    case PrimeStatus::pass: return "PASS";
    case PrimeStatus::fail: return "FAIL";
    case PrimeStatus::skipped: return "SKIPPED";
    case PrimeStatus::indeterminate: return "INDETERMINATE";
  }
  return "?";
}

PadicApprox congruence_defect(const CongruenceFamily& family, std::int64_t p, std::int64_t guard) {
  const std::int64_t prec = family.N() + guard;
  const Integer at(static_cast<long>(p));
  PadicApprox total = PadicApprox::truncate_rational(-family.g0().evaluate(at), p, prec);
  for (const auto& term : family.terms()) {
    const Rational coeff = term.g.evaluate(at);
    if (coeff.is_zero()) continue;
    const Rational index = term.f.eval(Rational(at));
    if (index.sign() < 0 || !index.num().fits_slong_p()) {
      throw std::invalid_argument("Bernoulli index " + index.str() + " out of range at p = " + std::to_string(p));
    }
    const std::int64_t boost = std::max<std::int64_t>(0, -vp_rational(coeff, p).value());
    const PadicApprox b = bernoulli_mod(index.num().get_si(), p, std::max<std::int64_t>(1, prec + boost));
    total = total + b.scaled(coeff).with_precision(prec);
  }
  return total.with_precision(prec);
}

namespace {

PrimeResult skipped(std::int64_t p, std::string reason) {
  PrimeResult r{p, PrimeStatus::skipped, std::move(reason)};
  return r;
}

PrimeResult evaluate_at(const CongruenceFamily& family, std::int64_t p, std::int64_t guard) {
  const PadicApprox d = congruence_defect(family, p, guard);
  PrimeResult r{p, PrimeStatus::indeterminate, {}};
  r.precision_used = d.prec_abs();
  if (const auto v = d.known_valuation()) {
    r.observed_valuation = *v;
  } else {
    r.observed_valuation = d.prec_abs();
    r.observed_is_lower_bound = true;
  }
  switch (valuation_at_least(d, family.N())) {
    case Tri::yes: r.status = PrimeStatus::pass; break;
    case Tri::no: r.status = PrimeStatus::fail; break;
    case Tri::indeterminate: r.status = PrimeStatus::indeterminate; break;
  }
  return r;
}

}  // namespace

PrimeResult verify_prime(const CongruenceFamily& family, std::int64_t p, std::int64_t guard) {
  if (!is_prime(p)) throw std::invalid_argument("verify_prime: " + std::to_string(p) + " is not prime");
  if (guard < 1) throw std::invalid_argument("verify_prime: guard must be >= 1");
  if (p <= 3) return skipped(p, "p <= 3");
  const Integer at(static_cast<long>(p));
  try {
    (void)family.g0().evaluate(at);
    for (const auto& term : family.terms()) (void)term.g.evaluate(at);
  } catch (const PoleError&) {
    return skipped(p, "pole at p");
  }
  for (const auto& term : family.terms()) {
    if (term.f.eval(Rational(at)) < Rational(1)) return skipped(p, "index f(p) < 1");
  }
  PrimeResult r = evaluate_at(family, p, guard);
  if (r.status == PrimeStatus::indeterminate) r = evaluate_at(family, p, 2 * guard);
  return r;
}

VerificationReport verify_range(const CongruenceFamily& family, std::int64_t p_min, std::int64_t p_max,
                                std::int64_t guard, unsigned jobs) {
  const auto primes = primes_in_range(std::max(p_min, kDefaultMinPrime), p_max);
  VerificationReport report{family.N(), std::vector<PrimeResult>(primes.size()), {}};

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < primes.size(); i = next++) {
        report.prime_results[i] = verify_prime(family, primes[i], guard);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = primes.size();
    }
  };
  const unsigned n_threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(primes.size())));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  for (const auto& r : report.prime_results) {
    switch (r.status) {
      case PrimeStatus::pass: ++report.summary.pass; break;
      case PrimeStatus::fail: ++report.summary.fail; break;
      case PrimeStatus::skipped: ++report.summary.skipped; break;
      case PrimeStatus::indeterminate: ++report.summary.indeterminate; break;
    }
  }
  return report;
}

}  // namespace bercong
