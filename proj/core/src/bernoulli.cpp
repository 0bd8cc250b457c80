#include "bercong/bernoulli.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

namespace bercong {

namespace {

class BernoulliTable {
 public:
  static BernoulliTable& instance() {
    static BernoulliTable table;
    return table;
  }

  Rational get(std::int64_t n) {
    const auto idx = static_cast<std::size_t>(n);
    {
      std::shared_lock lock(mutex_);
      if (idx < values_.size()) return values_[idx];
    }
    std::unique_lock lock(mutex_);
    extend_to(idx);
    return values_[idx];
  }

 private:
  BernoulliTable() {
    values_.emplace_back(1);
    values_.emplace_back(Integer(-1), Integer(2));
  }

  // sum_{j=0}^{m} C(m+1, j) B_j = 0, solved for B_m
  void extend_to(std::size_t target) {
    while (values_.size() <= target) {
      const std::size_t m = values_.size();
      if (m % 2 == 1) {
        values_.emplace_back(0);
        continue;
      }
      mpq_class sum = 0;
      Integer binom = 1;  // C(m+1, j)
      for (std::size_t j = 0; j < m; ++j) {
        if (j == 1 || j % 2 == 0) sum += binom * values_[j].raw();
        binom = binom * static_cast<unsigned long>(m + 1 - j) / static_cast<unsigned long>(j + 1);
      }
      sum /= static_cast<unsigned long>(m + 1);
      values_.emplace_back(mpq_class(-sum));
    }
  }

  std::shared_mutex mutex_;
  std::vector<Rational> values_;
};

void require_bernoulli_prime(std::int64_t p) {
  if (p < 5 || !is_prime(p)) {
    throw std::invalid_argument("Bernoulli residues need a prime p >= 5, got " + std::to_string(p));
  }
}

using u64 = unsigned long long;
__extension__ typedef unsigned __int128 u128;

u64 powmod_u64(u64 base, std::int64_t exp, u64 mod) {
  u64 result = 1 % mod;
  base %= mod;
  auto e = static_cast<u64>(exp);
  while (e > 0) {
    if (e & 1ULL) result = static_cast<u64>(static_cast<u128>(result) * base % mod);
    e >>= 1ULL;
    if (e > 0) base = static_cast<u64>(static_cast<u128>(base) * base % mod);
  }
  return result;
}

// sum_{a=1}^{limit-1} a^n mod modulus, optionally skipping multiples of p
Integer power_sum_mod(std::int64_t n, std::int64_t p, const Integer& limit, const Integer& modulus, bool skip_p) {
  if (modulus.fits_ulong_p() && modulus < (Integer(1) << 62) && limit.fits_ulong_p()) {
    const u64 mod = modulus.get_ui();
    const u64 lim = limit.get_ui();
    u128 acc = 0;
    for (u64 a = 1; a < lim; ++a) {
      if (skip_p && a % static_cast<u64>(p) == 0) continue;
      acc += powmod_u64(a, n, mod);
    }
    return Integer(static_cast<unsigned long>(acc % mod));
  }
  Integer acc = 0, term, base;
  const Integer e(static_cast<long>(n));
  for (base = 1; base < limit; ++base) {
    if (skip_p && mpz_divisible_ui_p(base.get_mpz_t(), static_cast<unsigned long>(p))) continue;
    mpz_powm(term.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
    acc += term;
  }
  return mod_floor(acc, modulus);
}

}  // namespace

Rational bernoulli_exact(std::int64_t n, std::int64_t threshold) {
  if (n < 0) throw std::invalid_argument("bernoulli_exact: negative index");
  if (n > threshold) {
    throw IndexTooLarge("B_" + std::to_string(n) + " exceeds the exact threshold " + std::to_string(threshold) +
                        "; use bernoulli_mod for its residue modulo p^k");
  }
  if (n > 1 && n % 2 == 1) return Rational(0);
  return BernoulliTable::instance().get(n);
}

Integer vsc_denominator(std::int64_t n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("vsc_denominator: index must be even and >= 2, got " + std::to_string(n));
  }
  Integer d = 1;
  for (std::int64_t k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    if (is_prime(k + 1)) d *= static_cast<unsigned long>(k + 1);
    const std::int64_t other = n / k;
    if (other != k && is_prime(other + 1)) d *= static_cast<unsigned long>(other + 1);
  }
  return d;
}

PadicApprox bernoulli_mod(std::int64_t n, std::int64_t p, std::int64_t prec_abs) {
  require_bernoulli_prime(p);
  if (n < 0) throw std::invalid_argument("bernoulli_mod: negative index");
  if (prec_abs < 1) throw std::invalid_argument("bernoulli_mod: precision must be >= 1");
  if (n > 1 && n % 2 == 1) return PadicApprox::zero(p, prec_abs);
  if (n <= kExactBernoulliThreshold) return PadicApprox::truncate_rational(bernoulli_exact(n), p, prec_abs);
  return bernoulli_mod_powersum(n, p, prec_abs);
}

PadicApprox bernoulli_mod_powersum(std::int64_t n, std::int64_t p, std::int64_t prec_abs) {
  require_bernoulli_prime(p);
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("power-sum route needs an even index >= 4");
  if (prec_abs < 1) throw std::invalid_argument("bernoulli_mod: precision must be >= 1");
  const std::int64_t v_next = vp_integer(Integer(static_cast<long>(n + 1)), p);
  const std::int64_t r = (prec_abs + 1 + v_next + 1) / 2;
  const std::int64_t mod_exp = r + prec_abs + 1;
  const Integer modulus = ipow(p, mod_exp);
  // multiples of p contribute a^n with valuation >= n
  const bool skip_p = n >= mod_exp;
  const Integer sum = power_sum_mod(n, p, ipow(p, r), modulus, skip_p);
  // sum / p^r is known modulo p^(prec_abs + 1); the tail modulo p^(2r - 1 - v_next)
  const std::int64_t known = std::min(prec_abs + 1, 2 * r - 1 - v_next);
  return PadicApprox::from_parts(p, -r, sum, known).with_precision(prec_abs);
}

Rational zeta_at_negative(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("zeta_at_negative: n must be >= 1, got " + std::to_string(n));
  return -bernoulli_exact(n + 1) / Rational(n + 1);
}

}  // namespace bercong
