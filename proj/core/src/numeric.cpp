#include "bercong/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace bercong {

std::int64_t Valuation::value() const {
  if (infinite_) throw std::logic_error("value() of an infinite valuation");
  return value_;
}

std::string Valuation::str() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

std::ostream& operator<<(std::ostream& os, Valuation v) { return os << v.str(); }

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_.get_num() = num;
  q_.get_den() = den;
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s, 10));
    return Rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(std::int64_t k) const {
  if (k < 0) {
    if (is_zero()) throw std::domain_error("zero to a negative power");
    return (Rational(1) / *this).pow(-k);
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(k));
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::int64_t next_prime_at_least(std::int64_t n) {
  std::int64_t c = std::max<std::int64_t>(n, 2);
  while (!is_prime(c)) ++c;
  return c;
}

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = std::max<std::int64_t>(lo, 2); n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

namespace {

// Pollard rho (Floyd cycle detection); n odd composite.
Integer pollard_rho(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](const Integer& v) {
      Integer r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      Integer diff = x - y;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(Integer(n / d), out);
}

}  // namespace

std::vector<Integer> prime_divisors(const Integer& n) {
  Integer m = ::abs(n);
  std::vector<Integer> out;
  if (m <= 1) return out;
  for (unsigned long d = 2; d < 100000 && Integer(d) * d <= m; ++d) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      out.push_back(Integer(d));
      while (mpz_divisible_ui_p(m.get_mpz_t(), d)) mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
    }
  }
  if (m > 1) {
    std::vector<Integer> rest;
    factor_into(m, rest);
    out.insert(out.end(), rest.begin(), rest.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t vp_integer(const Integer& n, std::int64_t p) {
  if (n == 0) throw std::invalid_argument("vp_integer of zero");
  const Integer P(static_cast<long>(p));
  Integer m = n;
  std::int64_t v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), P.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), P.get_mpz_t());
    ++v;
  }
  return v;
}

Valuation vp_rational(const Rational& q, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("vp_rational: " + std::to_string(p) + " is not prime");
  if (q.is_zero()) return Valuation::infinity();
  return Valuation(vp_integer(q.num(), p) - vp_integer(q.den(), p));
}

Integer ipow(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return r;
}

Integer mod_floor(const Integer& n, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer r;
  if (m == 1) return Integer(0);
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::domain_error("mod_inverse: " + a.get_str() + " is not invertible modulo " + m.get_str());
  }
  return r;
}

}  // namespace bercong
