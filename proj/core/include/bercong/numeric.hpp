#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace bercong {

using Integer = mpz_class;

/// Exponent of a valuation: a signed integer or +infinity (the valuation of zero).
class Valuation {
 public:
  constexpr explicit Valuation(std::int64_t v) : value_(v), infinite_(false) {}

  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  /// Throws std::logic_error when infinite.
  std::int64_t value() const;

  std::string str() const;

  friend constexpr bool operator==(Valuation a, Valuation b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(Valuation a, std::int64_t b) {
    return !a.infinite_ && a.value_ == b;
  }
  friend constexpr std::strong_ordering operator<=>(Valuation a, std::int64_t b) {
    if (a.infinite_) return std::strong_ordering::greater;
    return a.value_ <=> b;
  }

  friend Valuation operator+(Valuation a, Valuation b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Valuation(a.value_ + b.value_);
  }

 private:
  constexpr Valuation() : value_(0), infinite_(true) {}
  std::int64_t value_;
  bool infinite_;
};

std::ostream& operator<<(std::ostream& os, Valuation v);

/// Exact rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Accepts "a" or "a/b" in base 10.
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  const mpq_class& raw() const { return q_; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  Rational pow(std::int64_t k) const;

  std::string str() const { return q_.get_str(); }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

bool is_prime(std::int64_t n);
bool is_prime(const Integer& n);

/// Smallest prime >= n (n >= 0).
std::int64_t next_prime_at_least(std::int64_t n);

/// Primes in [lo, hi], ascending.
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

/// Distinct prime divisors of |n|, ascending. Empty for n in {0, 1, -1}.
std::vector<Integer> prime_divisors(const Integer& n);

/// Exponent of p in n; n != 0.
std::int64_t vp_integer(const Integer& n, std::int64_t p);

/// p-adic valuation of q; +infinity for q = 0. Throws std::invalid_argument if p is not prime.
Valuation vp_rational(const Rational& q, std::int64_t p);

Integer ipow(std::int64_t base, std::int64_t exp);

/// Least non-negative residue of n modulo m (m > 0).
Integer mod_floor(const Integer& n, const Integer& m);

/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
Integer mod_inverse(const Integer& a, const Integer& m);

}  // namespace bercong
