#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bercong/numeric.hpp"
#include "bercong/polynomial.hpp"

namespace bercong {

/// Raised when a rational function is evaluated at a root of its denominator.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Element of Q(t) in canonical form: numerator and denominator coprime, the
/// denominator a primitive integer polynomial with positive leading
/// coefficient. Zero is 0/1. Equal functions have identical fields.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(Polynomial num);  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : RationalFunction(Polynomial(c)) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(Polynomial(c)) {}  // NOLINT
  /// Throws std::domain_error when den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction t() { return RationalFunction(Polynomial::t()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// The polynomial itself when the denominator is constant; throws otherwise.
  Polynomial as_polynomial() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  /// Throws std::domain_error on division by the zero function.
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  /// Negative k is allowed for nonzero functions.
  RationalFunction pow(std::int64_t k) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  /// t-adic valuation: vt(num) - vt(den); +infinity for zero.
  Valuation vt() const;

  /// Exact value at an integer point; throws PoleError when the denominator vanishes there.
  Rational evaluate(const Integer& m) const;
  Rational evaluate(long m) const { return evaluate(Integer(m)); }

  /// Writes g = t^vt(g) * a(t)/b(t) with a, b in Z[t] sharing no common
  /// integer factor and a(0)*b(0) != 0; returns the primes dividing a(0)*b(0).
  /// Outside this set v_p(g(p)) = vt(g). Throws std::domain_error for zero.
  std::vector<Integer> exceptional_primes() const;

  /// Expression syntax accepted by parse_expr.
  std::string str() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace bercong
