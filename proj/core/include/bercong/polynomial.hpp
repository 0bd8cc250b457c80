#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bercong/numeric.hpp"

namespace bercong {

/// Univariate polynomial in t over the rationals. Coefficient i multiplies t^i;
/// there are no trailing zero coefficients, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial t() { return monomial(Rational(1), 1); }
  static Polynomial monomial(const Rational& c, std::size_t k);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  /// Index of the lowest nonzero coefficient; +infinity for zero.
  Valuation vt() const;

  bool has_integer_coeffs() const;

  Rational eval(const Rational& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(std::uint64_t k) const;

  /// Euclidean division; throws std::domain_error for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  /// Drop the first k coefficients (division by t^k, which must be exact).
  Polynomial shift_down(std::size_t k) const;

  /// Integer scalar c with c*this primitive in Z[t] and positive leading
  /// coefficient. Nonzero input.
  Rational primitive_scale() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Expression syntax accepted by parse_expr, e.g. "3*t^2 - 6*t + 1", "2/3*t".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace bercong
