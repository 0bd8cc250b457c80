#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bercong/numeric.hpp"

namespace bercong {

enum class Tri { yes, no, indeterminate };

std::string to_string(Tri t);

/// A p-adic number known modulo p^prec_abs: the class of all x with
/// v_p(x - residue * p^v_min) >= prec_abs.
///
/// Stored in normal form. A nonzero residue is a unit in [0, p^(prec_abs - v_min)),
/// so v_min is the exact valuation of every member. A zero residue carries
/// v_min = prec_abs - 1 and only says "valuation >= prec_abs".
///
/// Arithmetic is conservative: the class of a result contains the exact result
/// of the operation applied to any members of the operand classes.
class PadicApprox {
 public:
  /// pre: q == 0 or prec_abs > v_p(q). Throws std::invalid_argument otherwise.
  static PadicApprox from_rational(const Rational& q, std::int64_t p, std::int64_t prec_abs);

  /// Like from_rational but any precision is accepted; yields the zero class
  /// when v_p(q) >= prec_abs.
  static PadicApprox truncate_rational(const Rational& q, std::int64_t p, std::int64_t prec_abs);

  static PadicApprox zero(std::int64_t p, std::int64_t prec_abs);

  /// Class of residue * p^v_min modulo p^prec_abs; any integer residue, normalized.
  static PadicApprox from_parts(std::int64_t p, std::int64_t v_min, const Integer& residue,
                                std::int64_t prec_abs);

  std::int64_t prime() const { return p_; }
  std::int64_t v_min() const { return v_min_; }
  const Integer& residue() const { return r_; }
  std::int64_t prec_abs() const { return prec_; }

  bool is_zero_class() const { return r_ == 0; }

  /// Exact valuation shared by all members, when the residue is nonzero.
  std::optional<std::int64_t> known_valuation() const;

  /// A lower bound valid for every member of the class.
  std::int64_t valuation_lower_bound() const { return is_zero_class() ? prec_ : v_min_; }

  /// The canonical member residue * p^v_min.
  Rational representative() const;

  bool contains(const Rational& q) const;

  /// Coarsen to a lower absolute precision; a higher request is clamped to the current one.
  PadicApprox with_precision(std::int64_t prec_abs) const;

  /// Multiply by an exactly known rational.
  PadicApprox scaled(const Rational& c) const;

  PadicApprox operator-() const;
  friend PadicApprox operator+(const PadicApprox& a, const PadicApprox& b);
  friend PadicApprox operator-(const PadicApprox& a, const PadicApprox& b);
  friend PadicApprox operator*(const PadicApprox& a, const PadicApprox& b);

  friend bool operator==(const PadicApprox& a, const PadicApprox& b) = default;

  /// e.g. "5^-1 * 3 mod 5^2" or "O(5^3)".
  std::string str() const;

 private:
  PadicApprox(std::int64_t p, std::int64_t v_min, Integer r, std::int64_t prec)
      : p_(p), v_min_(v_min), r_(std::move(r)), prec_(prec) {}

  std::int64_t p_;
  std::int64_t v_min_;
  Integer r_;
  std::int64_t prec_;
};

/// yes: every member has valuation >= n. no: no member does.
/// indeterminate: the class is zero modulo p^prec_abs with prec_abs < n.
Tri valuation_at_least(const PadicApprox& x, std::int64_t n);

}  // namespace bercong
