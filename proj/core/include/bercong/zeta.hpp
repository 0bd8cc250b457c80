#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bercong/numeric.hpp"
#include "bercong/padic.hpp"

namespace bercong {

/// Truncated power series in n for one branch of the p-adic zeta function:
///
///   (1 - p^(n-1)) B_n = sum_i a_i n^i   for n >= 0, n == k (mod p - 1).
///
/// The a_i are recovered by interpolating d + 1 Bernoulli values of the class.
/// Each estimate agrees with the true coefficient modulo p^certified_prec; the
/// stored classes carry sample_prec digits, which is more than is certified.
struct ZetaCoeffEstimate {
  std::int64_t p;
  std::int64_t k;  // canonical even representative in [0, p - 2]
  int degree;
  std::vector<PadicApprox> coeffs;  // a_0 .. a_d
  std::int64_t certified_prec;
  std::int64_t sample_prec;
  std::vector<std::int64_t> nodes;     // n_j = residue_rep(k, p) + j (p - 1)
  std::vector<PadicApprox> samples;    // (1 - p^(n_j - 1)) B_{n_j}
};

/// Smallest even n >= 2 with n == k (mod p - 1). Throws for odd classes.
std::int64_t residue_rep(std::int64_t k, std::int64_t p);

/// floor((p - 2)/(p - 1) * (d + 1) - 2): the valuation below which the
/// omitted terms a_i n^i, i > d, cannot disturb the fit.
std::int64_t tail_bound(std::int64_t p, int d);

/// Requires p >= 5 and 0 <= d <= p - 2, which keeps the interpolation
/// determinant prod (l - j)(p - 1) a p-adic unit.
ZetaCoeffEstimate estimate_coeffs(std::int64_t p, std::int64_t k, int d);

/// sum_i a_i n^i at working precision.
PadicApprox evaluate_series(const ZetaCoeffEstimate& est, std::int64_t n);

enum class BoundStatus { verified, violated, untestable };

std::string to_string(BoundStatus s);

enum class BoundKind {
  constant_term,      // a_0 = 1 - 1/p for k == 0, else 0
  general,            // v(a_i) >= (p-2)/(p-1) i - 2
  small_index,        // v(a_i) >= i - 1 when p >= i + 2
  linear_identity,    // a_1 = (1 - p^(k0-1)) B_k0/k0 - sum_{m>=2} a_m k0^(m-1), k != 0
};

std::string to_string(BoundKind kind);

struct BoundCheck {
  BoundKind kind;
  std::int64_t k;
  int i;
  Rational bound;                        // required valuation (certified_prec for identities)
  std::optional<std::int64_t> observed;  // valuation of the estimate, if below certified_prec
  BoundStatus status;
};

struct BoundReport {
  std::int64_t p;
  int degree;
  std::vector<BoundCheck> checks;

  std::size_t count(BoundStatus s) const;
  bool ok() const { return count(BoundStatus::violated) == 0; }
};

/// Bound checks for one class.
std::vector<BoundCheck> check_class_bounds(const ZetaCoeffEstimate& est);

/// check_class_bounds for every even class modulo p - 1.
BoundReport check_bounds(std::int64_t p, int d);

}  // namespace bercong
