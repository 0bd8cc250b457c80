#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bercong/numeric.hpp"
#include "bercong/polynomial.hpp"
#include "bercong/ratfunc.hpp"

namespace bercong {

/// One summand g(p) * B_{f(p)}.
struct FamilyTerm {
  Polynomial f;
  RationalFunction g;
};

/// The congruence  sum_i g_i(p) B_{f_i(p)} == g_0(p)  mod p^N, asserted for
/// all sufficiently large primes p.
class CongruenceFamily {
 public:
  /// Each f must have integer coefficients, be non-constant and have a positive
  /// leading coefficient; throws std::invalid_argument otherwise. A constant
  /// index belongs in g0.
  CongruenceFamily(std::int64_t modulus_exponent, RationalFunction g0, std::vector<FamilyTerm> terms);

  std::int64_t N() const { return n_; }
  const RationalFunction& g0() const { return g0_; }
  const std::vector<FamilyTerm>& terms() const { return terms_; }

  /// f_i(1): the residue class of f_i(p) modulo p - 1.
  std::int64_t index_class(std::size_t i) const { return classes_[i]; }

  CongruenceFamily with_N(std::int64_t n) const;

 private:
  std::int64_t n_;
  RationalFunction g0_;
  std::vector<FamilyTerm> terms_;
  std::vector<std::int64_t> classes_;
};

enum class Verdict { certified, not_certified };

std::string to_string(Verdict v);

struct ConditionCheck {
  int condition;  // 1, 2 or 3
  std::optional<std::int64_t> class_k;
  std::optional<std::int64_t> m;
  Valuation computed_vt;
  std::int64_t required;
  bool pass;
};

struct ConditionReport {
  Valuation M;
  Verdict verdict;
  /// Ordered by condition, then class k, then m.
  std::vector<ConditionCheck> checks;
  /// Heuristic first prime; present only when certified.
  std::optional<std::int64_t> threshold_estimate;
};

/// Minimum t-adic valuation over g_0, ..., g_n.
Valuation min_valuation_M(const CongruenceFamily& family);

/// g0 - (1 - 1/t) sum_{f_i(1)=0} g_i - sum_{f_i(1)>=2} (1 - t^(f_i(1)-1)) B_{f_i(1)}/f_i(1) g_i f_i
RationalFunction condition1_expression(const CongruenceFamily& family);

/// sum_{f_i(1)=k} g_i f_i^m, for even k <= 0.
RationalFunction condition2_sum(const CongruenceFamily& family, std::int64_t k, std::int64_t m);

/// sum_{f_i(1)=k} g_i (f_i^m - k^(m-1) f_i), for even k >= 2.
RationalFunction condition3_sum(const CongruenceFamily& family, std::int64_t k, std::int64_t m);

ConditionReport check_theorem(const CongruenceFamily& family);

/// Heuristic smallest prime from which the certified congruence is expected to
/// hold. Not a proven bound. Throws std::logic_error for an uncertified report.
std::int64_t threshold_estimate(const CongruenceFamily& family, const ConditionReport& report);

}  // namespace bercong
