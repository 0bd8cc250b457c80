#pragma once

#include <cstdint>
#include <stdexcept>

#include "bercong/numeric.hpp"
#include "bercong/padic.hpp"

namespace bercong {

/// Largest index served by the exact recurrence.
inline constexpr std::int64_t kExactBernoulliThreshold = 2000;

/// Raised when an exact Bernoulli number is requested above the threshold.
class IndexTooLarge : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Exact B_n with B_1 = -1/2. Memoized; safe to call from several threads.
/// Throws IndexTooLarge for n > threshold (use bernoulli_mod instead).
Rational bernoulli_exact(std::int64_t n, std::int64_t threshold = kExactBernoulliThreshold);

/// Product of the primes p with (p - 1) | n, the denominator of B_n.
/// n must be even and >= 2.
Integer vsc_denominator(std::int64_t n);

/// Class of B_n modulo p^prec_abs (p >= 5, prec_abs >= 1). Dispatches to the
/// exact table for n <= kExactBernoulliThreshold and to the power-sum route above.
PadicApprox bernoulli_mod(std::int64_t n, std::int64_t p, std::int64_t prec_abs);

/// Power-sum route for even n >= 4, exposed so it can be checked against the
/// exact table on their common range.
///
/// With M = p^r and S_n(M) = sum_{a<M} a^n, Faulhaber's formula gives
/// B_n = S_n(M)/M - sum_{i>=2} C(n,i)/(i+1) * B_{n-i} * M^i, and every term of
/// the tail has valuation >= 2r - 1 - v_p(n+1) (the i = 1 term vanishes as
/// B_{n-1} = 0). r is chosen so that this is >= prec_abs.
PadicApprox bernoulli_mod_powersum(std::int64_t n, std::int64_t p, std::int64_t prec_abs);

/// zeta(-n) = -B_{n+1}/(n+1) for n >= 1.
Rational zeta_at_negative(std::int64_t n);

}  // namespace bercong
