#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bercong/checker.hpp"
#include "bercong/padic.hpp"

namespace bercong {

inline constexpr std::int64_t kDefaultGuard = 2;
inline constexpr std::int64_t kDefaultMinPrime = 5;

enum class PrimeStatus { pass, fail, skipped, indeterminate };

std::string to_string(PrimeStatus s);

struct PrimeResult {
  std::int64_t p;
  PrimeStatus status;
  std::string skip_reason;  // empty unless skipped
  /// Exact valuation of the defect, or a lower bound when observed_is_lower_bound.
  std::int64_t observed_valuation = 0;
  bool observed_is_lower_bound = false;
  std::int64_t precision_used = 0;
};

struct VerificationSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  std::size_t indeterminate = 0;
};

struct VerificationReport {
  std::int64_t N;
  std::vector<PrimeResult> prime_results;  // ascending p
  VerificationSummary summary;
};

/// Class of D(p) = sum_i g_i(p) B_{f_i(p)} - g_0(p) modulo p^(N + guard).
/// Bernoulli values are fetched with extra precision to absorb negative
/// valuations of g_i(p). Throws PoleError or std::invalid_argument when the
/// prime is not admissible.
PadicApprox congruence_defect(const CongruenceFamily& family, std::int64_t p, std::int64_t guard);

/// Tests the congruence at one prime. An indeterminate outcome is retried once
/// with the guard doubled.
PrimeResult verify_prime(const CongruenceFamily& family, std::int64_t p, std::int64_t guard = kDefaultGuard);

/// verify_prime over every prime in [max(p_min, 5), p_max], optionally on
/// several threads. Results are in ascending prime order regardless of jobs.
VerificationReport verify_range(const CongruenceFamily& family, std::int64_t p_min, std::int64_t p_max,
                                std::int64_t guard = kDefaultGuard, unsigned jobs = 1);

}  // namespace bercong
