#include <doctest.h>

#include <thread>
#include <vector>

#include "bercong/bernoulli.hpp"

using namespace bercong;

namespace {
Rational frac(long a, long b) { return Rational(Integer(a), Integer(b)); }
}  // namespace

TEST_CASE("exact values") {
  CHECK(bernoulli_exact(12) == frac(-691, 2730));
  CHECK(bernoulli_exact(1) == frac(-1, 2));
  CHECK(bernoulli_exact(13) == Rational(0));
  CHECK(bernoulli_exact(0) == Rational(1));
  CHECK(bernoulli_exact(14) == frac(7, 6));
  CHECK_THROWS_AS(bernoulli_exact(2001), IndexTooLarge);
  CHECK_THROWS_AS(bernoulli_exact(-1), std::invalid_argument);
  CHECK_THROWS_AS(bernoulli_exact(12, 10), IndexTooLarge);
}

TEST_CASE("von Staudt-Clausen denominators") {
  CHECK(vsc_denominator(12) == 2730);
  CHECK(vsc_denominator(2) == 6);
  CHECK(vsc_denominator(14) == 6);
  CHECK_THROWS_AS(vsc_denominator(7), std::invalid_argument);
  CHECK_THROWS_AS(vsc_denominator(0), std::invalid_argument);
  for (std::int64_t n = 2; n <= 200; n += 2) {
    const Rational b = bernoulli_exact(n);
    CHECK(b.den() == vsc_denominator(n));
    CHECK(b.sign() == ((n / 2) % 2 == 1 ? 1 : -1));
  }
}

TEST_CASE("bernoulli_mod examples") {
  const auto b2 = bernoulli_mod(2, 5, 2);
  CHECK(b2.residue() == 21);
  CHECK(b2.v_min() == 0);
  const auto b13 = bernoulli_mod(13, 7, 4);
  CHECK(b13.is_zero_class());
  CHECK(b13.prec_abs() == 4);
  CHECK(bernoulli_mod(100, 7, 3) == PadicApprox::from_rational(bernoulli_exact(100), 7, 3));
  // frozen from an independent exact evaluation: B_100 is a 7-adic unit == 159 mod 7^3
  CHECK(bernoulli_mod(100, 7, 3).residue() == 159);
  CHECK_THROWS_AS(bernoulli_mod(10, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(bernoulli_mod(10, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(bernoulli_mod(10, 5, 0), std::invalid_argument);
}

TEST_CASE("power-sum route agrees with the exact table") {
  for (const std::int64_t p : {5, 7, 11, 13}) {
    for (std::int64_t n = 4; n <= 160; n += 2) {
      for (const std::int64_t prec : {1, 3, 5}) {
        const auto fast = bernoulli_mod_powersum(n, p, prec);
        CHECK_MESSAGE(fast == PadicApprox::truncate_rational(bernoulli_exact(n), p, prec),
                      "n=" << n << " p=" << p << " prec=" << prec);
      }
    }
  }
  // indices with p | n + 1 take a larger r
  CHECK(bernoulli_mod_powersum(24, 5, 4) == PadicApprox::truncate_rational(bernoulli_exact(24), 5, 4));
  CHECK(bernoulli_mod_powersum(124, 5, 4) == PadicApprox::truncate_rational(bernoulli_exact(124), 5, 4));
  CHECK_THROWS_AS(bernoulli_mod_powersum(2, 5, 2), std::invalid_argument);
  CHECK_THROWS_AS(bernoulli_mod_powersum(9, 5, 2), std::invalid_argument);
}

TEST_CASE("power-sum route near the threshold") {
  for (const std::int64_t n : {1990, 1996, 2000}) {
    CHECK(bernoulli_mod_powersum(n, 31, 3) == bernoulli_mod(n, 31, 3));
  }
  // above the threshold the dispatcher takes the power-sum route
  const auto big = bernoulli_mod(47 * 47 + 1, 47, 4);
  CHECK(big.prec_abs() == 4);
}

TEST_CASE("zeta at negative integers") {
  CHECK(zeta_at_negative(1) == frac(-1, 12));
  CHECK(zeta_at_negative(2) == Rational(0));
  CHECK(zeta_at_negative(11) == frac(691, 32760));
  CHECK_THROWS_AS(zeta_at_negative(0), std::invalid_argument);
  CHECK_THROWS_AS(zeta_at_negative(-3), std::invalid_argument);
}

TEST_CASE("memo table under concurrent readers") {
  std::vector<Rational> seen(8);
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < seen.size(); ++i) {
      pool.emplace_back([&seen, i] { seen[i] = bernoulli_exact(600 + 2 * static_cast<std::int64_t>(i % 2)); });
    }
  }
  for (std::size_t i = 2; i < seen.size(); ++i) CHECK(seen[i] == seen[i % 2]);
}
