#include <doctest.h>

#include "bercong/bernoulli.hpp"
#include "bercong/zeta.hpp"

using namespace bercong;

TEST_CASE("class representatives") {
  CHECK(residue_rep(2, 5) == 2);
  CHECK(residue_rep(0, 7) == 6);
  CHECK(residue_rep(-2, 11) == 8);
  CHECK_THROWS_AS(residue_rep(3, 7), std::invalid_argument);
  CHECK_THROWS_AS(residue_rep(2, 9), std::invalid_argument);
}

TEST_CASE("tail bound") {
  CHECK(tail_bound(5, 3) == 1);
  CHECK(tail_bound(13, 8) == 6);
  CHECK(tail_bound(5, 0) == -2);
}

TEST_CASE("estimate examples") {
  const auto e5 = estimate_coeffs(5, 0, 3);
  CHECK(e5.k == 0);
  REQUIRE(e5.coeffs.size() == 4);
  CHECK(e5.coeffs[0].known_valuation() == -1);
  CHECK(e5.coeffs[0].with_precision(e5.certified_prec) ==
        PadicApprox::from_rational(Rational(Integer(4), Integer(5)), 5, e5.certified_prec));

  const auto e7 = estimate_coeffs(7, 2, 4);
  CHECK(evaluate_series(e7, 2) == e7.samples[0]);
  CHECK(e7.samples[0].contains(Rational(-1)));

  const auto e13 = estimate_coeffs(13, 2, 8);
  CHECK(e13.certified_prec > 2);
  CHECK(e13.coeffs[3].valuation_lower_bound() >= 2);

  CHECK_THROWS_AS(estimate_coeffs(7, 2, 6), std::invalid_argument);
  CHECK_THROWS_AS(estimate_coeffs(3, 0, 1), std::invalid_argument);
}

TEST_CASE("interpolation reproduces its samples") {
  for (const std::int64_t p : {5, 7, 11, 13}) {
    for (std::int64_t k = 0; k < p - 1; k += 2) {
      const auto est = estimate_coeffs(p, k, static_cast<int>(p - 2));
      for (std::size_t j = 0; j < est.nodes.size(); ++j) {
        CHECK(evaluate_series(est, est.nodes[j]) == est.samples[j]);
      }
    }
  }
}

TEST_CASE("series predicts Bernoulli numbers beyond the nodes") {
  const auto est = estimate_coeffs(11, 4, 9);
  for (std::int64_t n = 4 + 10 * 12; n < 4 + 10 * 20; n += 10) {
    const Rational euler = Rational(1) - Rational(Integer(11)).pow(n - 1);
    const auto truth = bernoulli_mod(n, 11, est.certified_prec).scaled(euler).with_precision(est.certified_prec);
    CHECK(evaluate_series(est, n).with_precision(est.certified_prec) == truth);
  }
}

TEST_CASE("estimates refine as the degree grows") {
  for (const std::int64_t p : {7, 11, 13}) {
    for (std::int64_t k = 0; k < p - 1; k += 2) {
      auto previous = estimate_coeffs(p, k, 1);
      for (int d = 2; d <= p - 2; ++d) {
        const auto next = estimate_coeffs(p, k, d);
        if (previous.certified_prec > 0) {
          for (std::size_t i = 0; i < previous.coeffs.size(); ++i) {
            CHECK(next.coeffs[i].with_precision(previous.certified_prec) ==
                  previous.coeffs[i].with_precision(previous.certified_prec));
          }
        }
        previous = next;
      }
    }
  }
}

TEST_CASE("bound examples") {
  const auto r7 = check_bounds(7, 4);
  CHECK(r7.ok());
  int constant_terms = 0;
  for (const auto& c : r7.checks) {
    if (c.kind == BoundKind::constant_term) {
      ++constant_terms;
      CHECK(c.status == BoundStatus::verified);
    }
  }
  CHECK(constant_terms == 3);

  const auto r11 = check_bounds(11, 7);
  CHECK(r11.ok());
  for (const auto& c : r11.checks) {
    if (c.kind == BoundKind::small_index && c.i <= 3) CHECK(c.status == BoundStatus::verified);
  }

  const auto r13 = check_bounds(13, 8);
  CHECK(r13.ok());
  int identities = 0;
  for (const auto& c : r13.checks) {
    if (c.kind == BoundKind::linear_identity) {
      ++identities;
      CHECK(c.status == BoundStatus::verified);
    }
  }
  CHECK(identities == 5);
}

TEST_CASE("bounds at or above certified precision are untestable") {
  const auto report = check_bounds(5, 2);
  for (const auto& c : report.checks) {
    if (c.kind == BoundKind::general || c.kind == BoundKind::small_index) {
      const std::int64_t cert = tail_bound(5, 2);
      if (c.bound >= Rational(cert)) CHECK(c.status == BoundStatus::untestable);
    }
  }
  CHECK(report.count(BoundStatus::untestable) > 0);
}
