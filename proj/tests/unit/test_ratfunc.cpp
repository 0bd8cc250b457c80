#include <doctest.h>

#include <random>

#include "bercong/ratfunc.hpp"
#include "support/families.hpp"

using namespace bercong;
using bercong::testing::rf;

TEST_CASE("polynomial basics") {
  const Polynomial p({Rational(1), Rational(0), Rational(0)});
  CHECK(p.degree() == 0);
  CHECK(Polynomial().degree() == -1);
  CHECK(Polynomial().vt().is_infinite());
  const auto [q, r] = testing::poly("t^3 - 1").divmod(testing::poly("t - 1"));
  CHECK(q == testing::poly("t^2 + t + 1"));
  CHECK(r.is_zero());
  CHECK(gcd(testing::poly("t^2 - 1"), testing::poly("2*t + 2")) == testing::poly("t + 1"));
  CHECK_THROWS_AS(testing::poly("t").divmod(Polynomial()), std::domain_error);
}

TEST_CASE("field arithmetic examples") {
  CHECK(rf("t+1") - rf("t^2+1") == rf("t - t^2"));
  CHECK(rf("1/(t+1)") * rf("t+1") == RationalFunction(1));
  CHECK(rf("(3*t-1)^2") == rf("9*t^2 - 6*t + 1"));
  CHECK(rf("t/(t+1)").pow(-2) == rf("(t+1)^2/t^2"));
  CHECK_THROWS_AS(rf("t") / RationalFunction(0), std::domain_error);
  CHECK_THROWS_AS(RationalFunction(0).pow(-1), std::domain_error);
}

TEST_CASE("canonical form") {
  const RationalFunction g = rf("(2*t+2)/(6*t^2-6)");
  CHECK(g.den() == testing::poly("t - 1"));
  CHECK(g.num() == Polynomial(Rational(Integer(1), Integer(3))));
  const RationalFunction h = rf("1/(3*t-1)");
  CHECK(h.den() == testing::poly("3*t - 1"));
  CHECK(rf("1/(1-3*t)").den() == testing::poly("3*t - 1"));
  CHECK(rf("(t^2-1)/(t-1)").is_polynomial());
  CHECK(RationalFunction(0).den() == Polynomial(Rational(1)));
}

TEST_CASE("vt examples") {
  CHECK(rf("t^3 - 2*t^2").vt() == 2);
  CHECK(rf("(t^2 + t)/t^3").vt() == -2);
  CHECK(RationalFunction(0).vt().is_infinite());
}

TEST_CASE("evaluate examples") {
  CHECK(rf("t^2 + 1").evaluate(5) == Rational(26));
  CHECK_THROWS_AS(rf("1/(t-1)").evaluate(1), PoleError);
  CHECK(rf("-(1-t)/6").evaluate(7) == Rational(1));
}

TEST_CASE("exceptional_primes examples") {
  CHECK(rf("5/t").exceptional_primes() == std::vector<Integer>{5});
  // the exceptional prime is genuine: v_5(g(5)) = 0 but v_t(g) = -1
  CHECK(vp_rational(rf("5/t").evaluate(5), 5) == 0);
  CHECK(rf("(t+2)/(2*t-1)").exceptional_primes() == std::vector<Integer>{2});
  CHECK(rf("t^2*(t+1)").exceptional_primes().empty());
  CHECK(rf("(t+1)/3").exceptional_primes() == std::vector<Integer>{3});
  CHECK_THROWS_AS(RationalFunction(0).exceptional_primes(), std::domain_error);
}

TEST_CASE("vt is a valuation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testing::random_ratfunc(rng);
    const auto h = testing::random_ratfunc(rng);
    CHECK(g.vt() + h.vt() == (g * h).vt());
    const auto s = (g + h).vt();
    CHECK(s >= std::min(g.vt(), h.vt()));
    if (g.vt() != h.vt()) CHECK(s == std::min(g.vt(), h.vt()));
  }
}

TEST_CASE("print then parse is the identity") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testing::random_ratfunc(rng, 4, 20);
    CHECK(rf(g.str()) == g);
  }
}
