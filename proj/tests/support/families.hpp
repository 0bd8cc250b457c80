#pragma once

#include <random>
#include <string>

#include "bercong/checker.hpp"
#include "bercong/expr.hpp"

namespace bercong::testing {

inline Polynomial poly(const std::string& s) { return parse_expr(s).as_polynomial(); }
inline RationalFunction rf(const std::string& s) { return parse_expr(s); }

// p * B_{f(p)} == delta mod p, delta = -1 when f(1) = 0
inline CongruenceFamily vsc_family(const std::string& f) {
  const Polynomial fp = poly(f);
  const bool vanishes = fp.eval(Rational(1)).is_zero();
  return CongruenceFamily(1, RationalFunction(vanishes ? -1 : 0), {{fp, rf("t")}});
}

// B_{f(p)}/f(p) == B_{g(p)}/g(p) mod p^n
inline CongruenceFamily kummer_family(const std::string& f, const std::string& g, std::int64_t n) {
  return CongruenceFamily(n, RationalFunction(0),
                          {{poly(f), rf("1/(" + f + ")")}, {poly(g), rf("-1/(" + g + ")")}});
}

inline CongruenceFamily kummer_family(std::int64_t n = 2) { return kummer_family("t+1", "t^2+1", n); }

inline CongruenceFamily sun_s1_k3_b2() {
  return CongruenceFamily(2, rf("-(1-t)/6"), {{poly("3*t-1"), rf("1/(3*t-1)")}, {poly("t+1"), rf("-3/(t+1)")}});
}

inline CongruenceFamily sun_s2_k3_b2() {
  return CongruenceFamily(3, rf("(1-t)/12"),
                          {{poly("3*t-1"), rf("1/(3*t-1)")}, {poly("2*t"), rf("-3/(2*t)")}, {poly("t+1"), rf("3/(t+1)")}});
}

// random polynomial with small integer coefficients, degree <= max_deg
inline Polynomial random_poly(std::mt19937_64& rng, int max_deg, int coeff_bound, bool allow_zero = true) {
  std::uniform_int_distribution<int> deg(0, max_deg), c(-coeff_bound, coeff_bound);
  for (;;) {
    std::vector<Rational> cs(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& q : cs) q = Rational(c(rng));
    Polynomial p(std::move(cs));
    if (allow_zero || !p.is_zero()) return p;
  }
}

inline RationalFunction random_ratfunc(std::mt19937_64& rng, int max_deg = 3, int coeff_bound = 9) {
  std::uniform_int_distribution<int> scale_den(1, 6);
  const Polynomial num = random_poly(rng, max_deg, coeff_bound, false);
  const Polynomial den = random_poly(rng, max_deg, coeff_bound, false);
  return RationalFunction(num.scaled(Rational(Integer(1), Integer(scale_den(rng)))), den);
}

}  // namespace bercong::testing
