#include "bercong/ratfunc.hpp"

#include <algorithm>

namespace bercong {

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(Rational(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  if (den_.degree() > 0) {
    const Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  const Rational s = den_.primitive_scale();
  num_ = num_.scaled(s);
  den_ = den_.scaled(s);
}

Polynomial RationalFunction::as_polynomial() const {
  if (!is_polynomial()) throw std::domain_error("not a polynomial: " + str());
  return num_.scaled(Rational(1) / den_.leading());
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("division by the zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RationalFunction RationalFunction::pow(std::int64_t k) const {
  if (k < 0) {
    if (is_zero()) throw std::domain_error("zero rational function to a negative power");
    return RationalFunction(den_.pow(static_cast<std::uint64_t>(-k)), num_.pow(static_cast<std::uint64_t>(-k)));
  }
  return RationalFunction(num_.pow(static_cast<std::uint64_t>(k)), den_.pow(static_cast<std::uint64_t>(k)));
}

Valuation RationalFunction::vt() const {
  if (is_zero()) return Valuation::infinity();
  return Valuation(num_.vt().value() - den_.vt().value());
}

Rational RationalFunction::evaluate(const Integer& m) const {
  const Rational x(m);
  const Rational d = den_.eval(x);
  if (d.is_zero()) throw PoleError("pole at t = " + m.get_str() + " of " + str());
  return num_.eval(x) / d;
}

std::vector<Integer> RationalFunction::exceptional_primes() const {
  if (is_zero()) throw std::domain_error("exceptional_primes of the zero function");
  const auto vn = static_cast<std::size_t>(num_.vt().value());
  const auto vd = static_cast<std::size_t>(den_.vt().value());
  const Polynomial a0 = num_.shift_down(vn);
  const Polynomial b0 = den_.shift_down(vd);
  // clear denominators jointly so no integer factor is common to a and b
  Integer l = 1;
  for (const auto* poly : {&a0, &b0}) {
    for (const auto& q : poly->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.den().get_mpz_t());
  }
  const Polynomial a = a0.scaled(Rational(l));
  const Polynomial b = b0.scaled(Rational(l));
  Integer g = 0;
  for (const auto* poly : {&a, &b}) {
    for (const auto& q : poly->coeffs()) {
      const Integer n = q.num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
  }
  const Integer product = (a.coeff(0).num() / g) * (b.coeff(0).num() / g);
  return prime_divisors(product);
}

std::string RationalFunction::str() const {
  if (is_polynomial()) return as_polynomial().str();
  const bool simple_den = den_.coeffs().size() == 2 && den_.coeff(0).is_zero() && den_.leading() == Rational(1);
  const auto terms = std::count_if(num_.coeffs().begin(), num_.coeffs().end(),
                                   [](const Rational& q) { return !q.is_zero(); });
  std::string n = num_.str();
  if (terms > 1 || num_.leading().sign() < 0 || !num_.leading().is_integer()) n = "(" + n + ")";
  std::string d = den_.str();
  if (!simple_den) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace bercong
