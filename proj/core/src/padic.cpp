#include "bercong/padic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bercong {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

void require_odd_prime(std::int64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw std::invalid_argument("p-adic arithmetic requires an odd prime, got " + std::to_string(p));
  }
}

void require_same_prime(const PadicApprox& a, const PadicApprox& b) {
  if (a.prime() != b.prime()) {
    throw std::invalid_argument("p-adic operands over different primes (" + std::to_string(a.prime()) +
                                ", " + std::to_string(b.prime()) + ")");
  }
}

}  // namespace

PadicApprox PadicApprox::zero(std::int64_t p, std::int64_t prec_abs) {
  require_odd_prime(p);
  return PadicApprox(p, prec_abs - 1, Integer(0), prec_abs);
}

PadicApprox PadicApprox::from_parts(std::int64_t p, std::int64_t v_min, const Integer& residue,
                                    std::int64_t prec_abs) {
  require_odd_prime(p);
  if (prec_abs <= v_min || residue == 0) return PadicApprox(p, prec_abs - 1, Integer(0), prec_abs);
  const Integer P(static_cast<long>(p));
  Integer r = residue;
  std::int64_t v = v_min;
  while (v < prec_abs && mpz_divisible_p(r.get_mpz_t(), P.get_mpz_t())) {
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), P.get_mpz_t());
    ++v;
  }
  if (v >= prec_abs) return PadicApprox(p, prec_abs - 1, Integer(0), prec_abs);
  r = mod_floor(r, ipow(p, prec_abs - v));
  return PadicApprox(p, v, std::move(r), prec_abs);
}

PadicApprox PadicApprox::truncate_rational(const Rational& q, std::int64_t p, std::int64_t prec_abs) {
  require_odd_prime(p);
  if (q.is_zero()) return zero(p, prec_abs);
  const std::int64_t v = vp_rational(q, p).value();
  if (v >= prec_abs) return zero(p, prec_abs);
  Integer num = q.num();
  Integer den = q.den();
  // strip p from whichever side carries it
  if (v > 0) {
    Integer pv = ipow(p, v);
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), pv.get_mpz_t());
  } else if (v < 0) {
    Integer pv = ipow(p, -v);
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), pv.get_mpz_t());
  }
  const Integer modulus = ipow(p, prec_abs - v);
  Integer r = mod_floor(Integer(num * mod_inverse(den, modulus)), modulus);
  return PadicApprox(p, v, std::move(r), prec_abs);
}

PadicApprox PadicApprox::from_rational(const Rational& q, std::int64_t p, std::int64_t prec_abs) {
  require_odd_prime(p);
  if (!q.is_zero() && vp_rational(q, p) >= prec_abs) {
    throw std::invalid_argument("from_rational: precision " + std::to_string(prec_abs) +
                                " does not exceed the valuation of " + q.str());
  }
  return truncate_rational(q, p, prec_abs);
}

std::optional<std::int64_t> PadicApprox::known_valuation() const {
  if (is_zero_class()) return std::nullopt;
  return v_min_;
}

Rational PadicApprox::representative() const {
  if (is_zero_class()) return Rational(0);
  if (v_min_ >= 0) return Rational(Integer(r_ * ipow(p_, v_min_)));
  return Rational(r_, ipow(p_, -v_min_));
}

bool PadicApprox::contains(const Rational& q) const {
  return vp_rational(q - representative(), p_) >= prec_;
}

PadicApprox PadicApprox::with_precision(std::int64_t prec_abs) const {
  if (prec_abs >= prec_) return *this;
  return from_parts(p_, v_min_, r_, prec_abs);
}

PadicApprox PadicApprox::scaled(const Rational& c) const {
  if (c.is_zero()) {
    // exact zero; any precision is valid, keep the operand's
    return zero(p_, prec_);
  }
  const std::int64_t vc = vp_rational(c, p_).value();
  const std::int64_t prec = prec_ + vc;
  if (is_zero_class()) return zero(p_, prec);
  // unit part of c to relative precision prec_ - v_min_
  const PadicApprox unit = truncate_rational(c, p_, prec_ - v_min_ + vc);
  return from_parts(p_, v_min_ + vc, Integer(r_ * unit.r_), prec);
}

PadicApprox PadicApprox::operator-() const {
  return from_parts(p_, v_min_, Integer(-r_), prec_);
}

PadicApprox operator+(const PadicApprox& a, const PadicApprox& b) {
  require_same_prime(a, b);
  const std::int64_t prec = std::min(a.prec_, b.prec_);
  const std::int64_t v = std::min(a.v_min_, b.v_min_);
  Integer r = a.r_ * ipow(a.p_, a.v_min_ - v) + b.r_ * ipow(b.p_, b.v_min_ - v);
  return PadicApprox::from_parts(a.p_, v, r, prec);
}

PadicApprox operator-(const PadicApprox& a, const PadicApprox& b) { return a + (-b); }

PadicApprox operator*(const PadicApprox& a, const PadicApprox& b) {
  require_same_prime(a, b);
  // xy - x0*y0 = x0*(y - y0) + (x - x0)*y
  const std::int64_t prec = std::min(a.valuation_lower_bound() + b.prec_, a.prec_ + b.valuation_lower_bound());
  if (a.is_zero_class() || b.is_zero_class()) return PadicApprox::zero(a.p_, prec);
  return PadicApprox::from_parts(a.p_, a.v_min_ + b.v_min_, Integer(a.r_ * b.r_), prec);
}

std::string PadicApprox::str() const {
  std::ostringstream os;
  if (is_zero_class()) {
    os << "O(" << p_ << "^" << prec_ << ")";
    return os.str();
  }
  os << r_.get_str();
  if (v_min_ != 0) os << " * " << p_ << "^" << v_min_;
  os << " + O(" << p_ << "^" << prec_ << ")";
  return os.str();
}

Tri valuation_at_least(const PadicApprox& x, std::int64_t n) {
  if (x.is_zero_class()) return x.prec_abs() >= n ? Tri::yes : Tri::indeterminate;
  return x.v_min() >= n ? Tri::yes : Tri::no;
}

}  // namespace bercong
