#include "bercong/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bercong {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Valuation Polynomial::vt() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return Valuation(static_cast<std::int64_t>(i));
  }
  return Valuation::infinity();
}

bool Polynomial::has_integer_coeffs() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q.is_integer(); });
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  trim();
  return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  Polynomial r = *this;
  for (auto& q : r.c_) q *= c;
  return r;
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  Polynomial result(Rational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = c_;
  const std::size_t dn = divisor.c_.size();
  if (rem.size() < dn) return {Polynomial(), *this};
  std::vector<Rational> quot(rem.size() - dn + 1);
  const Rational& lead = divisor.c_.back();
  for (std::size_t k = rem.size(); k-- >= dn;) {
    const Rational q = rem[k] / lead;
    quot[k - dn + 1] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < dn; ++j) rem[k - dn + 1 + j] -= q * divisor.c_[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::shift_down(std::size_t k) const {
  if (k > c_.size()) return {};
  return Polynomial(std::vector<Rational>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

Rational Polynomial::primitive_scale() const {
  if (is_zero()) throw std::domain_error("primitive_scale of zero polynomial");
  Integer l = 1, g = 0;
  for (const auto& q : c_) {
    if (q.is_zero()) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.den().get_mpz_t());
    const Integer n = q.num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  // c * (n/d) with c = l/g is integral; gcd of results is 1
  Rational s(l, g);
  if (leading().sign() < 0) s = -s;
  return s;
}

namespace {

void write_term(std::ostream& os, const Rational& c, std::size_t k, bool first) {
  const Rational mag = c.abs();
  if (first) {
    if (c.sign() < 0) os << "-";
  } else {
    os << (c.sign() < 0 ? " - " : " + ");
  }
  if (k == 0) {
    os << mag.str();
    return;
  }
  if (mag != Rational(1)) os << mag.str() << "*";
  os << "t";
  if (k > 1) os << "^" << k;
}

}  // namespace

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    write_term(os, c_[k], k, first);
    first = false;
  }
  return os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    auto r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.scaled(Rational(1) / x.leading());
}

}  // namespace bercong
