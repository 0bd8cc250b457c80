#include "bercong/expr.hpp"

#include <cctype>

namespace bercong {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  RationalFunction parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    RationalFunction value = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return value;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (!at_end() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_digit() {
    skip_ws();
    return !at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  Integer digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", start);
    return Integer(std::string(s_.substr(start, pos_ - start)), 10);
  }

  RationalFunction expr() {
    RationalFunction value = term();
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  RationalFunction term() {
    RationalFunction value = factor();
    for (;;) {
      if (accept('*')) {
        value *= factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RationalFunction divisor = factor();
        if (divisor.is_zero()) throw ParseError("division by zero", at);
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  RationalFunction factor() {
    const bool negate = accept('-');
    RationalFunction value = base();
    if (accept('^')) {
      const std::size_t at = pos_;
      const Integer e = digits();
      if (!e.fits_slong_p() || e > 100000) throw ParseError("exponent too large", at);
      value = value.pow(e.get_si());
    }
    return negate ? -value : value;
  }

  RationalFunction base() {
    skip_ws();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    if (accept('(')) {
      RationalFunction inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (accept('t')) return RationalFunction::t();
    if (peek_digit()) {
      const Integer num = digits();
      // "a/b" is a literal only when a digit follows the slash
      const std::size_t save = pos_;
      if (accept('/') && peek_digit()) {
        const std::size_t at = pos_;
        const Integer den = digits();
        if (den == 0) throw ParseError("zero denominator", at);
        return RationalFunction(Rational(num, den));
      }
      pos_ = save;
      return RationalFunction(Rational(num));
    }
    throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace bercong
