#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bercong/ratfunc.hpp"

namespace bercong {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  /// Zero-based offset into the input.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses a rational function of t:
///
///   expr     := term (('+' | '-') term)*
///   term     := factor (('*' | '/') factor)*
///   factor   := ['-'] base ['^' uint]
///   base     := rational | 't' | '(' expr ')'
///   rational := int ['/' uint]
///
/// Whitespace is ignored. A leading '-' negates the whole factor, so -t^2 is
/// -(t^2). A literal fraction is one base, so 2/3^2 is (2/3)^2.
/// Throws ParseError on malformed input, including division by the zero function.
RationalFunction parse_expr(std::string_view text);

}  // namespace bercong
