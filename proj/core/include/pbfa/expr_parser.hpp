#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "pbfa/polynomial.hpp"

namespace pbfa {

/// Syntax error with the byte offset of the offending character.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Parses a polynomial expression over variables x1..x20:
///
///   expr   := ["+"|"-"] term (("+"|"-") term)*
///   term   := ["+"|"-"] factor ("*" factor)*
///   factor := literal | variable | "(" expr ")"
///   literal := digits | digits "." digits | digits "/" digits
///
/// Whitespace is insignificant. Like terms are combined and repeated
/// variables in a monomial collapse (x*x = x on B). The result's arity is
/// the largest variable index mentioned (0 for a constant expression).
MultilinearPolynomial parse_expression(std::string_view text);

}  // namespace pbfa
