#pragma once

#include <string_view>
#include <vector>

#include "pbfa/expr_parser.hpp"
#include "pbfa/function_table.hpp"
#include "pbfa/polynomial.hpp"

namespace pbfa::test {

inline Rational q(long num, long den = 1) { return Rational(num, den); }

/// Truth table of an expression, e.g. table_of("x1 - x1*x2 + x2*x3").
inline FunctionTable table_of(std::string_view expr) { return to_table(parse_expression(expr)); }

inline FunctionTable table(int arity, std::vector<long> values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return FunctionTable(arity, std::move(out));
}

/// The running binary example: f(0,0)=1, f(1,0)=2, f(0,1)=4, f(1,1)=3.
inline FunctionTable example_1243() { return table(2, {1, 2, 4, 3}); }

}  // namespace pbfa::test
