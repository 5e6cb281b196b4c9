#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pbfa/function_table.hpp"

namespace pbfa {

/// Multilinear polynomial sum over S of a_S * prod_{i in S} x_i, stored as
/// a dense coefficient table indexed by subset mask (same bit convention
/// as FunctionTable). Every pseudo-Boolean function has exactly one such
/// representation.
class MultilinearPolynomial {
public:
  explicit MultilinearPolynomial(int arity);
  MultilinearPolynomial(int arity, std::vector<Rational> coefficients);

  int arity() const noexcept { return n_; }
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(coef_.size()); }

  const Rational& operator[](std::uint32_t mask) const { return coef_[mask]; }
  Rational& operator[](std::uint32_t mask) { return coef_[mask]; }
  const Rational& coefficient(const SubsetMask& s) const;

  /// Same polynomial viewed at a larger arity (new variables inessential).
  MultilinearPolynomial extended(int arity) const;

  friend bool operator==(const MultilinearPolynomial&, const MultilinearPolynomial&) = default;

private:
  int n_;
  std::vector<Rational> coef_;
};

/// Coefficients from values by Moebius inversion over the subset lattice;
/// exact inverse of to_table.
MultilinearPolynomial poly_from_table(const FunctionTable& f);

/// Values from coefficients: f(x) = sum of a_S over S contained in the
/// support of x.
FunctionTable to_table(const MultilinearPolynomial& p);

/// Formal partial derivative: b_T = a_{T union {k}} for T not containing k,
/// zero otherwise. Matches the table-level difference operator exactly.
MultilinearPolynomial formal_derivative(const MultilinearPolynomial& p, int k);

/// Largest |S| with a_S != 0; the zero polynomial has degree 0.
int degree(const MultilinearPolynomial& p);

/// Canonical text form, parseable by parse_expression: terms in ascending
/// mask order, "*"-separated variables, rational literals as "p/q".
std::string pretty_print(const MultilinearPolynomial& p);

}  // namespace pbfa
