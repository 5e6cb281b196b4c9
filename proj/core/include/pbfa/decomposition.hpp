#pragma once

#include <optional>
#include <vector>

#include "pbfa/function_table.hpp"

namespace pbfa {

enum class Orientation {
  Increasing,  // phi(0) = a, phi(1) = b
  Decreasing,  // phi(0) = b, phi(1) = a
};

/// A witness that f is a composition p'(phi_1(x_1), ..., phi_n(x_n)) of a
/// lattice polynomial function with unary maps into [a, b]. Exists exactly
/// for monotone f. The lattice polynomial is kept in join-of-meets normal
/// form: p'(y) = max over S of (c_S min min_{i in S} y_i), with the empty
/// meet reading as the top of the interval so the S = {} term contributes
/// c_{}.
struct PseudoPolynomialDecomposition {
  Rational a;  // min of f
  Rational b;  // max of f
  std::vector<Orientation> phi;         // one per variable
  std::vector<Rational> lattice_coef;   // c_S indexed by subset mask; a <= c_S <= b
};

/// Builds the decomposition for monotone f (absent otherwise): orientations
/// from per-variable monotonicity (inessential variables increase), and
/// c_S = f at the preimage of (b on S, a elsewhere). The construction is
/// verified to reproduce f on the whole cube before being returned.
std::optional<PseudoPolynomialDecomposition> decompose(const FunctionTable& f);

/// Applies phi componentwise and evaluates the join-of-meets form.
Rational evaluate_decomposition(const PseudoPolynomialDecomposition& d, const Point& x);

}  // namespace pbfa
