#pragma once

#include <optional>
#include <vector>

#include "pbfa/bit_table.hpp"
#include "pbfa/calculus.hpp"
#include "pbfa/function_table.hpp"

namespace pbfa {

/// Two compositions of the same meet/join operators that disagree, plus a
/// point where the composed values differ.
struct PermutabilityCounterexample {
  SubsetMask indices{0, 0};  // the chosen variables K
  SubsetMask joins{0, 0};    // members of K taking the join operator; the rest take meets
  OpSequence order_a;        // applied right to left, as always
  OpSequence order_b;        // same operator multiset, different order
  Point point{0, 0};
  Rational value_a, value_b;
};

struct PermutabilityCheck {
  bool permutable = true;
  std::optional<PermutabilityCounterexample> counterexample;
};

/// Decides whether every composition of meet/join derivatives over any p
/// distinct variables is order independent (1 <= p <= arity).
///
/// For each variable set and each meet/join assignment only the two
/// extremal orders are compared: all meets applied first gives the
/// pointwise least composition and all joins applied first the greatest,
/// so their equality forces every interleaving to agree. The p!
/// enumeration in has_p_permutable_derivatives_reference stays the
/// definition of record and the two are checked against each other in the
/// sweep suite. Capped at p <= 12.
PermutabilityCheck has_p_permutable_derivatives(const FunctionTable& f, int p);
PermutabilityCheck has_p_permutable_derivatives(const BitTable& f, int p);

/// Reference implementation enumerating every permutation (capped at p <= 7).
PermutabilityCheck has_p_permutable_derivatives_reference(const FunctionTable& f, int p);
PermutabilityCheck has_p_permutable_derivatives_reference(const BitTable& f, int p);

struct PermutabilityReport {
  int max_p = 0;
  std::optional<PermutabilityCounterexample> counterexample;  // present iff max_p < arity
};

/// Largest p with p-permutable lattice derivatives; permutability is
/// downward closed in p, so an upward scan stops at the first failure.
/// Monotone functions return the arity outright.
PermutabilityReport max_permutability_degree(const FunctionTable& f);

/// A binary section whose multilinear coefficients fail the 2-permutability
/// test: a1*a12 >= 0 or a2*a12 >= 0 or |a12| <= max(|a1|, |a2|).
struct BinarySectionCondition {
  int j = 0;
  int k = 0;
  Point base{0, 0};
  Rational a1, a2, a12;
};

struct BinaryPermutabilityCheck {
  bool satisfied = true;
  std::vector<BinarySectionCondition> violations;
};

/// Coefficient criterion for 2-permutable lattice derivatives; agrees with
/// has_p_permutable_derivatives(f, 2).
BinaryPermutabilityCheck binary_2permutability_condition(const FunctionTable& f);

}  // namespace pbfa
