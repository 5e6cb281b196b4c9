#pragma once

#include <optional>
#include <vector>

#include "pbfa/bit_table.hpp"
#include "pbfa/function_table.hpp"

namespace pbfa {

enum class VariableMonotonicity {
  Isotone,   // Delta_k f >= 0 everywhere, somewhere > 0
  Antitone,  // Delta_k f <= 0 everywhere, somewhere < 0
  Constant,  // Delta_k f == 0 everywhere (variable inessential)
  Neither,
};

VariableMonotonicity variable_monotonicity(const FunctionTable& f, int k);

/// True iff every variable is isotone, antitone or inessential, i.e. no
/// partial derivative changes sign anywhere on the cube.
bool is_monotone(const FunctionTable& f);

/// A sign change of Delta_k between two points at Hamming distance < p off
/// coordinate k: Delta_k f(x) * Delta_k f(y) < 0.
struct SignViolation {
  int k;
  Point x;
  Point y;
};

struct LocalMonotonicityCheck {
  bool holds = true;
  std::optional<SignViolation> witness;
};

/// Decides p-local monotonicity (1 <= p <= arity) by the section scan: for
/// each k and each (p-1)-subset off k, Delta_k must keep one sign on every
/// section cube. p = 1 always holds.
LocalMonotonicityCheck is_p_locally_monotone(const FunctionTable& f, int p);
LocalMonotonicityCheck is_p_locally_monotone(const BitTable& f, int p);

/// Reference algorithm straight from the definition: scans all point pairs
/// within Hamming distance < p off the differentiated coordinate. Kept as
/// the independent check for the section scan.
LocalMonotonicityCheck is_p_locally_monotone_by_definition(const FunctionTable& f, int p);
LocalMonotonicityCheck is_p_locally_monotone_by_definition(const BitTable& f, int p);

/// Largest p such that f is p-locally monotone; equals the arity exactly
/// when f is monotone. The witness, present iff degree < arity, violates
/// (degree+1)-local monotonicity.
struct LocalMonotonicityReport {
  int degree = 0;
  std::optional<SignViolation> witness;
};

LocalMonotonicityReport local_monotonicity_degree(const FunctionTable& f);
LocalMonotonicityReport local_monotonicity_degree(const BitTable& f);

/// For Boolean f, a pair with |Delta_k f(x) - Delta_k f(y)| greater than
/// the Hamming distance of x, y off coordinate k; empty iff f is 2-locally
/// monotone. Throws std::invalid_argument on non-Boolean input.
std::optional<SignViolation> lipschitz_violation(const FunctionTable& f);

enum class SectionDefectKind {
  Xor,                   // binary section is u xor v
  Xnor,                  // binary section is u xor v xor 1
  CoefficientCondition,  // a1*(a1+a12) < 0 or a2*(a2+a12) < 0
};

/// A binary section witnessing failure of 2-local monotonicity. The base
/// point carries zeros on coordinates j and k; a1, a2, a12 are the
/// section's multilinear coefficients.
struct ForbiddenSection {
  int j = 0;
  int k = 0;
  Point base{0, 0};
  SectionDefectKind kind = SectionDefectKind::CoefficientCondition;
  Rational a1, a2, a12;
};

/// All forbidden binary sections: XOR/XNOR sections for Boolean inputs,
/// coefficient-condition violations otherwise. Empty iff f is 2-locally
/// monotone.
std::vector<ForbiddenSection> forbidden_binary_sections(const FunctionTable& f);

namespace detail {
/// Sign of Delta_k f at every index (value independent of bit k-1).
std::vector<signed char> delta_signs(const FunctionTable& f, int k);
std::vector<signed char> delta_signs(const BitTable& f, int k);
}  // namespace detail

}  // namespace pbfa
