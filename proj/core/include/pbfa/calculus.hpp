#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pbfa/function_table.hpp"

namespace pbfa {

enum class DerivKind { Delta, Meet, Join };

struct DerivativeOp {
  DerivKind kind;
  int index;  // 1-based variable index

  friend bool operator==(const DerivativeOp&, const DerivativeOp&) = default;
};

/// A composition of derivative operators, written left to right and applied
/// right to left: the last element acts on f first, matching the usual
/// operator notation where in "v2 ^1 f" the meet on variable 1 is taken
/// before the join on variable 2. Permutability statements depend on this
/// order, so it is fixed here once.
using OpSequence = std::vector<DerivativeOp>;

/// Discrete partial derivative Delta_k f(x) = f(x_k^1) - f(x_k^0).
/// The result keeps arity n; variable k is inessential in it.
FunctionTable delta(const FunctionTable& f, int k);

/// Meet derivative: pointwise min of f over the two endpoints of the k-edge.
FunctionTable meet_derivative(const FunctionTable& f, int k);

/// Join derivative: pointwise max over the k-edge.
FunctionTable join_derivative(const FunctionTable& f, int k);

/// Second-order difference Delta_j Delta_k f (j != k); symmetric in (j, k).
FunctionTable delta2(const FunctionTable& f, int j, int k);

FunctionTable apply(const FunctionTable& f, const DerivativeOp& op);

/// Applies the sequence right to left; the empty sequence returns f.
FunctionTable apply_sequence(const FunctionTable& f, const OpSequence& ops);

/// Parses whitespace-separated operator tokens: "^k" (meet), "vk" (join),
/// "dk" (delta), e.g. "v2 ^1". Throws std::invalid_argument on bad tokens.
OpSequence parse_op_sequence(std::string_view text);
std::string format_op_sequence(const OpSequence& ops);

}  // namespace pbfa
