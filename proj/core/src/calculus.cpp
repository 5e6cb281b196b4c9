#include "pbfa/calculus.hpp"

#include <cctype>
#include <stdexcept>

namespace pbfa {

namespace {

enum class EdgeOp { Difference, Min, Max };

FunctionTable edge_op(const FunctionTable& f, int k, EdgeOp op) {
  detail::check_index(k, f.arity());
  const std::uint32_t bit = 1u << (k - 1);
  FunctionTable g(f.arity());
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (x & bit) continue;
    const Rational& lo = f[x];
    const Rational& hi = f[x | bit];
    Rational value;
    switch (op) {
      case EdgeOp::Difference: value = hi - lo; break;
      case EdgeOp::Min: value = min(lo, hi); break;
      case EdgeOp::Max: value = max(lo, hi); break;
    }
    g[x | bit] = value;
    g[x] = std::move(value);
  }
  return g;
}

}  // namespace

FunctionTable delta(const FunctionTable& f, int k) { return edge_op(f, k, EdgeOp::Difference); }

FunctionTable meet_derivative(const FunctionTable& f, int k) { return edge_op(f, k, EdgeOp::Min); }

FunctionTable join_derivative(const FunctionTable& f, int k) { return edge_op(f, k, EdgeOp::Max); }

FunctionTable delta2(const FunctionTable& f, int j, int k) {
  if (j == k) throw std::invalid_argument("second-order difference needs two distinct variables");
  return delta(delta(f, k), j);
}

FunctionTable apply(const FunctionTable& f, const DerivativeOp& op) {
  switch (op.kind) {
    case DerivKind::Delta: return delta(f, op.index);
    case DerivKind::Meet: return meet_derivative(f, op.index);
    case DerivKind::Join: return join_derivative(f, op.index);
  }
  throw std::logic_error("unknown derivative kind");
}

FunctionTable apply_sequence(const FunctionTable& f, const OpSequence& ops) {
  FunctionTable g = f;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    g = apply(g, *it);
  }
  return g;
}

OpSequence parse_op_sequence(std::string_view text) {
  OpSequence ops;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    DerivKind kind;
    switch (text[i]) {
      case '^': kind = DerivKind::Meet; break;
      case 'v': kind = DerivKind::Join; break;
      case 'd': kind = DerivKind::Delta; break;
      default:
        throw std::invalid_argument("bad derivative token at position " + std::to_string(i) +
                                    ": expected '^', 'v' or 'd'");
    }
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("derivative token at position " + std::to_string(i - 1) +
                                  " is missing a variable index");
    }
    int index = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      index = index * 10 + (text[i] - '0');
      ++i;
    }
    if (index < 1 || index > kMaxArity) {
      throw std::invalid_argument("variable index " + std::to_string(index) + " out of range [1, " +
                                  std::to_string(kMaxArity) + "]");
    }
    ops.push_back(DerivativeOp{kind, index});
  }
  return ops;
}

std::string format_op_sequence(const OpSequence& ops) {
  std::string out;
  for (const DerivativeOp& op : ops) {
    if (!out.empty()) out += ' ';
    switch (op.kind) {
      case DerivKind::Delta: out += 'd'; break;
      case DerivKind::Meet: out += '^'; break;
      case DerivKind::Join: out += 'v'; break;
    }
    out += std::to_string(op.index);
  }
  return out;
}

}  // namespace pbfa
