#include "pbfa/permutability.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "pbfa/monotonicity.hpp"

namespace pbfa {

namespace {

constexpr int kFastPathCap = 12;
constexpr int kReferenceCap = 7;

Rational value_at(const FunctionTable& t, std::uint32_t index) { return t[index]; }
Rational value_at(const BitTable& t, std::uint32_t index) { return Rational(t.get(index) ? 1 : 0); }

std::optional<std::uint32_t> first_difference(const FunctionTable& a, const FunctionTable& b) {
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    if (!(a[x] == b[x])) return x;
  }
  return std::nullopt;
}

std::optional<std::uint32_t> first_difference(const BitTable& a, const BitTable& b) {
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    if (wa[i] != wb[i]) {
      return static_cast<std::uint32_t>(i * 64 + std::countr_zero(wa[i] ^ wb[i]));
    }
  }
  return std::nullopt;
}

template <typename Table>
Table apply_lattice_ops(const Table& f, std::uint32_t mask, DerivKind kind) {
  Table g = f;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) {
    const int k = std::countr_zero(m) + 1;
    g = kind == DerivKind::Meet ? meet_derivative(g, k) : join_derivative(g, k);
  }
  return g;
}

OpSequence split_sequence(std::uint32_t meets, std::uint32_t joins, bool meets_first) {
  // Rightmost operator is applied first.
  OpSequence ops;
  const auto push = [&ops](std::uint32_t mask, DerivKind kind) {
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
      ops.push_back(DerivativeOp{kind, std::countr_zero(m) + 1});
    }
  };
  if (meets_first) {
    push(joins, DerivKind::Join);
    push(meets, DerivKind::Meet);
  } else {
    push(meets, DerivKind::Meet);
    push(joins, DerivKind::Join);
  }
  return ops;
}

template <typename Table>
PermutabilityCheck fast_check(const Table& f, int p) {
  const int n = f.arity();
  if (p == 1) return {};
  const std::uint32_t all = (1u << n) - 1u;
  PermutabilityCheck result;
  for_each_subset_of_size(all, p, [&](std::uint32_t k_mask) {
    if (!result.permutable) return;
    for (std::uint32_t joins = (k_mask - 1) & k_mask; joins != 0; joins = (joins - 1) & k_mask) {
      const std::uint32_t meets = k_mask ^ joins;
      const Table meets_first =
          apply_lattice_ops(apply_lattice_ops(f, meets, DerivKind::Meet), joins, DerivKind::Join);
      const Table joins_first =
          apply_lattice_ops(apply_lattice_ops(f, joins, DerivKind::Join), meets, DerivKind::Meet);
      if (meets_first == joins_first) continue;
      const std::uint32_t at = *first_difference(meets_first, joins_first);
      PermutabilityCounterexample ce;
      ce.indices = SubsetMask(n, k_mask);
      ce.joins = SubsetMask(n, joins);
      ce.order_a = split_sequence(meets, joins, /*meets_first=*/true);
      ce.order_b = split_sequence(meets, joins, /*meets_first=*/false);
      ce.point = Point(n, at);
      ce.value_a = value_at(meets_first, at);
      ce.value_b = value_at(joins_first, at);
      result = PermutabilityCheck{false, std::move(ce)};
      return;
    }
  });
  return result;
}

template <typename Table>
Table apply_order(const Table& f, const std::vector<int>& order, std::uint32_t join_mask) {
  // order[0] is applied first (innermost).
  Table g = f;
  for (const int k : order) {
    g = (join_mask >> (k - 1)) & 1u ? join_derivative(g, k) : meet_derivative(g, k);
  }
  return g;
}

OpSequence order_sequence(const std::vector<int>& order, std::uint32_t join_mask) {
  OpSequence ops;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    ops.push_back(DerivativeOp{(join_mask >> (*it - 1)) & 1u ? DerivKind::Join : DerivKind::Meet, *it});
  }
  return ops;
}

template <typename Table>
PermutabilityCheck reference_check(const Table& f, int p) {
  const int n = f.arity();
  if (p == 1) return {};
  const std::uint32_t all = (1u << n) - 1u;
  PermutabilityCheck result;
  for_each_subset_of_size(all, p, [&](std::uint32_t k_mask) {
    if (!result.permutable) return;
    std::vector<int> members;
    for (std::uint32_t m = k_mask; m != 0; m &= m - 1) members.push_back(std::countr_zero(m) + 1);
    const std::uint32_t assignments = 1u << p;
    for (std::uint32_t a = 0; a < assignments && result.permutable; ++a) {
      // Bit i of `a` decides the operator of members[i].
      std::uint32_t join_mask = 0;
      for (int i = 0; i < p; ++i) {
        if ((a >> i) & 1u) join_mask |= 1u << (members[i] - 1);
      }
      std::vector<int> order = members;
      const std::vector<int> base_order = order;
      const Table reference = apply_order(f, base_order, join_mask);
      while (std::next_permutation(order.begin(), order.end())) {
        const Table composed = apply_order(f, order, join_mask);
        if (composed == reference) continue;
        const std::uint32_t at = *first_difference(reference, composed);
        PermutabilityCounterexample ce;
        ce.indices = SubsetMask(n, k_mask);
        ce.joins = SubsetMask(n, join_mask);
        ce.order_a = order_sequence(base_order, join_mask);
        ce.order_b = order_sequence(order, join_mask);
        ce.point = Point(n, at);
        ce.value_a = value_at(reference, at);
        ce.value_b = value_at(composed, at);
        result = PermutabilityCheck{false, std::move(ce)};
        break;
      }
    }
  });
  return result;
}

void check_p(int p, int n, int cap, const char* what) {
  if (p < 1 || p > n) {
    throw std::out_of_range("permutability parameter " + std::to_string(p) + " out of range [1, " +
                            std::to_string(n) + "]");
  }
  if (p > cap) {
    throw std::invalid_argument(std::string(what) + " is capped at p <= " + std::to_string(cap));
  }
}

}  // namespace

PermutabilityCheck has_p_permutable_derivatives(const FunctionTable& f, int p) {
  check_p(p, f.arity(), kFastPathCap, "the permutability check");
  if (auto bits = BitTable::from_table(f)) return fast_check(*bits, p);
  return fast_check(f, p);
}

PermutabilityCheck has_p_permutable_derivatives(const BitTable& f, int p) {
  check_p(p, f.arity(), kFastPathCap, "the permutability check");
  return fast_check(f, p);
}

PermutabilityCheck has_p_permutable_derivatives_reference(const FunctionTable& f, int p) {
  check_p(p, f.arity(), kReferenceCap, "the permutation enumeration");
  if (auto bits = BitTable::from_table(f)) return reference_check(*bits, p);
  return reference_check(f, p);
}

PermutabilityCheck has_p_permutable_derivatives_reference(const BitTable& f, int p) {
  check_p(p, f.arity(), kReferenceCap, "the permutation enumeration");
  return reference_check(f, p);
}

PermutabilityReport max_permutability_degree(const FunctionTable& f) {
  const int n = f.arity();
  if (n == 0) return {0, std::nullopt};
  // Monotone means n-locally monotone, which implies n-permutable.
  if (is_monotone(f)) return {n, std::nullopt};
  const std::optional<BitTable> bits = BitTable::from_table(f);
  for (int p = 2; p <= n; ++p) {
    if (p > kFastPathCap) {
      throw std::invalid_argument("permutability degree above " + std::to_string(kFastPathCap) +
                                  " is not computable for non-monotone functions of arity " +
                                  std::to_string(n));
    }
    PermutabilityCheck check = bits ? fast_check(*bits, p) : fast_check(f, p);
    if (!check.permutable) return {p - 1, std::move(check.counterexample)};
  }
  return {n, std::nullopt};
}

BinaryPermutabilityCheck binary_2permutability_condition(const FunctionTable& f) {
  BinaryPermutabilityCheck result;
  const int n = f.arity();
  if (n < 2) return result;
  const std::uint32_t all = (1u << n) - 1u;
  const Rational zero(0);
  for (int j = 1; j < n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      const std::uint32_t bj = 1u << (j - 1);
      const std::uint32_t bk = 1u << (k - 1);
      const std::uint32_t rest = all & ~(bj | bk);
      std::uint32_t base = 0;
      while (true) {
        const Rational& g00 = f[base];
        const Rational a1 = f[base | bj] - g00;
        const Rational a2 = f[base | bk] - g00;
        const Rational a12 = f[base | bj | bk] - f[base | bj] - f[base | bk] + g00;
        const bool ok = a1 * a12 >= zero || a2 * a12 >= zero || abs(a12) <= max(abs(a1), abs(a2));
        if (!ok) {
          result.satisfied = false;
          result.violations.push_back(BinarySectionCondition{j, k, Point(n, base), a1, a2, a12});
        }
        if (base == rest) break;
        base = (base - rest) & rest;  // next submask of rest
      }
    }
  }
  return result;
}

}  // namespace pbfa
