#include "pbfa/monotonicity.hpp"

#include <bit>
#include <stdexcept>

namespace pbfa {

namespace detail {

std::vector<signed char> delta_signs(const FunctionTable& f, int k) {
  check_index(k, f.arity());
  const std::uint32_t bit = 1u << (k - 1);
  std::vector<signed char> signs(f.size(), 0);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (x & bit) continue;
    const auto cmp = f[x | bit] <=> f[x];
    const signed char s = cmp > 0 ? 1 : (cmp < 0 ? -1 : 0);
    signs[x] = s;
    signs[x | bit] = s;
  }
  return signs;
}

std::vector<signed char> delta_signs(const BitTable& f, int k) {
  check_index(k, f.arity());
  const std::uint32_t bit = 1u << (k - 1);
  std::vector<signed char> signs(f.size(), 0);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (x & bit) continue;
    const signed char s = static_cast<signed char>(static_cast<int>(f.get(x | bit)) - static_cast<int>(f.get(x)));
    signs[x] = s;
    signs[x | bit] = s;
  }
  return signs;
}

}  // namespace detail

namespace {

std::vector<int> bit_positions(std::uint32_t mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

std::uint32_t expand(std::uint32_t pattern, const std::vector<int>& positions) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if ((pattern >> i) & 1u) out |= 1u << positions[i];
  }
  return out;
}

struct SignTables {
  int n = 0;
  std::vector<std::vector<signed char>> per_k;  // index k-1
};

template <typename Table>
SignTables build_sign_tables(const Table& f) {
  SignTables t;
  t.n = f.arity();
  t.per_k.reserve(t.n);
  for (int k = 1; k <= t.n; ++k) t.per_k.push_back(detail::delta_signs(f, k));
  return t;
}

void check_p(int p, int n) {
  if (p < 1 || p > n) {
    throw std::out_of_range("locality parameter " + std::to_string(p) + " out of range [1, " +
                            std::to_string(n) + "]");
  }
}

// Section scan: for each k and each (p-1)-subset S off k, the sign of
// Delta_k must not take both values on any base-fixed copy of B^S.
LocalMonotonicityCheck section_scan(const SignTables& signs, int p) {
  const int n = signs.n;
  if (p == 1) return {};
  const std::uint32_t all = n == 0 ? 0u : (1u << n) - 1u;
  for (int k = 1; k <= n; ++k) {
    const auto& sig = signs.per_k[k - 1];
    const std::uint32_t rest = all & ~(1u << (k - 1));
    const std::vector<int> rest_positions = bit_positions(rest);
    const int m = n - 1;
    // (p-1)-subsets of the remaining coordinates, Gosper's hack over a
    // compressed m-bit universe.
    std::uint32_t pattern = (1u << (p - 1)) - 1u;
    const std::uint32_t limit = 1u << m;
    while (pattern < limit) {
      const std::uint32_t s = expand(pattern, rest_positions);
      const std::vector<int> s_positions = bit_positions(s);
      const std::vector<int> base_positions = bit_positions(rest & ~s);
      const std::uint32_t npoints = 1u << s_positions.size();
      std::vector<std::uint32_t> points(npoints);
      for (std::uint32_t q = 0; q < npoints; ++q) points[q] = expand(q, s_positions);
      const std::uint32_t nbases = 1u << base_positions.size();
      for (std::uint32_t b = 0; b < nbases; ++b) {
        const std::uint32_t base = expand(b, base_positions);
        std::int64_t pos = -1;
        std::int64_t neg = -1;
        for (std::uint32_t q = 0; q < npoints; ++q) {
          const std::uint32_t idx = base | points[q];
          const signed char v = sig[idx];
          if (v > 0) pos = idx;
          else if (v < 0) neg = idx;
          if (pos >= 0 && neg >= 0) {
            return {false, SignViolation{k, Point(n, static_cast<std::uint32_t>(pos)),
                                         Point(n, static_cast<std::uint32_t>(neg))}};
          }
        }
      }
      const std::uint32_t c = pattern & (~pattern + 1u);
      const std::uint32_t r = pattern + c;
      pattern = (((r ^ pattern) >> 2) / c) | r;
    }
  }
  return {};
}

LocalMonotonicityCheck definition_scan(const SignTables& signs, int p) {
  const int n = signs.n;
  if (p == 1) return {};
  const std::uint32_t all = n == 0 ? 0u : (1u << n) - 1u;
  for (int k = 1; k <= n; ++k) {
    const auto& sig = signs.per_k[k - 1];
    const std::uint32_t kbit = 1u << (k - 1);
    const std::uint32_t rest = all & ~kbit;
    // All nonzero difference masks off coordinate k of weight < p.
    std::vector<std::uint32_t> diffs;
    for (std::uint32_t d = rest; d != 0; d = (d - 1) & rest) {
      if (std::popcount(d) <= p - 1) diffs.push_back(d);
    }
    for (std::uint32_t x = 0; x <= all; ++x) {
      if (x & kbit) continue;
      const signed char sx = sig[x];
      if (sx == 0) continue;
      for (const std::uint32_t d : diffs) {
        const std::uint32_t y = x ^ d;
        if (static_cast<int>(sx) * static_cast<int>(sig[y]) < 0) {
          return {false, SignViolation{k, Point(n, x), Point(n, y)}};
        }
      }
    }
  }
  return {};
}

template <typename Table>
LocalMonotonicityCheck p_local_impl(const Table& f, int p) {
  check_p(p, f.arity());
  if (p == 1) return {};
  return section_scan(build_sign_tables(f), p);
}

template <typename Table>
LocalMonotonicityCheck p_local_definition_impl(const Table& f, int p) {
  check_p(p, f.arity());
  if (p == 1) return {};
  return definition_scan(build_sign_tables(f), p);
}

bool signs_monotone(const SignTables& signs) {
  for (const auto& sig : signs.per_k) {
    bool pos = false, neg = false;
    for (const signed char v : sig) {
      pos = pos || v > 0;
      neg = neg || v < 0;
    }
    if (pos && neg) return false;
  }
  return true;
}

template <typename Table>
LocalMonotonicityReport degree_impl(const Table& f) {
  const int n = f.arity();
  if (n == 0) return {0, std::nullopt};
  const SignTables signs = build_sign_tables(f);
  if (signs_monotone(signs)) return {n, std::nullopt};
  // p-local monotonicity is downward closed, so scan upward from p = 2;
  // a non-monotone function must fail by p = n.
  for (int p = 2; p <= n; ++p) {
    LocalMonotonicityCheck check = section_scan(signs, p);
    if (!check.holds) return {p - 1, std::move(check.witness)};
  }
  throw std::logic_error("non-monotone function passed the arity-level scan");
}

}  // namespace

VariableMonotonicity variable_monotonicity(const FunctionTable& f, int k) {
  const std::vector<signed char> sig = detail::delta_signs(f, k);
  bool pos = false, neg = false;
  for (const signed char v : sig) {
    pos = pos || v > 0;
    neg = neg || v < 0;
  }
  if (pos && neg) return VariableMonotonicity::Neither;
  if (pos) return VariableMonotonicity::Isotone;
  if (neg) return VariableMonotonicity::Antitone;
  return VariableMonotonicity::Constant;
}

bool is_monotone(const FunctionTable& f) {
  for (int k = 1; k <= f.arity(); ++k) {
    if (variable_monotonicity(f, k) == VariableMonotonicity::Neither) return false;
  }
  return true;
}

LocalMonotonicityCheck is_p_locally_monotone(const FunctionTable& f, int p) { return p_local_impl(f, p); }
LocalMonotonicityCheck is_p_locally_monotone(const BitTable& f, int p) { return p_local_impl(f, p); }

LocalMonotonicityCheck is_p_locally_monotone_by_definition(const FunctionTable& f, int p) {
  return p_local_definition_impl(f, p);
}
LocalMonotonicityCheck is_p_locally_monotone_by_definition(const BitTable& f, int p) {
  return p_local_definition_impl(f, p);
}

LocalMonotonicityReport local_monotonicity_degree(const FunctionTable& f) { return degree_impl(f); }
LocalMonotonicityReport local_monotonicity_degree(const BitTable& f) { return degree_impl(f); }

std::optional<SignViolation> lipschitz_violation(const FunctionTable& f) {
  if (!is_boolean(f)) throw std::invalid_argument("lipschitz_violation requires a Boolean table");
  if (f.arity() < 2) return std::nullopt;
  // For Boolean tables the derivative bound can only fail at distance 1,
  // where it is exactly a failure of 2-local monotonicity.
  LocalMonotonicityCheck check = is_p_locally_monotone(f, 2);
  return check.holds ? std::nullopt : std::move(check.witness);
}

std::vector<ForbiddenSection> forbidden_binary_sections(const FunctionTable& f) {
  std::vector<ForbiddenSection> out;
  const int n = f.arity();
  if (n < 2) return out;
  const bool boolean = is_boolean(f);
  const std::uint32_t all = (1u << n) - 1u;
  const Rational zero(0);
  for (int j = 1; j < n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      const std::uint32_t bj = 1u << (j - 1);
      const std::uint32_t bk = 1u << (k - 1);
      const std::vector<int> base_positions = bit_positions(all & ~(bj | bk));
      const std::uint32_t nbases = 1u << base_positions.size();
      for (std::uint32_t b = 0; b < nbases; ++b) {
        const std::uint32_t base = expand(b, base_positions);
        const Rational& g00 = f[base];
        const Rational& g10 = f[base | bj];
        const Rational& g01 = f[base | bk];
        const Rational& g11 = f[base | bj | bk];
        const Rational a1 = g10 - g00;
        const Rational a2 = g01 - g00;
        const Rational a12 = g11 - g10 - g01 + g00;
        if (boolean) {
          const bool is_xor = g00.is_zero() && g11.is_zero() && g10 == Rational(1) && g01 == Rational(1);
          const bool is_xnor = g10.is_zero() && g01.is_zero() && g00 == Rational(1) && g11 == Rational(1);
          if (is_xor || is_xnor) {
            out.push_back(ForbiddenSection{j, k, Point(n, base),
                                           is_xor ? SectionDefectKind::Xor : SectionDefectKind::Xnor, a1, a2,
                                           a12});
          }
        } else if (a1 * (a1 + a12) < zero || a2 * (a2 + a12) < zero) {
          out.push_back(ForbiddenSection{j, k, Point(n, base), SectionDefectKind::CoefficientCondition, a1,
                                         a2, a12});
        }
      }
    }
  }
  return out;
}

}  // namespace pbfa
