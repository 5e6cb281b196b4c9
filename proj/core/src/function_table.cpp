#include "pbfa/function_table.hpp"

#include <bit>
#include <stdexcept>

namespace pbfa {

namespace {

void check_same_arity(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": arity mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}

// Positions (0-based) of the set bits of `mask`, ascending.
std::vector<int> bit_positions(std::uint32_t mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

// Expands a compressed pattern onto the given bit positions.
std::uint32_t expand(std::uint32_t pattern, const std::vector<int>& positions) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if ((pattern >> i) & 1u) out |= 1u << positions[i];
  }
  return out;
}

}  // namespace

FunctionTable::FunctionTable(int arity) : n_(arity) {
  detail::check_arity(arity);
  values_.assign(std::size_t{1} << arity, Rational());
}

FunctionTable::FunctionTable(int arity, std::vector<Rational> values) : n_(arity), values_(std::move(values)) {
  detail::check_arity(arity);
  if (values_.size() != (std::size_t{1} << arity)) {
    throw std::invalid_argument("table of arity " + std::to_string(arity) + " needs " +
                                std::to_string(std::size_t{1} << arity) + " values, got " +
                                std::to_string(values_.size()));
  }
}

FunctionTable FunctionTable::constant(int arity, Rational value) {
  detail::check_arity(arity);
  return FunctionTable(arity, std::vector<Rational>(std::size_t{1} << arity, std::move(value)));
}

Rational evaluate(const FunctionTable& f, const Point& x) {
  check_same_arity(f.arity(), x.arity(), "evaluate");
  return f[x.bits()];
}

Point with_assignment(const Point& x, int k, bool value) { return x.with(k, value); }

FunctionTable section(const FunctionTable& f, const SubsetMask& keep, const Point& base) {
  check_same_arity(f.arity(), keep.arity(), "section");
  check_same_arity(f.arity(), base.arity(), "section");
  const std::vector<int> positions = bit_positions(keep.members());
  const std::uint32_t frozen = base.bits() & ~keep.members();
  FunctionTable g(static_cast<int>(positions.size()));
  for (std::uint32_t y = 0; y < g.size(); ++y) {
    g[y] = f[frozen | expand(y, positions)];
  }
  return g;
}

void for_each_subset_of_size(std::uint32_t of, int k, const std::function<void(std::uint32_t)>& visit) {
  const std::vector<int> positions = bit_positions(of);
  const int m = static_cast<int>(positions.size());
  if (k < 0 || k > m) return;
  if (k == 0) {
    visit(0);
    return;
  }
  // Gosper's hack over the compressed m-bit universe, then expand.
  std::uint32_t pattern = (1u << k) - 1u;
  const std::uint32_t limit = m == 32 ? 0 : (1u << m);
  while (pattern < limit) {
    visit(expand(pattern, positions));
    const std::uint32_t c = pattern & (~pattern + 1u);
    const std::uint32_t r = pattern + c;
    pattern = (((r ^ pattern) >> 2) / c) | r;
  }
}

void for_each_section(const FunctionTable& f, int p,
                      const std::function<void(const SubsetMask&, const Point&, const FunctionTable&)>& visit) {
  const int n = f.arity();
  if (p < 1 || p > n) {
    throw std::out_of_range("section arity " + std::to_string(p) + " out of range [1, " + std::to_string(n) + "]");
  }
  const std::uint32_t all = SubsetMask::full(n).members();
  for_each_subset_of_size(all, p, [&](std::uint32_t s) {
    const SubsetMask keep(n, s);
    const std::vector<int> rest = bit_positions(all & ~s);
    const std::uint32_t bases = 1u << rest.size();
    for (std::uint32_t b = 0; b < bases; ++b) {
      const Point base(n, expand(b, rest));
      visit(keep, base, section(f, keep, base));
    }
  });
}

std::vector<Section> sections_of_arity(const FunctionTable& f, int p) {
  std::vector<Section> out;
  for_each_section(f, p, [&](const SubsetMask& keep, const Point& base, const FunctionTable& table) {
    out.push_back(Section{keep, base, table});
  });
  return out;
}

FunctionTable negate_variables(const FunctionTable& f, const SubsetMask& s) {
  check_same_arity(f.arity(), s.arity(), "negate_variables");
  FunctionTable g(f.arity());
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    g[x] = f[x ^ s.members()];
  }
  return g;
}

FunctionTable affine_transform(const FunctionTable& f, const Rational& alpha, const Rational& beta) {
  FunctionTable g(f.arity());
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    g[x] = alpha * f[x] + beta;
  }
  return g;
}

bool depends_on(const FunctionTable& f, int k) {
  detail::check_index(k, f.arity());
  const std::uint32_t bit = 1u << (k - 1);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if ((x & bit) == 0 && !(f[x] == f[x | bit])) return true;
  }
  return false;
}

SubsetMask essential_variables(const FunctionTable& f) {
  std::uint32_t members = 0;
  for (int k = 1; k <= f.arity(); ++k) {
    if (depends_on(f, k)) members |= 1u << (k - 1);
  }
  return SubsetMask(f.arity(), members);
}

bool is_boolean(const FunctionTable& f) {
  const Rational zero(0), one(1);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (!(f[x] == zero) && !(f[x] == one)) return false;
  }
  return true;
}

}  // namespace pbfa
