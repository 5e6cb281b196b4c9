#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pbfa/point.hpp"
#include "pbfa/rational.hpp"

namespace pbfa {

/// Dense value table of a pseudo-Boolean function f : B^n -> Q.
/// values[i] is f at the point whose bits are i (x_1 = least significant
/// bit). All operations on tables are pure; instances are safe to share
/// read-only across threads.
class FunctionTable {
public:
  /// Zero function of the given arity.
  explicit FunctionTable(int arity);
  FunctionTable(int arity, std::vector<Rational> values);

  static FunctionTable constant(int arity, Rational value);

  int arity() const noexcept { return n_; }
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(values_.size()); }

  const Rational& operator[](std::uint32_t index) const { return values_[index]; }
  Rational& operator[](std::uint32_t index) { return values_[index]; }
  const std::vector<Rational>& values() const noexcept { return values_; }

  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;

private:
  int n_;
  std::vector<Rational> values_;
};

/// f(x); throws on arity mismatch.
Rational evaluate(const FunctionTable& f, const Point& x);

/// The tuple x_k^a.
Point with_assignment(const Point& x, int k, bool value);

/// The S-section g of f at base point a: g(y) = f(a_S^y). Variable i of g
/// corresponds to the i-th smallest member of S (coordinates outside S are
/// frozen at the base point's values).
FunctionTable section(const FunctionTable& f, const SubsetMask& keep, const Point& base);

struct Section {
  SubsetMask keep;
  Point base;
  FunctionTable table;
};

/// Visits every p-ary section of f: p-subsets S in colexicographic order
/// (equivalently, ascending mask order), and for each S every assignment
/// of the complement in ascending mask order. Base points carry zeros on
/// the coordinates of S.
void for_each_section(const FunctionTable& f, int p,
                      const std::function<void(const SubsetMask&, const Point&, const FunctionTable&)>& visit);

std::vector<Section> sections_of_arity(const FunctionTable& f, int p);

/// g(x) = f(x with the coordinates in S flipped). Involution.
FunctionTable negate_variables(const FunctionTable& f, const SubsetMask& s);

/// Pointwise alpha*f + beta.
FunctionTable affine_transform(const FunctionTable& f, const Rational& alpha, const Rational& beta);

/// The set of variables f depends on: k is essential iff f(a_k^0) != f(a_k^1)
/// for some a.
SubsetMask essential_variables(const FunctionTable& f);
bool depends_on(const FunctionTable& f, int k);

/// True iff every value is 0 or 1.
bool is_boolean(const FunctionTable& f);

/// Enumerates the k-subsets of the bit set `of` in colexicographic order.
void for_each_subset_of_size(std::uint32_t of, int k, const std::function<void(std::uint32_t)>& visit);

}  // namespace pbfa
