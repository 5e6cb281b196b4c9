#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pbfa {

/// Largest supported arity. Tables are dense (2^n values), so this keeps
/// every representation at or below a million entries.
inline constexpr int kMaxArity = 20;

namespace detail {
void check_arity(int arity);
void check_index(int k, int arity);
}  // namespace detail

/// A tuple x in B^n. Coordinate x_k is stored at bit position k-1, i.e.
/// x_1 is the least significant bit of the table index. This one bit
/// convention is used everywhere, including the file formats.
class Point {
public:
  Point(int arity, std::uint32_t bits);
  static Point zero(int arity) { return Point(arity, 0); }

  int arity() const noexcept { return n_; }
  std::uint32_t bits() const noexcept { return bits_; }

  /// Value of the k-th coordinate (1-based).
  bool get(int k) const;

  /// The tuple that agrees with this one except that coordinate k is set
  /// to `value` (idempotent when it already is).
  Point with(int k, bool value) const;
  Point flipped(int k) const;

  /// Number of ones, |x|.
  int weight() const noexcept;

  /// Coordinates as 0/1 in index order, e.g. "(1,0,1)".
  std::string str() const;

  friend bool operator==(const Point&, const Point&) = default;

private:
  int n_;
  std::uint32_t bits_;
};

/// A subset S of [n] = {1,...,n}; member k is stored at bit position k-1.
/// Also used for coalitions, whose characteristic point shares the bits.
class SubsetMask {
public:
  SubsetMask(int arity, std::uint32_t members);
  static SubsetMask empty(int arity) { return SubsetMask(arity, 0); }
  static SubsetMask full(int arity);
  static SubsetMask single(int arity, int k);

  int arity() const noexcept { return n_; }
  std::uint32_t members() const noexcept { return members_; }
  int size() const noexcept;
  bool empty_set() const noexcept { return members_ == 0; }
  bool contains(int k) const;

  SubsetMask complement() const;
  SubsetMask with(int k) const;
  SubsetMask without(int k) const;

  /// Members in ascending order.
  std::vector<int> elements() const;

  /// Characteristic tuple 1_S.
  Point characteristic() const { return Point(n_, members_); }

  /// Members as "{1,3}" ("{}" for the empty set).
  std::string str() const;

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;

private:
  int n_;
  std::uint32_t members_;
};

}  // namespace pbfa
