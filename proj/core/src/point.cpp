#include "pbfa/point.hpp"

#include <bit>
#include <stdexcept>

namespace pbfa {

namespace detail {

void check_arity(int arity) {
  if (arity < 0 || arity > kMaxArity) {
    throw std::invalid_argument("arity " + std::to_string(arity) + " out of range [0, " +
                                std::to_string(kMaxArity) + "]");
  }
}

void check_index(int k, int arity) {
  if (k < 1 || k > arity) {
    throw std::out_of_range("variable index " + std::to_string(k) + " out of range [1, " +
                            std::to_string(arity) + "]");
  }
}

}  // namespace detail

namespace {

void check_bits(std::uint32_t bits, int arity, const char* what) {
  if (arity < 32 && (bits >> arity) != 0) {
    throw std::invalid_argument(std::string(what) + " has bits above arity " + std::to_string(arity));
  }
}

}  // namespace

Point::Point(int arity, std::uint32_t bits) : n_(arity), bits_(bits) {
  detail::check_arity(arity);
  check_bits(bits, arity, "point");
}

bool Point::get(int k) const {
  detail::check_index(k, n_);
  return (bits_ >> (k - 1)) & 1u;
}

Point Point::with(int k, bool value) const {
  detail::check_index(k, n_);
  const std::uint32_t bit = 1u << (k - 1);
  return Point(n_, value ? (bits_ | bit) : (bits_ & ~bit));
}

Point Point::flipped(int k) const {
  detail::check_index(k, n_);
  return Point(n_, bits_ ^ (1u << (k - 1)));
}

int Point::weight() const noexcept { return std::popcount(bits_); }

std::string Point::str() const {
  std::string out = "(";
  for (int k = 1; k <= n_; ++k) {
    if (k > 1) out += ',';
    out += ((bits_ >> (k - 1)) & 1u) ? '1' : '0';
  }
  out += ')';
  return out;
}

SubsetMask::SubsetMask(int arity, std::uint32_t members) : n_(arity), members_(members) {
  detail::check_arity(arity);
  check_bits(members, arity, "subset");
}

SubsetMask SubsetMask::full(int arity) {
  detail::check_arity(arity);
  return SubsetMask(arity, arity == 0 ? 0u : ((1u << arity) - 1u));
}

SubsetMask SubsetMask::single(int arity, int k) {
  detail::check_index(k, arity);
  return SubsetMask(arity, 1u << (k - 1));
}

int SubsetMask::size() const noexcept { return std::popcount(members_); }

bool SubsetMask::contains(int k) const {
  detail::check_index(k, n_);
  return (members_ >> (k - 1)) & 1u;
}

SubsetMask SubsetMask::complement() const {
  return SubsetMask(n_, full(n_).members() & ~members_);
}

SubsetMask SubsetMask::with(int k) const {
  detail::check_index(k, n_);
  return SubsetMask(n_, members_ | (1u << (k - 1)));
}

SubsetMask SubsetMask::without(int k) const {
  detail::check_index(k, n_);
  return SubsetMask(n_, members_ & ~(1u << (k - 1)));
}

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (int k = 1; k <= n_; ++k) {
    if ((members_ >> (k - 1)) & 1u) out.push_back(k);
  }
  return out;
}

std::string SubsetMask::str() const {
  std::string out = "{";
  bool first = true;
  for (int k : elements()) {
    if (!first) out += ',';
    out += std::to_string(k);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace pbfa
