#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pbfa/function_table.hpp"

namespace pbfa {

/// Packed truth table for {0,1}-valued functions. This is a fast kernel
/// behind the exhaustive sweeps and the permutability checks on Boolean
/// inputs; the exact Rational path stays authoritative and the two are
/// compared against each other in the sweep suite.
class BitTable {
public:
  explicit BitTable(int arity);

  /// Packs f when every value is 0 or 1; nullopt otherwise.
  static std::optional<BitTable> from_table(const FunctionTable& f);
  FunctionTable to_table() const;

  int arity() const noexcept { return n_; }
  std::uint32_t size() const noexcept { return 1u << n_; }

  bool get(std::uint32_t index) const { return (words_[index >> 6] >> (index & 63)) & 1u; }
  void set(std::uint32_t index, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (index & 63);
    if (value) {
      words_[index >> 6] |= bit;
    } else {
      words_[index >> 6] &= ~bit;
    }
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const BitTable&, const BitTable&) = default;

  friend BitTable meet_derivative(const BitTable& f, int k);
  friend BitTable join_derivative(const BitTable& f, int k);

private:
  BitTable half_op(int k, bool join) const;

  int n_;
  std::vector<std::uint64_t> words_;  // bit i of the table at word i/64; unused high bits zero
};

BitTable meet_derivative(const BitTable& f, int k);
BitTable join_derivative(const BitTable& f, int k);

}  // namespace pbfa
