#include "pbfa/bit_table.hpp"

namespace pbfa {

namespace {

// kLo[b] selects the bit positions whose index has bit b clear.
constexpr std::uint64_t kLo[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

}  // namespace

BitTable::BitTable(int arity) : n_(arity) {
  detail::check_arity(arity);
  const std::size_t bits = std::size_t{1} << arity;
  words_.assign((bits + 63) / 64, 0);
}

std::optional<BitTable> BitTable::from_table(const FunctionTable& f) {
  BitTable t(f.arity());
  const Rational zero(0), one(1);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (f[x] == one) {
      t.set(x, true);
    } else if (!(f[x] == zero)) {
      return std::nullopt;
    }
  }
  return t;
}

FunctionTable BitTable::to_table() const {
  FunctionTable f(n_);
  for (std::uint32_t x = 0; x < size(); ++x) {
    if (get(x)) f[x] = Rational(1);
  }
  return f;
}

BitTable BitTable::half_op(int k, bool join) const {
  detail::check_index(k, n_);
  const int b = k - 1;
  BitTable out(n_);
  if (b < 6) {
    const int shift = 1 << b;
    const std::uint64_t lo = kLo[b];
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t w = words_[i];
      const std::uint64_t x = w & lo;
      const std::uint64_t y = (w >> shift) & lo;
      const std::uint64_t m = join ? (x | y) : (x & y);
      out.words_[i] = m | (m << shift);
    }
  } else {
    const std::size_t stride = std::size_t{1} << (b - 6);
    for (std::size_t base = 0; base < words_.size(); base += 2 * stride) {
      for (std::size_t i = 0; i < stride; ++i) {
        const std::uint64_t a = words_[base + i];
        const std::uint64_t c = words_[base + i + stride];
        const std::uint64_t m = join ? (a | c) : (a & c);
        out.words_[base + i] = m;
        out.words_[base + i + stride] = m;
      }
    }
  }
  return out;
}

BitTable meet_derivative(const BitTable& f, int k) { return f.half_op(k, false); }
BitTable join_derivative(const BitTable& f, int k) { return f.half_op(k, true); }

}  // namespace pbfa
