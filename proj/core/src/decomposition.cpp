#include "pbfa/decomposition.hpp"

#include <stdexcept>

#include "pbfa/monotonicity.hpp"

namespace pbfa {

namespace {

// Preimage of the point with value b on S and a elsewhere: increasing
// variables read b as 1, decreasing ones as 0.
std::uint32_t preimage_bits(std::uint32_t s, const std::vector<Orientation>& phi) {
  std::uint32_t x = 0;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const bool high = (s >> i) & 1u;
    const bool bit = phi[i] == Orientation::Increasing ? high : !high;
    if (bit) x |= 1u << i;
  }
  return x;
}

}  // namespace

std::optional<PseudoPolynomialDecomposition> decompose(const FunctionTable& f) {
  const int n = f.arity();
  PseudoPolynomialDecomposition d;
  d.phi.assign(n, Orientation::Increasing);
  for (int k = 1; k <= n; ++k) {
    switch (variable_monotonicity(f, k)) {
      case VariableMonotonicity::Isotone:
      case VariableMonotonicity::Constant:
        break;
      case VariableMonotonicity::Antitone:
        d.phi[k - 1] = Orientation::Decreasing;
        break;
      case VariableMonotonicity::Neither:
        return std::nullopt;
    }
  }

  d.a = f[0];
  d.b = f[0];
  for (std::uint32_t x = 1; x < f.size(); ++x) {
    if (f[x] < d.a) d.a = f[x];
    if (d.b < f[x]) d.b = f[x];
  }

  d.lattice_coef.reserve(f.size());
  for (std::uint32_t s = 0; s < f.size(); ++s) {
    d.lattice_coef.push_back(f[preimage_bits(s, d.phi)]);
  }

  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (!(evaluate_decomposition(d, Point(n, x)) == f[x])) {
      throw std::logic_error("pseudo-polynomial decomposition failed to reproduce a monotone function");
    }
  }
  return d;
}

Rational evaluate_decomposition(const PseudoPolynomialDecomposition& d, const Point& x) {
  const int n = static_cast<int>(d.phi.size());
  if (x.arity() != n) throw std::invalid_argument("evaluate_decomposition: arity mismatch");
  // y_i = phi_i(x_i) in {a, b}, tracked as the bit "y_i == b".
  std::uint32_t high = 0;
  for (int i = 0; i < n; ++i) {
    const bool xi = (x.bits() >> i) & 1u;
    const bool yi_high = d.phi[i] == Orientation::Increasing ? xi : !xi;
    if (yi_high) high |= 1u << i;
  }
  // max over S of (c_S min min_{i in S} y_i); the inner min is b when S is
  // contained in the high coordinates and a otherwise, and the empty meet
  // reads as b, so the S = {} term is c_{}.
  Rational best = d.lattice_coef[0];
  const std::uint32_t count = static_cast<std::uint32_t>(d.lattice_coef.size());
  for (std::uint32_t s = 1; s < count; ++s) {
    const Rational term = (s & ~high) == 0 ? min(d.lattice_coef[s], d.b) : min(d.lattice_coef[s], d.a);
    if (best < term) best = term;
  }
  return best;
}

}  // namespace pbfa
