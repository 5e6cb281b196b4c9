#include "pbfa/polynomial.hpp"

#include <bit>
#include <stdexcept>

namespace pbfa {

MultilinearPolynomial::MultilinearPolynomial(int arity) : n_(arity) {
  detail::check_arity(arity);
  coef_.assign(std::size_t{1} << arity, Rational());
}

MultilinearPolynomial::MultilinearPolynomial(int arity, std::vector<Rational> coefficients)
    : n_(arity), coef_(std::move(coefficients)) {
  detail::check_arity(arity);
  if (coef_.size() != (std::size_t{1} << arity)) {
    throw std::invalid_argument("polynomial of arity " + std::to_string(arity) + " needs " +
                                std::to_string(std::size_t{1} << arity) + " coefficients, got " +
                                std::to_string(coef_.size()));
  }
}

const Rational& MultilinearPolynomial::coefficient(const SubsetMask& s) const {
  if (s.arity() != n_) throw std::invalid_argument("coefficient: arity mismatch");
  return coef_[s.members()];
}

MultilinearPolynomial MultilinearPolynomial::extended(int arity) const {
  if (arity < n_) throw std::invalid_argument("extended: target arity below current arity");
  MultilinearPolynomial out(arity);
  for (std::uint32_t s = 0; s < size(); ++s) out[s] = coef_[s];
  return out;
}

MultilinearPolynomial poly_from_table(const FunctionTable& f) {
  MultilinearPolynomial p(f.arity());
  for (std::uint32_t s = 0; s < f.size(); ++s) p[s] = f[s];
  // In-place Moebius transform over the subset lattice.
  for (int b = 0; b < f.arity(); ++b) {
    const std::uint32_t bit = 1u << b;
    for (std::uint32_t s = 0; s < f.size(); ++s) {
      if (s & bit) p[s] -= p[s ^ bit];
    }
  }
  return p;
}

FunctionTable to_table(const MultilinearPolynomial& p) {
  FunctionTable f(p.arity());
  for (std::uint32_t s = 0; s < p.size(); ++s) f[s] = p[s];
  // Zeta transform: accumulate subset sums.
  for (int b = 0; b < p.arity(); ++b) {
    const std::uint32_t bit = 1u << b;
    for (std::uint32_t s = 0; s < f.size(); ++s) {
      if (s & bit) f[s] += f[s ^ bit];
    }
  }
  return f;
}

MultilinearPolynomial formal_derivative(const MultilinearPolynomial& p, int k) {
  detail::check_index(k, p.arity());
  const std::uint32_t bit = 1u << (k - 1);
  MultilinearPolynomial d(p.arity());
  for (std::uint32_t s = 0; s < p.size(); ++s) {
    if ((s & bit) == 0) d[s] = p[s | bit];
  }
  return d;
}

int degree(const MultilinearPolynomial& p) {
  int deg = 0;
  for (std::uint32_t s = 0; s < p.size(); ++s) {
    if (!p[s].is_zero()) deg = std::max(deg, std::popcount(s));
  }
  return deg;
}

std::string pretty_print(const MultilinearPolynomial& p) {
  std::string out;
  for (std::uint32_t s = 0; s < p.size(); ++s) {
    if (p[s].is_zero()) continue;
    const Rational coeff = p[s];
    const bool negative = coeff.sign() < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(coeff);
    std::string vars;
    for (int k = 1; k <= p.arity(); ++k) {
      if ((s >> (k - 1)) & 1u) {
        if (!vars.empty()) vars += '*';
        vars += 'x';
        vars += std::to_string(k);
      }
    }
    if (vars.empty()) {
      out += magnitude.str();
    } else if (magnitude == Rational(1)) {
      out += vars;
    } else {
      out += magnitude.str() + '*' + vars;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace pbfa
