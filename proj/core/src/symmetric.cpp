#include "pbfa/symmetric.hpp"

#include <bit>
#include <stdexcept>

namespace pbfa {

std::optional<SymmetricSequence> detect_symmetric(const FunctionTable& f) {
  SymmetricSequence s;
  s.alpha.assign(f.arity() + 1, Rational());
  std::vector<bool> seen(f.arity() + 1, false);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const int w = std::popcount(x);
    if (!seen[w]) {
      s.alpha[w] = f[x];
      seen[w] = true;
    } else if (!(s.alpha[w] == f[x])) {
      return std::nullopt;
    }
  }
  return s;
}

FunctionTable seq_to_function(const SymmetricSequence& s) {
  const int n = s.arity();
  if (n < 0) throw std::invalid_argument("sequence must have at least one entry");
  FunctionTable f(n);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    f[x] = s.alpha[std::popcount(x)];
  }
  return f;
}

namespace {

SymmetricSequence adjacent(const SymmetricSequence& s, bool join) {
  if (s.arity() < 1) throw std::invalid_argument("sequence derivative needs arity >= 1");
  SymmetricSequence out;
  out.alpha.reserve(s.alpha.size() - 1);
  for (std::size_t i = 0; i + 1 < s.alpha.size(); ++i) {
    out.alpha.push_back(join ? max(s.alpha[i], s.alpha[i + 1]) : min(s.alpha[i], s.alpha[i + 1]));
  }
  return out;
}

}  // namespace

SymmetricSequence seq_meet(const SymmetricSequence& s) { return adjacent(s, false); }
SymmetricSequence seq_join(const SymmetricSequence& s) { return adjacent(s, true); }

int seq_local_monotonicity_degree(const SymmetricSequence& s) {
  const int n = s.arity();
  // A window fails exactly when it spans both a strict rise and a strict
  // fall, so the degree is the smallest gap between two consecutive
  // opposite-sign differences (n when no such pair exists).
  int degree = n;
  int last_sign = 0;
  int last_at = 0;
  for (int i = 0; i + 1 <= n; ++i) {
    const auto cmp = s.alpha[i + 1] <=> s.alpha[i];
    const int sign = cmp > 0 ? 1 : (cmp < 0 ? -1 : 0);
    if (sign == 0) continue;
    if (last_sign != 0 && sign != last_sign) {
      degree = std::min(degree, i - last_at);
    }
    last_sign = sign;
    last_at = i;
  }
  return degree;
}

SymmetricSequence staircase(int p) {
  if (p < 2) throw std::invalid_argument("staircase needs p >= 2");
  const int n = 2 * p + 4;
  detail::check_arity(n);
  SymmetricSequence s;
  s.alpha.reserve(n + 1);
  s.alpha.assign(2, Rational(0));
  s.alpha.insert(s.alpha.end(), p, Rational(1));
  s.alpha.insert(s.alpha.end(), p, Rational(0));
  s.alpha.insert(s.alpha.end(), 3, Rational(1));
  return s;
}

SymmetricSequence parse_sequence(std::string_view text) {
  SymmetricSequence s;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (item.empty()) throw std::invalid_argument("sequence has an empty entry");
    s.alpha.push_back(Rational::from_string(item));
    if (end == text.size()) break;
    start = end + 1;
  }
  if (s.alpha.empty()) throw std::invalid_argument("sequence must have at least one entry");
  detail::check_arity(s.arity());
  return s;
}

std::string format_sequence(const SymmetricSequence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.alpha.size(); ++i) {
    if (i > 0) out += ',';
    out += s.alpha[i].str();
  }
  return out;
}

}  // namespace pbfa
