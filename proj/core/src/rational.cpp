#include "pbfa/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace pbfa {

namespace {

[[noreturn]] void bad_literal(std::string_view text, const char* why) {
  throw std::invalid_argument("invalid rational literal \"" + std::string(text) + "\": " + why);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) : v_(numerator, denominator) {
  if (denominator == 0) throw std::invalid_argument("rational denominator must be nonzero");
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  if (rest.empty()) bad_literal(text, "no digits");

  mpq_class value;
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    const std::string_view num = rest.substr(0, slash);
    const std::string_view den = rest.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_literal(text, "expected digits/digits");
    mpz_class q(std::string(den), 10);
    if (q == 0) bad_literal(text, "zero denominator");
    value = mpq_class(mpz_class(std::string(num), 10), q);
  } else if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = rest.substr(0, dot);
    const std::string_view frac = rest.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) bad_literal(text, "expected digits.digits");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num = mpz_class(std::string(whole), 10) * scale + mpz_class(std::string(frac), 10);
    value = mpq_class(num, scale);
  } else {
    if (!all_digits(rest)) bad_literal(text, "expected digits");
    value = mpq_class(mpz_class(std::string(rest), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(std::move(value));
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  v_ += rhs.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  v_ -= rhs.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  v_ *= rhs.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

}  // namespace pbfa
