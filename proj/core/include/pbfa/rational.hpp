#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace pbfa {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Every predicate in this library is a sign or order test,
/// so function values are kept exact end to end; decimals accepted at
/// parse boundaries are converted exactly (base-10 denominator).
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long value) : v_(value) {}  // NOLINT: implicit by design, tables read as {1, 2, 4, 3}
  Rational(int value) : v_(value) {}   // NOLINT
  Rational(long numerator, long denominator);

  /// Parses "p/q", an integer, or a decimal such as "3.25" (exact).
  /// Throws std::invalid_argument on malformed input or zero denominator.
  static Rational from_string(std::string_view text);

  int sign() const noexcept { return sgn(v_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Canonical form: "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  explicit Rational(mpq_class value) : v_(std::move(value)) {}
  mpq_class v_;
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace pbfa
