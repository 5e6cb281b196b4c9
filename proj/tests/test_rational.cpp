#include <doctest.h>

#include <sstream>

#include "pbfa/rational.hpp"

using pbfa::Rational;

TEST_CASE("rationals canonicalize to lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(1, 3).str() == "1/3");
  CHECK(Rational(-1, 3).str() == "-1/3");
}

TEST_CASE("rational parsing covers integers, fractions and exact decimals") {
  CHECK(Rational::from_string("42") == Rational(42));
  CHECK(Rational::from_string("-7") == Rational(-7));
  CHECK(Rational::from_string("3/4") == Rational(3, 4));
  CHECK(Rational::from_string("-6/8") == Rational(-3, 4));
  CHECK(Rational::from_string("3.25") == Rational(13, 4));
  CHECK(Rational::from_string("-0.5") == Rational(-1, 2));
  CHECK(Rational::from_string("0.1") == Rational(1, 10));
  CHECK(Rational::from_string("+2") == Rational(2));

  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1."), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic and order are exact") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(-a == Rational(-1, 3));
  CHECK(a > b);
  CHECK(b < a);
  CHECK(min(a, b) == b);
  CHECK(max(a, b) == a);
  CHECK(abs(Rational(-5, 2)) == Rational(5, 2));
  CHECK(Rational(1, 3).sign() == 1);
  CHECK(Rational(-1, 3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(2).is_integer());
  CHECK_FALSE(Rational(1, 2).is_integer());

  std::ostringstream out;
  out << Rational(-3, 2);
  CHECK(out.str() == "-3/2");
}
