#include <doctest.h>

#include <random>

#include "pbfa/decomposition.hpp"
#include "pbfa/monotonicity.hpp"
#include "pbfa/sweep.hpp"
#include "support.hpp"

using namespace pbfa;
using test::q;
using test::table;

TEST_CASE("conjunction decomposes into its own lattice polynomial") {
  const auto d = decompose(test::table_of("x1*x2"));
  REQUIRE(d.has_value());
  CHECK(d->a == q(0));
  CHECK(d->b == q(1));
  CHECK(d->phi == std::vector<Orientation>{Orientation::Increasing, Orientation::Increasing});
  CHECK(d->lattice_coef == std::vector<Rational>{q(0), q(0), q(0), q(1)});
  for (std::uint32_t x = 0; x < 4; ++x) {
    CHECK(evaluate_decomposition(*d, Point(2, x)) == test::table_of("x1*x2")[x]);
  }
}

TEST_CASE("antitone variables get a decreasing unary map") {
  const auto d = decompose(test::table_of("1 - x1"));
  REQUIRE(d.has_value());
  CHECK(d->phi == std::vector<Orientation>{Orientation::Decreasing});
  CHECK(d->a == q(0));
  CHECK(d->b == q(1));
  // p'(y) = y1 on {0,1}: coefficients c_{} = 0, c_{1} = 1.
  CHECK(d->lattice_coef == std::vector<Rational>{q(0), q(1)});
  CHECK(evaluate_decomposition(*d, Point(1, 0)) == q(1));
  CHECK(evaluate_decomposition(*d, Point(1, 1)) == q(0));
}

TEST_CASE("non-monotone functions have no decomposition") {
  CHECK_FALSE(decompose(test::table_of("x1 - x1*x2 + x2*x3")).has_value());
  CHECK_FALSE(decompose(table(2, {0, 1, 1, 0})).has_value());
  CHECK_FALSE(decompose(test::example_1243()).has_value());
}

TEST_CASE("constant functions get the constant decomposition") {
  const auto d = decompose(FunctionTable::constant(2, q(5)));
  REQUIRE(d.has_value());
  CHECK(d->a == q(5));
  CHECK(d->b == q(5));
  CHECK(evaluate_decomposition(*d, Point(2, 0b11)) == q(5));

  const auto empty = decompose(FunctionTable(0, {q(-3)}));
  REQUIRE(empty.has_value());
  CHECK(evaluate_decomposition(*empty, Point(0, 0)) == q(-3));
}

TEST_CASE("decomposability is exactly monotonicity, with exact round-trips") {
  std::mt19937_64 rng(131);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const FunctionTable f =
        round % 2 == 0 ? gen::random_monotone_table(rng, n) : gen::random_rational_table(rng, n);
    const auto d = decompose(f);
    REQUIRE(d.has_value() == is_monotone(f));
    if (!d) continue;
    for (std::uint32_t x = 0; x < f.size(); ++x) {
      CHECK(evaluate_decomposition(*d, Point(n, x)) == f[x]);
    }
    for (const Rational& c : d->lattice_coef) {
      CHECK(d->a <= c);
      CHECK(c <= d->b);
    }
  }
}

TEST_CASE("decomposition evaluation rejects arity mismatches") {
  const auto d = decompose(test::table_of("x1*x2"));
  REQUIRE(d.has_value());
  CHECK_THROWS_AS(evaluate_decomposition(*d, Point(3, 0)), std::invalid_argument);
}
