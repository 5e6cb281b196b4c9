#include <doctest.h>

#include <bit>
#include <random>

#include "pbfa/calculus.hpp"
#include "pbfa/monotonicity.hpp"
#include "pbfa/sweep.hpp"
#include "support.hpp"

using namespace pbfa;
using test::q;
using test::table;

namespace {

int hamming_off(const Point& x, const Point& y, int k) {
  return std::popcount((x.bits() ^ y.bits()) & ~(1u << (k - 1)));
}

bool witness_valid(const FunctionTable& f, const SignViolation& w, int p) {
  const FunctionTable d = delta(f, w.k);
  return d[w.x.bits()].sign() * d[w.y.bits()].sign() < 0 && hamming_off(w.x, w.y, w.k) < p;
}

}  // namespace

TEST_CASE("per-variable monotonicity classification") {
  const FunctionTable f = test::table_of("x1 - x1*x2 + x2*x3");
  CHECK(variable_monotonicity(f, 1) == VariableMonotonicity::Isotone);
  CHECK(variable_monotonicity(f, 2) == VariableMonotonicity::Neither);
  CHECK(variable_monotonicity(f, 3) == VariableMonotonicity::Isotone);
  CHECK(variable_monotonicity(test::table_of("x1*x2"), 1) == VariableMonotonicity::Isotone);
  CHECK(variable_monotonicity(test::table_of("1 - x1"), 1) == VariableMonotonicity::Antitone);
  CHECK(variable_monotonicity(FunctionTable::constant(2, q(3)), 1) == VariableMonotonicity::Constant);
  CHECK(variable_monotonicity(test::example_1243(), 1) == VariableMonotonicity::Neither);
}

TEST_CASE("monotone means no derivative changes sign") {
  CHECK_FALSE(is_monotone(table(2, {0, 1, 1, 0})));
  CHECK(is_monotone(FunctionTable::constant(3, q(2))));
  CHECK(is_monotone(test::table_of("x1 - x1*x2")));  // isotone in 1, antitone in 2
  CHECK_FALSE(is_monotone(gen::prefix_indicator_table(3)));
  CHECK(is_monotone(FunctionTable(0, {q(4)})));
}

TEST_CASE("p-local monotonicity of the worked examples") {
  const FunctionTable xor2 = table(2, {0, 1, 1, 0});
  CHECK_FALSE(is_p_locally_monotone(xor2, 2).holds);
  CHECK(is_p_locally_monotone(xor2, 1).holds);

  const FunctionTable f = test::table_of("x1 - x1*x2 + x2*x3");
  CHECK(is_p_locally_monotone(f, 2).holds);
  CHECK_FALSE(is_p_locally_monotone(f, 3).holds);
  CHECK(witness_valid(f, *is_p_locally_monotone(f, 3).witness, 3));

  // The prefix family breaks at p = 3 with the documented sign change.
  for (int n = 3; n <= 6; ++n) {
    const FunctionTable fn = gen::prefix_indicator_table(n);
    const LocalMonotonicityCheck check = is_p_locally_monotone(fn, 3);
    CHECK_FALSE(check.holds);
    CHECK(witness_valid(fn, *check.witness, 3));
    CHECK(delta(fn, 2)[0] == q(-1));
    CHECK(delta(fn, 2)[0b101] == q(1));
  }
  CHECK_THROWS_AS(is_p_locally_monotone(f, 0), std::out_of_range);
  CHECK_THROWS_AS(is_p_locally_monotone(f, 4), std::out_of_range);
}

TEST_CASE("degree of local monotonicity") {
  CHECK(local_monotonicity_degree(test::table_of("x1*x2 + x3")).degree == 3);
  CHECK(local_monotonicity_degree(test::table_of("x1 - x1*x2 + x2*x3")).degree == 2);
  CHECK(local_monotonicity_degree(table(2, {0, 1, 1, 0})).degree == 1);
  CHECK(local_monotonicity_degree(table(2, {1, 0, 0, 1})).degree == 1);
  CHECK(local_monotonicity_degree(FunctionTable(0, {q(1)})).degree == 0);
  CHECK(local_monotonicity_degree(test::example_1243()).degree == 1);

  // Parity of any arity is not even 2-locally monotone.
  FunctionTable parity(4);
  for (std::uint32_t x = 0; x < parity.size(); ++x) parity[x] = q(std::popcount(x) % 2);
  CHECK(local_monotonicity_degree(parity).degree == 1);

  const LocalMonotonicityReport report = local_monotonicity_degree(test::table_of("x1 - x1*x2 + x2*x3"));
  REQUIRE(report.witness.has_value());
  CHECK(witness_valid(test::table_of("x1 - x1*x2 + x2*x3"), *report.witness, report.degree + 1));
}

TEST_CASE("section scan agrees with the definition scan") {
  std::mt19937_64 rng(47);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const FunctionTable f =
        round % 2 == 0 ? gen::random_rational_table(rng, n) : gen::random_boolean_table(rng, n);
    for (int p = 1; p <= n; ++p) {
      const LocalMonotonicityCheck a = is_p_locally_monotone(f, p);
      const LocalMonotonicityCheck b = is_p_locally_monotone_by_definition(f, p);
      REQUIRE(a.holds == b.holds);
      if (!a.holds) {
        CHECK(witness_valid(f, *a.witness, p));
        CHECK(witness_valid(f, *b.witness, p));
      }
    }
  }
}

TEST_CASE("lipschitz violations exist exactly for non-2-local Boolean tables") {
  const FunctionTable xor2 = table(2, {0, 1, 1, 0});
  const auto witness = lipschitz_violation(xor2);
  REQUIRE(witness.has_value());
  // |d_k f(x) - d_k f(y)| must exceed the off-k Hamming distance.
  const FunctionTable d = delta(xor2, witness->k);
  CHECK(abs(d[witness->x.bits()] - d[witness->y.bits()]) > q(hamming_off(witness->x, witness->y, witness->k)));

  CHECK_FALSE(lipschitz_violation(test::table_of("x1*x2")).has_value());
  CHECK_FALSE(lipschitz_violation(gen::prefix_indicator_table(4)).has_value());
  CHECK_THROWS_AS(lipschitz_violation(test::example_1243()), std::invalid_argument);
}

TEST_CASE("forbidden binary sections on Boolean tables are XOR or XNOR") {
  // x1 xor x2, padded with an inessential third variable.
  const FunctionTable padded = to_table(parse_expression("x1 + x2 - 2*x1*x2").extended(3));
  const auto sections = forbidden_binary_sections(padded);
  REQUIRE(sections.size() == 2);  // one per base point of x3
  CHECK(sections[0].j == 1);
  CHECK(sections[0].k == 2);
  CHECK(sections[0].kind == SectionDefectKind::Xor);
  CHECK(sections[0].base == Point(3, 0b000));
  CHECK(sections[1].base == Point(3, 0b100));

  CHECK(forbidden_binary_sections(test::table_of("x1*x2 + x3")).empty());
  CHECK(forbidden_binary_sections(table(2, {1, 0, 0, 1}))[0].kind == SectionDefectKind::Xnor);
}

TEST_CASE("forbidden binary sections on rational tables violate the coefficient bound") {
  const auto sections = forbidden_binary_sections(test::example_1243());
  REQUIRE(sections.size() == 1);
  CHECK(sections[0].kind == SectionDefectKind::CoefficientCondition);
  CHECK(sections[0].a1 == q(1));
  CHECK(sections[0].a2 == q(3));
  CHECK(sections[0].a12 == q(-2));
  CHECK(sections[0].a1 * (sections[0].a1 + sections[0].a12) == q(-1));

  std::mt19937_64 rng(53);
  for (int round = 0; round < 150; ++round) {
    const FunctionTable f = gen::random_rational_table(rng, 2 + static_cast<int>(rng() % 3));
    CHECK(forbidden_binary_sections(f).empty() == is_p_locally_monotone(f, 2).holds);
  }
}

TEST_CASE("degree is invariant under scaling, shifting and negation") {
  std::mt19937_64 rng(59);
  for (int round = 0; round < 100; ++round) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const FunctionTable f = gen::random_rational_table(rng, n);
    const int d = local_monotonicity_degree(f).degree;
    CHECK(local_monotonicity_degree(affine_transform(f, q(-2), q(7))).degree == d);
    CHECK(local_monotonicity_degree(affine_transform(f, q(1, 3), q(-1))).degree == d);
    const SubsetMask s(n, static_cast<std::uint32_t>(rng()) & ((1u << n) - 1u));
    CHECK(local_monotonicity_degree(negate_variables(f, s)).degree == d);
  }
}

TEST_CASE("every section of a p-locally monotone table stays p-locally monotone") {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 60; ++round) {
    const int n = 3 + static_cast<int>(rng() % 2);
    const FunctionTable f = gen::random_rational_table(rng, n);
    const int d = local_monotonicity_degree(f).degree;
    const int p = std::min(d, n - 1);
    if (p < 1) continue;
    for_each_section(f, p, [&](const SubsetMask&, const Point&, const FunctionTable& g) {
      CHECK(is_monotone(g));  // p-ary sections of a p-locally monotone table
    });
  }
}
