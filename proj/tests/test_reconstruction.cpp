#include <doctest.h>

#include <bit>
#include <random>

#include <nlohmann/json.hpp>

#include "pbfa/reconstruction.hpp"
#include "pbfa/sweep.hpp"
#include "support.hpp"

using namespace pbfa;
using test::q;
using test::table;

namespace {

FunctionTable parity_table(int n, const Rational& even, const Rational& odd) {
  FunctionTable f(n);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    f[x] = std::popcount(x) % 2 == 0 ? even : odd;
  }
  return f;
}

}  // namespace

TEST_CASE("profiles collect all lattice derivatives") {
  const DerivativeProfile p = profile_of(parity_table(2, q(0), q(1)));
  REQUIRE(p.arity == 2);
  CHECK(p.meet[0] == FunctionTable(2));
  CHECK(p.meet[1] == FunctionTable(2));
  CHECK(p.join[0] == FunctionTable::constant(2, q(1)));
  CHECK(p.join[1] == FunctionTable::constant(2, q(1)));

  const FunctionTable c = FunctionTable::constant(2, q(5));
  const DerivativeProfile pc = profile_of(c);
  CHECK(pc.meet[0] == c);
  CHECK(pc.join[1] == c);

  const DerivativeProfile pe = profile_of(test::example_1243());
  CHECK(pe.meet[0] == table(2, {1, 1, 3, 3}));
  CHECK(pe.join[0] == table(2, {2, 2, 4, 4}));
  CHECK(pe.meet[1] == table(2, {1, 2, 1, 2}));
  CHECK(pe.join[1] == table(2, {4, 3, 4, 3}));
  CHECK(verify_profile(test::example_1243(), pe));
  CHECK_FALSE(verify_profile(FunctionTable(2), pe));
}

TEST_CASE("parity-type functions reconstruct to the two-element ambiguity class") {
  const auto result = reconstruct(profile_of(parity_table(3, q(0), q(1))));
  const auto* pair = std::get_if<ParityPair>(&result);
  REQUIRE(pair != nullptr);
  CHECK(pair->even_value == q(0));
  CHECK(pair->odd_value == q(1));

  // Both members of the pair verify against the same profile.
  const DerivativeProfile profile = profile_of(parity_table(3, q(2), q(-1)));
  CHECK(verify_profile(parity_table(3, q(-1), q(2)), profile));
  CHECK(verify_profile(parity_table(3, q(2), q(-1)), profile));
  const auto swapped = reconstruct(profile);
  REQUIRE(std::holds_alternative<ParityPair>(swapped));
  CHECK(std::get<ParityPair>(swapped).even_value == q(-1));
  CHECK(std::get<ParityPair>(swapped).odd_value == q(2));
}

TEST_CASE("everything else reconstructs uniquely") {
  const auto constant = reconstruct(profile_of(FunctionTable::constant(3, q(5))));
  REQUIRE(std::holds_alternative<FunctionTable>(constant));
  CHECK(std::get<FunctionTable>(constant) == FunctionTable::constant(3, q(5)));

  const auto example = reconstruct(profile_of(test::example_1243()));
  REQUIRE(std::holds_alternative<FunctionTable>(example));
  CHECK(std::get<FunctionTable>(example) == test::example_1243());

  // Exhaustive over the 16 binary Boolean functions: 14 unique, 2 parity.
  int unique = 0, parity = 0;
  for (std::uint32_t bits = 0; bits < 16; ++bits) {
    const FunctionTable f = table(2, {(bits >> 0) & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1});
    const auto result = reconstruct(profile_of(f));
    if (const auto* u = std::get_if<FunctionTable>(&result)) {
      CHECK(*u == f);
      ++unique;
    } else if (std::holds_alternative<ParityPair>(result)) {
      ++parity;
    }
  }
  CHECK(unique == 14);
  CHECK(parity == 2);
}

TEST_CASE("random tables round-trip through their profiles") {
  std::mt19937_64 rng(83);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const FunctionTable f =
        round % 2 == 0 ? gen::random_rational_table(rng, n) : gen::random_boolean_table(rng, n);
    const auto result = reconstruct(profile_of(f));
    if (const auto* u = std::get_if<FunctionTable>(&result)) {
      CHECK(*u == f);
    } else {
      REQUIRE(std::holds_alternative<ParityPair>(result));
      const auto& pair = std::get<ParityPair>(result);
      CHECK((f == parity_table(n, pair.even_value, pair.odd_value) ||
             f == parity_table(n, pair.odd_value, pair.even_value)));
    }
  }
}

TEST_CASE("inconsistent profiles are classified with a witness") {
  // Meet above join.
  DerivativeProfile bad = profile_of(table(2, {0, 1, 1, 0}));
  bad.meet[0] = FunctionTable::constant(2, q(9));
  const auto breach = reconstruct(bad);
  REQUIRE(std::holds_alternative<InconsistencyWitness>(breach));
  CHECK(std::get<InconsistencyWitness>(breach).kind == InconsistencyWitness::Kind::InvariantBreach);

  // A derivative that depends on its own variable.
  DerivativeProfile self = profile_of(FunctionTable::constant(1, q(0)));
  self.join[0] = FunctionTable(1, {q(0), q(1)});
  const auto self_result = reconstruct(self);
  REQUIRE(std::holds_alternative<InconsistencyWitness>(self_result));
  CHECK(std::get<InconsistencyWitness>(self_result).kind == InconsistencyWitness::Kind::InvariantBreach);

  // Two incident edges demanding disjoint pairs.
  DerivativeProfile disjoint;
  disjoint.arity = 2;
  disjoint.meet = {FunctionTable::constant(2, q(0)), FunctionTable::constant(2, q(5))};
  disjoint.join = {FunctionTable::constant(2, q(1)), FunctionTable::constant(2, q(6))};
  const auto empty = reconstruct(disjoint);
  REQUIRE(std::holds_alternative<InconsistencyWitness>(empty));
  CHECK(std::get<InconsistencyWitness>(empty).kind == InconsistencyWitness::Kind::EmptyIntersection);

  CHECK_THROWS_AS(reconstruct(DerivativeProfile{}), std::invalid_argument);
  DerivativeProfile short_profile = profile_of(FunctionTable(2));
  short_profile.join.pop_back();
  CHECK_THROWS_AS(reconstruct(short_profile), std::invalid_argument);
}

TEST_CASE("single perturbations never produce a silently wrong reconstruction") {
  std::mt19937_64 rng(89);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const FunctionTable f =
        round % 2 == 0 ? gen::random_boolean_table(rng, n) : gen::random_rational_table(rng, n);
    DerivativeProfile profile = profile_of(f);
    const int k = 1 + static_cast<int>(rng() % n);
    FunctionTable& target = (rng() & 1u) ? profile.meet[k - 1] : profile.join[k - 1];
    target[static_cast<std::uint32_t>(rng()) & ((1u << n) - 1u)] += (rng() & 1u) ? q(2) : q(-1, 2);

    const auto result = reconstruct(profile);
    if (const auto* u = std::get_if<FunctionTable>(&result)) {
      CHECK(verify_profile(*u, profile));  // reconstruct must have post-verified
      CHECK_FALSE(*u == f);
    } else if (const auto* pair = std::get_if<ParityPair>(&result)) {
      CHECK(verify_profile(parity_table(n, pair->even_value, pair->odd_value), profile));
    } else {
      CHECK(std::holds_alternative<InconsistencyWitness>(result));
    }
  }
}

TEST_CASE("profile JSON round-trips") {
  const DerivativeProfile p = profile_of(test::example_1243());
  const nlohmann::json j = profile_to_json(p);
  CHECK(j["arity"] == 2);
  CHECK(j["meet"].size() == 2);
  CHECK(profile_from_json(j) == p);
  CHECK_THROWS_AS(profile_from_json(nlohmann::json{{"arity", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(
      profile_from_json(nlohmann::json{{"arity", 2}, {"meet", {1, 2}}, {"join", {1, 2}}}),
      std::invalid_argument);
}
