#include <doctest.h>

#include <algorithm>
#include <random>

#include "pbfa/games.hpp"
#include "pbfa/permutability.hpp"
#include "pbfa/sweep.hpp"
#include "support.hpp"

using namespace pbfa;
using test::q;
using test::table;

TEST_CASE("coalition worth evaluates at the characteristic point") {
  const FunctionTable f = test::example_1243();
  CHECK(worth(f, SubsetMask(2, 0b10)) == q(4));  // {2}
  CHECK(worth(f, SubsetMask::empty(2)) == q(1));
  CHECK(worth(FunctionTable::constant(3, q(7)), SubsetMask::empty(3)) == q(7));
  CHECK(worth(test::table_of("x1*x2*x3"), SubsetMask::full(3)) == q(1));
}

TEST_CASE("marginal contributions are the discrete derivative at the coalition") {
  const FunctionTable f = test::table_of("x1 - x1*x2 + x2*x3");
  CHECK(marginal_contribution(f, 2, SubsetMask(3, 0b100)) == q(1));   // C = {3}
  CHECK(marginal_contribution(f, 2, SubsetMask::empty(3)) == q(0));
  CHECK(marginal_contribution(f, 2, SubsetMask(3, 0b001)) == q(-1));  // C = {1}
  // Membership of the player in C is irrelevant.
  CHECK(marginal_contribution(f, 2, SubsetMask(3, 0b011)) == marginal_contribution(f, 2, SubsetMask(3, 0b001)));
  CHECK(marginal_contribution(FunctionTable::constant(2, q(3)), 1, SubsetMask::empty(2)) == q(0));
}

TEST_CASE("sequential outcomes apply the first-asked player's derivative first") {
  const FunctionTable f = test::example_1243();
  const AskOrder order{{1, PlayerRole::Malevolent}, {2, PlayerRole::Benevolent}};
  CHECK(sequential_outcome(f, SubsetMask::empty(2), order) == q(3));

  // A single benevolent player is just the join derivative.
  CHECK(sequential_outcome(f, SubsetMask(2, 0b10), {{1, PlayerRole::Benevolent}}) == q(4));
  CHECK(sequential_outcome(f, SubsetMask(2, 0b10), {}) == worth(f, SubsetMask(2, 0b10)));

  CHECK_THROWS_AS(sequential_outcome(f, SubsetMask::empty(2),
                                     AskOrder{{1, PlayerRole::Benevolent}, {1, PlayerRole::Malevolent}}),
                  std::invalid_argument);
}

TEST_CASE("extremal outcomes of the worked examples") {
  const FunctionTable xor2 = table(2, {0, 1, 1, 0});
  const std::vector<AskedPlayer> mixed{{1, PlayerRole::Malevolent}, {2, PlayerRole::Benevolent}};
  const OutcomeRange range = extremal_outcomes(xor2, mixed, SubsetMask::empty(2));
  CHECK(range.least == q(0));
  CHECK(range.greatest == q(1));

  const OutcomeRange example = extremal_outcomes(test::example_1243(), mixed, SubsetMask::empty(2));
  CHECK(example.least == q(3));
  CHECK(example.greatest == q(3));
}

TEST_CASE("monotone games have order-independent outcomes") {
  std::mt19937_64 rng(109);
  for (int round = 0; round < 40; ++round) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const FunctionTable f = gen::random_monotone_table(rng, n);
    std::vector<AskedPlayer> players;
    for (int k = 1; k <= n; ++k) {
      players.push_back(AskedPlayer{k, (rng() & 1u) ? PlayerRole::Benevolent : PlayerRole::Malevolent});
    }
    const SubsetMask coalition(n, static_cast<std::uint32_t>(rng()) & ((1u << n) - 1u));
    const OutcomeRange range = extremal_outcomes(f, players, coalition);
    CHECK(range.least == range.greatest);
  }
}

TEST_CASE("every interleaving lies between the extremal outcomes") {
  std::mt19937_64 rng(113);
  for (int round = 0; round < 60; ++round) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const FunctionTable f = gen::random_rational_table(rng, n);
    std::vector<int> indices(n);
    for (int k = 0; k < n; ++k) indices[k] = k + 1;
    std::shuffle(indices.begin(), indices.end(), rng);
    const int count = 1 + static_cast<int>(rng() % std::min(n, 4));
    std::vector<AskedPlayer> players;
    for (int i = 0; i < count; ++i) {
      players.push_back(
          AskedPlayer{indices[i], (rng() & 1u) ? PlayerRole::Benevolent : PlayerRole::Malevolent});
    }
    const SubsetMask coalition(n, static_cast<std::uint32_t>(rng()) & ((1u << n) - 1u));
    const OutcomeRange range = extremal_outcomes(f, players, coalition);

    std::sort(players.begin(), players.end(),
              [](const AskedPlayer& a, const AskedPlayer& b) { return a.index < b.index; });
    AskOrder order(players.begin(), players.end());
    Rational least = range.greatest;
    Rational greatest = range.least;
    do {
      const Rational outcome = sequential_outcome(f, coalition, order);
      CHECK(range.least <= outcome);
      CHECK(outcome <= range.greatest);
      least = min(least, outcome);
      greatest = max(greatest, outcome);
    } while (std::next_permutation(order.begin(), order.end(),
                                   [](const AskedPlayer& a, const AskedPlayer& b) { return a.index < b.index; }));
    CHECK(least == range.least);
    CHECK(greatest == range.greatest);
  }
}

TEST_CASE("order irrelevance over all p-subsets is exactly p-permutability") {
  std::mt19937_64 rng(127);
  for (int round = 0; round < 40; ++round) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const FunctionTable f =
        round % 2 == 0 ? gen::random_boolean_table(rng, n) : gen::random_rational_table(rng, n);
    for (int p = 2; p <= n; ++p) {
      bool all = true;
      for_each_subset_of_size((1u << n) - 1u, p, [&](std::uint32_t mask) {
        if (all) all = order_irrelevant(f, SubsetMask(n, mask));
      });
      CHECK(all == has_p_permutable_derivatives(f, p).permutable);
    }
  }
  CHECK(order_irrelevant(test::example_1243(), SubsetMask::full(2)));
  CHECK_FALSE(order_irrelevant(table(2, {0, 1, 1, 0}), SubsetMask::full(2)));
  CHECK(order_irrelevant(table(2, {0, 1, 1, 0}), SubsetMask::single(2, 1)));
}
