#include "pbfa/games.hpp"

#include <algorithm>
#include <stdexcept>

#include "pbfa/bit_table.hpp"
#include "pbfa/calculus.hpp"

namespace pbfa {

Rational worth(const FunctionTable& f, const SubsetMask& coalition) {
  return evaluate(f, coalition.characteristic());
}

Rational marginal_contribution(const FunctionTable& f, int k, const SubsetMask& coalition) {
  return evaluate(delta(f, k), coalition.characteristic());
}

namespace {

void check_players_distinct(const AskOrder& order) {
  std::uint32_t seen = 0;
  for (const AskedPlayer& p : order) {
    const std::uint32_t bit = 1u << (p.index - 1);
    if (seen & bit) throw std::invalid_argument("player " + std::to_string(p.index) + " is asked twice");
    seen |= bit;
  }
}

template <typename Table>
Table apply_order(const Table& f, const AskOrder& order) {
  Table g = f;
  for (const AskedPlayer& p : order) {
    g = p.role == PlayerRole::Benevolent ? join_derivative(g, p.index) : meet_derivative(g, p.index);
  }
  return g;
}

}  // namespace

Rational sequential_outcome(const FunctionTable& f, const SubsetMask& coalition, const AskOrder& order) {
  if (coalition.arity() != f.arity()) throw std::invalid_argument("sequential_outcome: arity mismatch");
  for (const AskedPlayer& p : order) detail::check_index(p.index, f.arity());
  check_players_distinct(order);
  return evaluate(apply_order(f, order), coalition.characteristic());
}

OutcomeRange extremal_outcomes(const FunctionTable& f, const std::vector<AskedPlayer>& players,
                               const SubsetMask& coalition) {
  AskOrder malevolent_first;
  AskOrder benevolent_first;
  for (const AskedPlayer& p : players) {
    if (p.role == PlayerRole::Malevolent) malevolent_first.push_back(p);
  }
  for (const AskedPlayer& p : players) {
    if (p.role == PlayerRole::Benevolent) malevolent_first.push_back(p);
  }
  for (auto it = malevolent_first.rbegin(); it != malevolent_first.rend(); ++it) {
    benevolent_first.push_back(*it);
  }
  return OutcomeRange{sequential_outcome(f, coalition, malevolent_first),
                      sequential_outcome(f, coalition, benevolent_first)};
}

bool order_irrelevant(const FunctionTable& f, const SubsetMask& players) {
  if (players.arity() != f.arity()) throw std::invalid_argument("order_irrelevant: arity mismatch");
  const std::vector<int> member = players.elements();
  const int p = static_cast<int>(member.size());
  if (p > 7) throw std::invalid_argument("order_irrelevant enumerates all orders and is capped at 7 players");
  if (p < 2) return true;
  const std::optional<BitTable> bits = BitTable::from_table(f);
  // Comparing composed derivative tables covers every coalition at once.
  const auto run = [&](const auto& table) {
    const std::uint32_t assignments = 1u << p;
    for (std::uint32_t a = 0; a < assignments; ++a) {
      AskOrder order;
      order.reserve(p);
      for (int i = 0; i < p; ++i) {
        order.push_back(AskedPlayer{member[i],
                                    (a >> i) & 1u ? PlayerRole::Benevolent : PlayerRole::Malevolent});
      }
      std::sort(order.begin(), order.end(),
                [](const AskedPlayer& x, const AskedPlayer& y) { return x.index < y.index; });
      const auto reference = apply_order(table, order);
      while (std::next_permutation(order.begin(), order.end(), [](const AskedPlayer& x, const AskedPlayer& y) {
        return x.index < y.index;
      })) {
        if (!(apply_order(table, order) == reference)) return false;
      }
    }
    return true;
  };
  return bits ? run(*bits) : run(f);
}

}  // namespace pbfa
