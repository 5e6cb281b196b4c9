#pragma once

#include <vector>

#include "pbfa/function_table.hpp"

namespace pbfa {

/// A benevolent player joins or leaves the coalition only when that raises
/// the worth (join derivative); a malevolent player does the opposite
/// (meet derivative).
enum class PlayerRole { Benevolent, Malevolent };

struct AskedPlayer {
  int index = 0;
  PlayerRole role = PlayerRole::Benevolent;
};

/// Players in the order they are asked; the first player's derivative is
/// applied first (innermost). With this convention asking the malevolent
/// players first yields the least outcome, see extremal_outcomes.
using AskOrder = std::vector<AskedPlayer>;

/// Worth of coalition C: f at the characteristic point of C.
Rational worth(const FunctionTable& f, const SubsetMask& coalition);

/// Marginal contribution of player k to coalition C: the discrete partial
/// derivative at the characteristic point (independent of whether k is
/// already in C).
Rational marginal_contribution(const FunctionTable& f, int k, const SubsetMask& coalition);

/// Outcome when the listed players (pairwise distinct) decide one by one
/// whether to join coalition C, each applying their role's derivative.
Rational sequential_outcome(const FunctionTable& f, const SubsetMask& coalition, const AskOrder& order);

struct OutcomeRange {
  Rational least;     // malevolent players asked first
  Rational greatest;  // benevolent players asked first
};

/// Extremal outcomes over all ask orders of the given players; every
/// interleaving lands between the two.
OutcomeRange extremal_outcomes(const FunctionTable& f, const std::vector<AskedPlayer>& players,
                               const SubsetMask& coalition);

/// True iff for every role assignment on the players of P, every ask order
/// yields the same outcome for every coalition. Holds for all p-subsets P
/// exactly when f has p-permutable lattice derivatives. Enumerates all
/// orders, so |P| is capped at 7.
bool order_irrelevant(const FunctionTable& f, const SubsetMask& players);

}  // namespace pbfa
