#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pbfa/function_table.hpp"

namespace pbfa {

/// The complete family of lattice derivatives of a function: for every
/// variable k, its meet derivative and join derivative (each of the full
/// arity, with variable k inessential).
struct DerivativeProfile {
  int arity = 0;
  std::vector<FunctionTable> meet;  // index k-1
  std::vector<FunctionTable> join;

  friend bool operator==(const DerivativeProfile&, const DerivativeProfile&) = default;
};

DerivativeProfile profile_of(const FunctionTable& f);

/// True iff profile_of(f) equals the given profile exactly.
bool verify_profile(const FunctionTable& f, const DerivativeProfile& profile);

/// The two-function ambiguity class: f(x) = even_value when |x| is even and
/// odd_value otherwise, together with its swap. Both have exactly this
/// profile; they are the only functions that share one. Reported with
/// even_value < odd_value.
struct ParityPair {
  Rational even_value;
  Rational odd_value;
};

/// Why a profile cannot come from any function.
struct InconsistencyWitness {
  enum class Kind {
    InvariantBreach,       // meet above join somewhere, or a derivative depends on its own variable
    EmptyIntersection,     // two incident edges demand disjoint value pairs
    PropagationConflict,   // an edge contradicts already-placed values
    VerificationMismatch,  // the propagated table fails the full profile check
  };
  Kind kind = Kind::InvariantBreach;
  int k = 0;        // edge direction involved, 0 if not edge-specific
  Point point{0, 0};
  std::string detail;
};

using ReconstructionResult = std::variant<FunctionTable, ParityPair, InconsistencyWitness>;

/// Recovers the function from its derivative profile. Every edge of the
/// cube yields the unordered pair of endpoint values {meet_k(x), join_k(x)};
/// a singleton edge or a vertex joining two distinct pairs anchors one
/// value, which then propagates over the connected cube graph and is
/// verified against the whole profile. If no anchor exists, every edge
/// carries the same two-element pair and the profile belongs exactly to a
/// ParityPair. Requires arity >= 1 (an empty profile determines nothing).
ReconstructionResult reconstruct(const DerivativeProfile& profile);

/// JSON form: {"arity": n, "meet": [[...], ...], "join": [[...], ...]} with
/// one value array per variable, entries as exact strings.
DerivativeProfile profile_from_json(const nlohmann::json& j);
nlohmann::json profile_to_json(const DerivativeProfile& profile);

}  // namespace pbfa
