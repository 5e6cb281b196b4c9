#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbfa/function_table.hpp"

namespace pbfa {

/// A symmetric function of arity n as its value sequence alpha_0..alpha_n:
/// f(x) = alpha_{|x|}.
struct SymmetricSequence {
  std::vector<Rational> alpha;  // length arity + 1

  int arity() const noexcept { return static_cast<int>(alpha.size()) - 1; }

  friend bool operator==(const SymmetricSequence&, const SymmetricSequence&) = default;
};

/// The sequence of f when f is invariant under all variable permutations
/// (equivalently, depends only on |x|); absent otherwise.
std::optional<SymmetricSequence> detect_symmetric(const FunctionTable& f);

FunctionTable seq_to_function(const SymmetricSequence& s);

/// Sequence-level lattice derivatives: adjacent minima (resp. maxima),
/// alpha_0 ^ alpha_1, ..., alpha_{n-1} ^ alpha_n. Unlike the table-level
/// operators these drop the inessential variable, so the result has arity
/// n-1; requires arity >= 1.
SymmetricSequence seq_meet(const SymmetricSequence& s);
SymmetricSequence seq_join(const SymmetricSequence& s);

/// Largest p such that every window of p+1 consecutive entries is
/// nondecreasing or nonincreasing; equals the degree of local monotonicity
/// of seq_to_function(s). Runs in O(n) over the signs of consecutive
/// differences.
int seq_local_monotonicity_degree(const SymmetricSequence& s);

/// The 0,0,1...1,0...0,1,1,1 family (p ones then p zeros), arity 2p+4,
/// which is exactly p-locally monotone while both sequence derivatives are
/// exactly (p-1)-locally monotone. Requires p >= 2.
SymmetricSequence staircase(int p);

/// Parses a comma-separated value list, e.g. "0,0,1,1,0,0,1,1,1".
SymmetricSequence parse_sequence(std::string_view text);
std::string format_sequence(const SymmetricSequence& s);

}  // namespace pbfa
