#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pbfa/function_table.hpp"
#include "pbfa/symmetric.hpp"

namespace pbfa {

struct SweepOptions {
  int max_arity = 4;       // exhaustive Boolean populations go up to this arity (hard cap 4)
  int samples = 1000;      // budget for randomized populations
  std::uint64_t seed = 0;  // results are deterministic given the seed
};

struct SweepResult {
  std::string claim;
  std::string population;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::optional<std::string> counterexample;  // first failure; enumeration stops there
  double seconds = 0.0;

  bool ok() const { return checked == passed && !counterexample; }
};

/// Registered claim names, in report order. Each claim checks one result
/// over an exhaustive and/or seeded random population and reports the
/// first counterexample found, if any.
const std::vector<std::string>& sweep_claim_names();

/// Runs one claim. Throws std::invalid_argument for unknown names or
/// max_arity > 4.
SweepResult run_sweep_claim(std::string_view name, const SweepOptions& options);

/// Runs the given claims (all of them when empty), in registry order.
std::vector<SweepResult> run_sweeps(const std::vector<std::string>& names, const SweepOptions& options);

/// Deterministic generators shared by the sweeps and the test suites.
namespace gen {

/// Values are num/den with num in [-6, 6] and den in [1, 4].
FunctionTable random_rational_table(std::mt19937_64& rng, int arity);
FunctionTable random_boolean_table(std::mt19937_64& rng, int arity);

/// Random monotone table: an isotone closure (running max over the subset
/// order) with a random subset of variables negated afterwards.
FunctionTable random_monotone_table(std::mt19937_64& rng, int arity);

SymmetricSequence random_sequence(std::mt19937_64& rng, int arity, bool boolean);

/// The Boolean function that is 1 exactly on the prefix tuples
/// (1,...,1,0,...,0); exactly 2-locally monotone for arity >= 3 yet has
/// fully permutable lattice derivatives.
FunctionTable prefix_indicator_table(int arity);

}  // namespace gen

}  // namespace pbfa
