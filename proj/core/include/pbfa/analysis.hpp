#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pbfa/decomposition.hpp"
#include "pbfa/function_table.hpp"
#include "pbfa/monotonicity.hpp"
#include "pbfa/permutability.hpp"
#include "pbfa/symmetric.hpp"

namespace pbfa {

/// Aggregated findings for one function: everything the analyze command
/// reports. Witnesses and counterexamples re-verify against the library.
struct AnalysisReport {
  std::string source;
  int arity = 0;
  bool boolean = false;
  SubsetMask essential{0, 0};
  bool monotone = false;
  LocalMonotonicityReport locality;
  PermutabilityReport permutability;
  std::optional<SymmetricSequence> symmetric;
  std::vector<ForbiddenSection> forbidden_sections;
  std::optional<PseudoPolynomialDecomposition> decomposition;
};

AnalysisReport analyze(const FunctionTable& f, std::string source);

nlohmann::json to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

nlohmann::json to_json(const SignViolation& witness);
nlohmann::json to_json(const PermutabilityCounterexample& ce);
nlohmann::json to_json(const PseudoPolynomialDecomposition& d);

std::string role_name(VariableMonotonicity m);

}  // namespace pbfa
