// Acceptance suite: exercises the worked examples at exact rational
// precision, the exhaustive Boolean sweeps, and the seeded property
// suites, printing one PASS/FAIL line per criterion. Exits nonzero when
// any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pbfa/analysis.hpp"
#include "pbfa/bit_table.hpp"
#include "pbfa/calculus.hpp"
#include "pbfa/decomposition.hpp"
#include "pbfa/expr_parser.hpp"
#include "pbfa/games.hpp"
#include "pbfa/monotonicity.hpp"
#include "pbfa/permutability.hpp"
#include "pbfa/polynomial.hpp"
#include "pbfa/reconstruction.hpp"
#include "pbfa/sweep.hpp"
#include "pbfa/symmetric.hpp"

namespace {

using namespace pbfa;
using Clock = std::chrono::steady_clock;

class Harness {
 public:
  int failures() const { return failures_; }
  double total_seconds() const { return total_seconds_; }

  // Runs one criterion; `body` reports problems through the collector.
  void run(const std::string& id, const std::function<void(std::vector<std::string>&)>& body) {
    std::vector<std::string> problems;
    const auto start = Clock::now();
    try {
      body(problems);
    } catch (const std::exception& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    total_seconds_ += seconds;
    std::ostringstream line;
    line << (problems.empty() ? "[PASS] " : "[FAIL] ") << id << "  (" << seconds << "s)";
    std::cout << line.str() << "\n";
    for (const std::string& p : problems) std::cout << "       " << p << "\n";
    if (!problems.empty()) ++failures_;
  }

  // Runs one sweep claim as a criterion and enforces a time budget.
  double run_sweep(const std::string& id, const std::string& claim, const SweepOptions& options,
                   double budget_seconds) {
    double claimed = 0;
    run(id, [&](std::vector<std::string>& problems) {
      const SweepResult result = run_sweep_claim(claim, options);
      claimed = result.seconds;
      if (!result.ok()) {
        problems.push_back("claim " + claim + ": " + std::to_string(result.passed) + "/" +
                           std::to_string(result.checked) + " passed");
        if (result.counterexample) problems.push_back("counterexample: " + *result.counterexample);
      }
      if (result.seconds > budget_seconds) {
        problems.push_back("took " + std::to_string(result.seconds) + "s, budget " +
                           std::to_string(budget_seconds) + "s");
      }
    });
    return claimed;
  }

 private:
  int failures_ = 0;
  double total_seconds_ = 0;
};

void expect(std::vector<std::string>& problems, bool condition, const std::string& what) {
  if (!condition) problems.push_back(what);
}

FunctionTable binary_example() {
  return FunctionTable(2, {Rational(1), Rational(2), Rational(4), Rational(3)});
}

}  // namespace

int main() {
  Harness h;

  // ---- 1. Worked-example fidelity (exact rational arithmetic) ----

  h.run("1.1 binary example: lattice compositions 3 and 2, sign product -1, 2-permutable, not 2-local",
        [&](std::vector<std::string>& problems) {
          const FunctionTable f = binary_example();
          expect(problems, apply_sequence(f, parse_op_sequence("v2 ^1")) == FunctionTable::constant(2, Rational(3)),
                 "join-after-meet composition should be constant 3");
          expect(problems, apply_sequence(f, parse_op_sequence("^1 v2")) == FunctionTable::constant(2, Rational(3)),
                 "meet-after-join composition should be constant 3");
          expect(problems, apply_sequence(f, parse_op_sequence("v1 ^2")) == FunctionTable::constant(2, Rational(2)),
                 "join-after-meet on swapped variables should be constant 2");
          expect(problems, apply_sequence(f, parse_op_sequence("^2 v1")) == FunctionTable::constant(2, Rational(2)),
                 "meet-after-join on swapped variables should be constant 2");
          const FunctionTable d1 = delta(f, 1);
          expect(problems, d1[0b00] * d1[0b10] == Rational(-1), "d1(x2=0) * d1(x2=1) should be -1");
          expect(problems, has_p_permutable_derivatives(f, 2).permutable, "should be 2-permutable");
          expect(problems, !is_p_locally_monotone(f, 2).holds, "should not be 2-locally monotone");
        });

  h.run("1.2 ternary example: d2 = x3 - x1, second differences 1/0/1, degree exactly 2",
        [&](std::vector<std::string>& problems) {
          const FunctionTable f = to_table(parse_expression("x1 - x1*x2 + x2*x3"));
          expect(problems, delta(f, 2) == to_table(parse_expression("x3 - x1").extended(3)),
                 "d2 should be x3 - x1");
          const auto abs_const = [](const FunctionTable& t, long v) {
            for (std::uint32_t x = 0; x < t.size(); ++x) {
              if (!(abs(t[x]) == Rational(v))) return false;
            }
            return true;
          };
          expect(problems, abs_const(delta2(f, 1, 2), 1), "|d12| should be 1 everywhere");
          expect(problems, abs_const(delta2(f, 1, 3), 0), "|d13| should be 0 everywhere");
          expect(problems, abs_const(delta2(f, 2, 3), 1), "|d23| should be 1 everywhere");
          expect(problems, local_monotonicity_degree(f).degree == 2, "degree should be exactly 2");
          expect(problems, is_p_locally_monotone(f, 2).holds && !is_p_locally_monotone(f, 3).holds,
                 "2-local should hold and 3-local should fail");
        });

  h.run("1.3 binary sum and equivalence: |d12| = 2, degree 1", [&](std::vector<std::string>& problems) {
    const FunctionTable fsum = to_table(parse_expression("x1 + x2 - 2*x1*x2"));
    const FunctionTable feq = to_table(parse_expression("1 - x1 - x2 + 2*x1*x2"));
    for (const FunctionTable* f : {&fsum, &feq}) {
      const FunctionTable dd = delta2(*f, 1, 2);
      for (std::uint32_t x = 0; x < dd.size(); ++x) {
        expect(problems, abs(dd[x]) == Rational(2), "|d12| should be 2 everywhere");
      }
      expect(problems, local_monotonicity_degree(*f).degree == 1, "degree should be 1");
    }
  });

  h.run("1.4 prefix indicator family n = 3..8: degree 2, full permutability, join drops to the predecessor",
        [&](std::vector<std::string>& problems) {
          for (int n = 3; n <= 8; ++n) {
            const auto start = Clock::now();
            const FunctionTable f = gen::prefix_indicator_table(n);
            expect(problems, local_monotonicity_degree(f).degree == 2,
                   "degree should be exactly 2 at n=" + std::to_string(n));
            expect(problems, max_permutability_degree(f).max_p == n,
                   "max permutability should be n at n=" + std::to_string(n));
            expect(problems, delta(f, 2)[0] == Rational(-1), "d2 at the all-zero tuple should be -1");
            expect(problems, delta(f, 2)[0b101] == Rational(1), "d2 at (1,0,1,0,...) should be 1");
            const FunctionTable predecessor = gen::prefix_indicator_table(n - 1);
            for (int k = 1; k <= n; ++k) {
              const FunctionTable dropped =
                  section(join_derivative(f, k), SubsetMask::single(n, k).complement(), Point::zero(n));
              expect(problems, dropped == predecessor,
                     "vk then dropping variable " + std::to_string(k) + " should give the (n-1) member");
            }
            const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
            expect(problems, seconds < 1.0,
                   "n=" + std::to_string(n) + " took " + std::to_string(seconds) + "s, budget 1s");
          }
        });

  h.run("1.5 staircase family p = 2..4: degree p, derivative sequences and degrees p-1, permutability p",
        [&](std::vector<std::string>& problems) {
          for (int p = 2; p <= 4; ++p) {
            const auto start = Clock::now();
            const SymmetricSequence s = staircase(p);
            expect(problems, seq_local_monotonicity_degree(s) == p,
                   "sequence degree should be p=" + std::to_string(p));

            SymmetricSequence meet_expected;
            meet_expected.alpha.assign(2, Rational(0));
            meet_expected.alpha.insert(meet_expected.alpha.end(), p - 1, Rational(1));
            meet_expected.alpha.insert(meet_expected.alpha.end(), p + 1, Rational(0));
            meet_expected.alpha.insert(meet_expected.alpha.end(), 2, Rational(1));
            SymmetricSequence join_expected;
            join_expected.alpha.assign(1, Rational(0));
            join_expected.alpha.insert(join_expected.alpha.end(), p + 1, Rational(1));
            join_expected.alpha.insert(join_expected.alpha.end(), p - 1, Rational(0));
            join_expected.alpha.insert(join_expected.alpha.end(), 3, Rational(1));
            expect(problems, seq_meet(s) == meet_expected, "meet sequence should match the closed form");
            expect(problems, seq_join(s) == join_expected, "join sequence should match the closed form");
            expect(problems, seq_local_monotonicity_degree(seq_meet(s)) == p - 1,
                   "meet sequence degree should be p-1");
            expect(problems, seq_local_monotonicity_degree(seq_join(s)) == p - 1,
                   "join sequence degree should be p-1");

            const FunctionTable f = seq_to_function(s);
            expect(problems, local_monotonicity_degree(f).degree == p, "table degree should be p");
            expect(problems, max_permutability_degree(f).max_p == p, "permutability degree should be p");
            const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
            expect(problems, seconds < 1.0,
                   "p=" + std::to_string(p) + " took " + std::to_string(seconds) + "s, budget 1s");
          }
        });

  // ---- 2. Exhaustive theorem sweeps (n = 4 Boolean block budget: 60 s) ----

  SweepOptions exhaustive;
  exhaustive.max_arity = 4;
  exhaustive.samples = 1000;
  exhaustive.seed = 0;

  double boolean_block = 0;
  boolean_block += h.run_sweep("2.1a Boolean n<=4: 2-locally monotone iff 2-permutable",
                               "boolean-2local-iff-2permutable", exhaustive, 60.0);
  boolean_block += h.run_sweep("2.1b Boolean n<=4 and random: p-locally monotone implies p-permutable",
                               "local-monotonicity-implies-permutability", exhaustive, 60.0);
  boolean_block += h.run_sweep("2.1c Boolean n<=4 and random: (p+1)-permutable implies p-permutable",
                               "permutability-chain", exhaustive, 60.0);
  boolean_block += h.run_sweep("2.1d Boolean n<=4 and random: lattice derivatives lose at most one degree",
                               "derivative-degree-drop", exhaustive, 60.0);
  boolean_block += h.run_sweep("2.1e Boolean n<=4 and random: reconstruction round-trip, 2 parity types per arity",
                               "reconstruction-roundtrip", exhaustive, 60.0);
  boolean_block += h.run_sweep("2.1f binary census: exactly 2 non-monotone functions among 16",
                               "binary-nonmonotone-census", exhaustive, 60.0);
  h.run("2.1g combined Boolean n<=4 sweep block stays under 60s", [&](std::vector<std::string>& problems) {
    expect(problems, boolean_block < 60.0,
           "block took " + std::to_string(boolean_block) + "s, budget 60s");
  });

  h.run_sweep("2.2 section scan vs definition scan agree (exhaustive n<=4; 1000+ random rational n<=6)",
              "local-monotonicity-scan-agreement", exhaustive, 60.0);
  h.run_sweep("2.3 extremal-order check vs full permutation enumeration (exhaustive n<=4; random n<=6, p<=5)",
              "permutability-oracle-agreement", exhaustive, 60.0);

  // ---- 3. Seeded property suites (>= 1000 cases each; block budget 30 s) ----

  SweepOptions property;
  property.max_arity = 3;  // keeps the exhaustive halves light; random budgets carry the load
  property.samples = 1000;
  property.seed = 0;

  double property_block = 0;
  property_block += h.run_sweep("3.1 lattice derivative laws and bounds", "lattice-derivative-laws",
                                property, 30.0);
  property_block += h.run_sweep("3.2a degree invariance under scaling and negation",
                                "local-monotonicity-invariance", property, 30.0);
  property_block += h.run_sweep("3.2b permutability invariance under scaling and negation",
                                "permutability-invariance", property, 30.0);
  property_block += h.run_sweep("3.3a coefficient/value transform round-trip", "mobius-roundtrip",
                                property, 30.0);
  property_block += h.run_sweep("3.3b formal derivative equals table derivative",
                                "formal-derivative-agreement", property, 30.0);
  property_block += h.run_sweep("3.3c expression parser round-trip", "parser-roundtrip", property, 30.0);
  property_block += h.run_sweep("3.4 decomposition exists iff monotone, with exact round-trip",
                                "monotone-iff-pseudo-polynomial", property, 30.0);
  property_block += h.run_sweep("3.5a sequence calculus matches table calculus",
                                "symmetric-derivative-sequences", property, 30.0);
  property_block += h.run_sweep("3.5b symmetric window criterion matches the table degree",
                                "symmetric-window-criterion", property, 30.0);
  property_block += h.run_sweep("3.5c symmetric: local monotonicity degree equals permutability degree",
                                "symmetric-equivalence", property, 30.0);
  property_block += h.run_sweep("3.6a extremal outcomes bound every interleaving",
                                "extremal-outcome-bounds", property, 30.0);
  property_block += h.run_sweep("3.6b order irrelevance over p-subsets iff p-permutability",
                                "order-irrelevance-iff-permutability", property, 30.0);
  h.run("3.7 combined property block stays under 30s", [&](std::vector<std::string>& problems) {
    expect(problems, property_block < 30.0,
           "block took " + std::to_string(property_block) + "s, budget 30s");
  });

  // ---- Remaining registry claims, same exhaustive settings ----

  h.run_sweep("4.1 forbidden-section criterion for 2-local monotonicity (coefficients)",
              "binary-section-criterion", exhaustive, 60.0);
  h.run_sweep("4.2 forbidden-section criterion for Boolean tables (XOR/XNOR)",
              "boolean-xor-section-criterion", exhaustive, 60.0);
  h.run_sweep("4.3 coefficient criterion for 2-permutability", "two-permutability-criterion",
              exhaustive, 60.0);
  h.run_sweep("4.4 permutability via sections of arity p", "permutability-section-characterization",
              exhaustive, 60.0);
  h.run_sweep("4.5 degree nesting and monotone top", "local-monotonicity-nesting", exhaustive, 60.0);
  h.run_sweep("4.6 tampered profiles never reconstruct silently", "profile-tamper-detection",
              exhaustive, 60.0);
  h.run_sweep("4.7 prefix indicator family claims", "prefix-indicator-family", exhaustive, 60.0);
  h.run_sweep("4.8 staircase family claims", "staircase-family", exhaustive, 60.0);

  std::cout << (h.failures() == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(h.failures()))
            << " (total " << h.total_seconds() << "s)\n";
  return h.failures() == 0 ? 0 : 1;
}
