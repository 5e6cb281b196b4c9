#include <benchmark/benchmark.h>

#include <random>

#include "pbfa/bit_table.hpp"
#include "pbfa/calculus.hpp"
#include "pbfa/monotonicity.hpp"
#include "pbfa/permutability.hpp"
#include "pbfa/polynomial.hpp"
#include "pbfa/reconstruction.hpp"
#include "pbfa/sweep.hpp"

using namespace pbfa;

namespace {

FunctionTable random_table(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return gen::random_rational_table(rng, n);
}

void BM_MeetDerivative(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FunctionTable f = random_table(n, 1);
  for (auto _ : state) {
    FunctionTable g = meet_derivative(f, 1 + n / 2);
    benchmark::DoNotOptimize(g);
  }
  state.SetItemsProcessed(state.iterations() * (1 << n));
}
BENCHMARK(BM_MeetDerivative)->DenseRange(6, 14, 2);

void BM_MeetDerivativeBits(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BitTable f = *BitTable::from_table(gen::prefix_indicator_table(n));
  for (auto _ : state) {
    BitTable g = meet_derivative(f, 1 + n / 2);
    benchmark::DoNotOptimize(g);
  }
  state.SetItemsProcessed(state.iterations() * (1 << n));
}
BENCHMARK(BM_MeetDerivativeBits)->DenseRange(6, 20, 2);

void BM_LocalMonotonicityDegree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FunctionTable f = gen::prefix_indicator_table(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(local_monotonicity_degree(f).degree);
  }
}
BENCHMARK(BM_LocalMonotonicityDegree)->DenseRange(4, 12, 2);

void BM_MaxPermutability(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FunctionTable f = gen::prefix_indicator_table(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_permutability_degree(f).max_p);
  }
}
BENCHMARK(BM_MaxPermutability)->DenseRange(4, 10, 2);

void BM_MobiusRoundtrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FunctionTable f = random_table(n, 2);
  for (auto _ : state) {
    FunctionTable g = to_table(poly_from_table(f));
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_MobiusRoundtrip)->DenseRange(4, 12, 2);

void BM_Reconstruct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DerivativeProfile profile = profile_of(random_table(n, 3));
  for (auto _ : state) {
    ReconstructionResult r = reconstruct(profile);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Reconstruct)->DenseRange(4, 10, 2);

void BM_SectionScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(4);
  const FunctionTable f = gen::random_boolean_table(rng, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_p_locally_monotone(f, 2).holds);
  }
}
BENCHMARK(BM_SectionScan)->DenseRange(6, 12, 2);

}  // namespace

BENCHMARK_MAIN();
