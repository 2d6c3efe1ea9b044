#include <benchmark/benchmark.h>

#include "bench_util.hpp"
#include "phasecomp/phases.hpp"

using namespace phasecomp;

namespace {

void BM_ExtremePhases(benchmark::State& state) {
  std::mt19937_64 rng(21);
  const auto c = bench::sector_member(static_cast<int>(state.range(0)), -0.6, 1.9, rng);
  for (auto _ : state) benchmark::DoNotOptimize(extreme_phases(c));
}
BENCHMARK(BM_ExtremePhases)->RangeMultiplier(2)->Range(4, 64);

void BM_Phases(benchmark::State& state) {
  std::mt19937_64 rng(22);
  const auto c = bench::sector_member(static_cast<int>(state.range(0)), -0.6, 1.9, rng);
  for (auto _ : state) benchmark::DoNotOptimize(phases(c));
}
BENCHMARK(BM_Phases)->RangeMultiplier(2)->Range(4, 64);

void BM_NumericalRangeBoundary(benchmark::State& state) {
  std::mt19937_64 rng(23);
  const auto c = bench::random_complex(16, rng);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(numerical_range_boundary(c, m));
}
BENCHMARK(BM_NumericalRangeBoundary)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace
