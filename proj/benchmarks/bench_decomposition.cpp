#include <benchmark/benchmark.h>

#include "bench_util.hpp"
#include "phasecomp/decomposition.hpp"

using namespace phasecomp;

namespace {

void BM_PbDecompose(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const int n = static_cast<int>(state.range(0));
  const bool rank_one = state.range(1) != 0;
  const auto g = PatternGraph::banded(n, 3);
  const auto c = bench::banded_member(g, 0.2, 1.4, rng);
  const PhaseSector sec(0.1, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(pb_decompose(c, sec, g, kDefaultTol, rank_one));
  state.SetComplexityN(n);
}
BENCHMARK(BM_PbDecompose)
    ->ArgsProduct({benchmark::CreateRange(8, 128, 2), {0, 1}})
    ->Complexity();

void BM_MembershipCheck(benchmark::State& state) {
  std::mt19937_64 rng(12);
  const int n = static_cast<int>(state.range(0));
  const auto c = bench::sector_member(n, 0.2, 1.4, rng);
  const PhaseSector sec(0.1, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(in_phase_cone(c, sec));
}
BENCHMARK(BM_MembershipCheck)->RangeMultiplier(2)->Range(4, 128);

}  // namespace
