#include <benchmark/benchmark.h>

#include "bench_util.hpp"
#include "phasecomp/completion.hpp"

using namespace phasecomp;

namespace {

PartialMatrix banded_partial(int n, int width, std::mt19937_64& rng) {
  const auto g = PatternGraph::banded(n, width);
  return PartialMatrix::mask(bench::banded_member(g, 0.2, 1.4, rng), g);
}

void BM_CentralPsdCompletion(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(state.range(0));
  const auto g = PatternGraph::banded(n, 3);
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  for (int i = 0; i + 3 < n + 3; ++i) {
    const int len = std::min(4, n - i);
    const auto v = bench::random_complex(len, rng);
    h.block(i, i, len, len) += v * v.adjoint();
  }
  const auto pm = PartialMatrix::mask(h, g);
  for (auto _ : state) benchmark::DoNotOptimize(central_psd_completion(pm));
  state.SetComplexityN(n);
}
BENCHMARK(BM_CentralPsdCompletion)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_CentralPbCompletion(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto pm = banded_partial(static_cast<int>(state.range(0)), 3, rng);
  const PhaseSector sec(0.1, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(central_pb_completion(pm, sec));
}
BENCHMARK(BM_CentralPbCompletion)->RangeMultiplier(2)->Range(8, 128);

void BM_ParameterizedSample(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto pm = banded_partial(static_cast<int>(state.range(0)), 2, rng);
  const PhaseSector sec(0.1, 1.5);
  const auto param = build_pb_parameterization(pm, sec);
  const auto g1 = random_gamma(pm.pattern(), rng);
  const auto g2 = random_gamma(pm.pattern(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(apply_pb_param(param, g1, g2));
}
BENCHMARK(BM_ParameterizedSample)->RangeMultiplier(2)->Range(8, 64);

void BM_ChordalFill(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto pm = banded_partial(static_cast<int>(state.range(0)), 3, rng);
  const PhaseSector sec(0.1, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(complete_chordal(pm, sec));
}
BENCHMARK(BM_ChordalFill)->RangeMultiplier(2)->Range(8, 128);

}  // namespace
