#include <benchmark/benchmark.h>

#include "lftlab/generators.hpp"
#include "lftlab/lft1d.hpp"
#include "lftlab/lftnd.hpp"
#include "lftlab/qlft.hpp"

namespace {

using namespace lftlab;

FunctionSpec instance(std::size_t n) {
  Rng rng(n);
  return random_convex_1d(rng, n);
}

DualGrid regular_for(const FunctionSpec& f, std::size_t k) {
  return regular_dual_grid(nontrivial_dual_range(discrete_gradients(f)), k);
}

void BM_LftRegular(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = instance(n);
  const auto dual = regular_for(f, n);
  for (auto _ : state) benchmark::DoNotOptimize(lft_regular(f, dual));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LftRegular)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);

void BM_LftAdaptive(benchmark::State& state) {
  const auto f = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lft_adaptive(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LftAdaptive)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);

void BM_LftBrute(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = instance(n);
  const auto dual = regular_for(f, n);
  for (auto _ : state) benchmark::DoNotOptimize(lft_brute(f, dual));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LftBrute)->RangeMultiplier(4)->Range(16, 1024)->Complexity(benchmark::oNSquared);

void BM_LftNdRegular(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(7);
  const auto t = random_separable(rng, {n, n});
  const auto duals = nd_dual_grids(t, {n, n});
  for (auto _ : state) benchmark::DoNotOptimize(lft_nd_regular(t, duals));
  state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(BM_LftNdRegular)->RangeMultiplier(2)->Range(8, 64)->Complexity(benchmark::oN);

void BM_SimulatorRegular(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = instance(n);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_qlft_1d_regular(f, n, ++seed));
}
BENCHMARK(BM_SimulatorRegular)->RangeMultiplier(4)->Range(16, 1024);

void BM_SimulatorAdaptive(benchmark::State& state) {
  const auto f = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_qlft_1d_adaptive(f, PadPolicy::Embed));
}
BENCHMARK(BM_SimulatorAdaptive)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace

BENCHMARK_MAIN();
