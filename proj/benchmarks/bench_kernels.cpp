#include <benchmark/benchmark.h>

#include "conjugate/fourier.hpp"
#include "conjugate/sampling.hpp"
#include "conjugate/widths.hpp"

using namespace conjugate;

namespace {

SampledSignal gaussian(std::size_t n) {
  return generate(family::Gaussian{}, Grid::centered(0.0, 40.0, n));
}

void BM_Transform(benchmark::State& state) {
  const auto sig = gaussian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(transform(sig, Convention::omega));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Transform)->RangeMultiplier(4)->Range(64, 1 << 16)->Complexity(benchmark::oNLogN);

void BM_TransformNonPowerOfTwo(benchmark::State& state) {
  const auto sig = gaussian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(transform(sig, Convention::omega));
}
BENCHMARK(BM_TransformNonPowerOfTwo)->Arg(1000)->Arg(3000);

void BM_NaiveDft(benchmark::State& state) {
  const auto sig = gaussian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(naive_dft(sig, Convention::omega));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NaiveDft)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oNSquared);

void BM_UncertaintyProduct(benchmark::State& state) {
  const auto sig = gaussian(4096);
  for (auto _ : state) benchmark::DoNotOptimize(uncertainty_product(sig, Convention::omega));
}
BENCHMARK(BM_UncertaintyProduct);

void BM_Reconstruct(benchmark::State& state) {
  const auto sampled = gaussian(static_cast<std::size_t>(state.range(0)));
  const Grid target = Grid::centered(0.0, 40.0, static_cast<std::size_t>(state.range(0)) * 2);
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(sampled, target, threads));
}
BENCHMARK(BM_Reconstruct)->Args({1024, 1})->Args({1024, 0})->Args({4096, 1})->Args({4096, 0})->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
