#include <benchmark/benchmark.h>

#include "oddsym/burau.hpp"
#include "oddsym/lattice.hpp"
#include "oddsym/orbits.hpp"

using namespace oddsym;

static void BM_SmithNormalForm(benchmark::State& state) {
  std::size_t n = state.range(0);
  SplitMix64 rng(42);
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = Int(static_cast<long long>(rng.below(21)) - 10);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(12);

static void BM_BurauWord(benchmark::State& state) {
  std::size_t n = state.range(0);
  SplitMix64 rng(7);
  WordSampler sampler{n, 16};
  BraidWord word = sampler.sample(rng);
  for (auto _ : state) benchmark::DoNotOptimize(burau(word));
}
BENCHMARK(BM_BurauWord)->Arg(4)->Arg(8);

static void BM_Classify(benchmark::State& state) {
  std::size_t n = state.range(0);
  SplitMix64 rng(3);
  IntMat m = random_t_element(n, rng).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(classify_element(m));
}
BENCHMARK(BM_Classify)->Arg(5)->Arg(9);

BENCHMARK_MAIN();
