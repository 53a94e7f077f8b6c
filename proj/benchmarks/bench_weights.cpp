#include <benchmark/benchmark.h>

#include "oddsym/weights.hpp"

using namespace oddsym;

static void BM_SpCharacter(benchmark::State& state) {
  Partition lambda{{2, 2, 1}};
  std::size_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(sp_character(lambda, n));
}
BENCHMARK(BM_SpCharacter)->Arg(3)->Arg(5);

static void BM_InvariantDimension(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(invariant_dimension_tensor(state.range(0), state.range(1)));
}
BENCHMARK(BM_InvariantDimension)->Args({3, 2})->Args({4, 2});

static void BM_ExteriorMultiplicity(benchmark::State& state) {
  Partition lambda{{1}};
  for (auto _ : state)
    benchmark::DoNotOptimize(exterior_multiplicity(lambda, state.range(0), state.range(1)));
}
BENCHMARK(BM_ExteriorMultiplicity)->Args({3, 1})->Args({4, 2});

static void BM_KostantRows(benchmark::State& state) {
  Partition lambda{{3, 2, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(kostant_rows(lambda, state.range(0)));
}
BENCHMARK(BM_KostantRows)->Arg(5)->Arg(8);
