#include <benchmark/benchmark.h>

#include "oddsym/complexes.hpp"
#include "oddsym/homology.hpp"
#include "oddsym/orbits.hpp"

using namespace oddsym;

static void BM_BuildComplex(benchmark::State& state) {
  ComplexSpec spec;
  spec.family = Family::X;
  spec.n = state.range(0);
  spec.box = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(build_complex(spec));
}
BENCHMARK(BM_BuildComplex)->Args({4, 1})->Args({4, 2})->Args({5, 1});

static void BM_HomologyOfSphere(benchmark::State& state) {
  FiniteComplex fc = boundary_of_simplex(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(homology(chain_complex(fc), Coefficients::Z));
}
BENCHMARK(BM_HomologyOfSphere)->Arg(4)->Arg(6);

static void BM_OrbitConditions(benchmark::State& state) {
  std::size_t n = 6;
  auto tuple = standard_orbit_tuple(OrbitKind::X, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(orbit_conditions(OrbitKind::X, n, tuple));
}
BENCHMARK(BM_OrbitConditions);
