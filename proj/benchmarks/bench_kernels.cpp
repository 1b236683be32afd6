#include <benchmark/benchmark.h>

#include "wavecomp/riemann.hpp"

static void BM_solve_pattern(benchmark::State& state) {
  wavecomp::GasParams g;
  wavecomp::ThermoState left{1.0, 0.0, 1.0};
  const wavecomp::ThermoState right = wavecomp::right_state_for_delta(g, left, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wavecomp::solve_pattern(g, left, right));
  }
}
BENCHMARK(BM_solve_pattern);

BENCHMARK_MAIN();
