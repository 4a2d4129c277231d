#include <benchmark/benchmark.h>

#include "sasaki/classifier.hpp"
#include "sasaki/example_immersions.hpp"

using namespace sasaki;

namespace {

void bitension_grid(benchmark::State& state, Execution ex) {
  const ParametricImmersion f = corollary_c1();
  const Grid g = period_grid(f, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_bitension(f, g, BitensionMode::biharmonic, kGeometryTol, ex));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.size()));
}

void c_parallel_grid(benchmark::State& state, Execution ex) {
  const ParametricImmersion f = corollary_c1();
  const Grid g = period_grid(f, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_C_parallel(f, g, kGeometryTol, ex));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.size()));
}

void fallback(benchmark::State& state, Execution ex) {
  FallbackOptions fb;
  fb.starts = static_cast<int>(state.range(0));
  fb.execution = ex;
  const SystemCoefficients s = SystemCoefficients::biharmonic(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(fallback_sweep(s, fb));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(bitension_grid, serial, Execution::serial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bitension_grid, parallel, Execution::parallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(c_parallel_grid, serial, Execution::serial)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(c_parallel_grid, parallel, Execution::parallel)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(fallback, serial, Execution::serial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(fallback, parallel, Execution::parallel)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
