#include <benchmark/benchmark.h>

#include "omcomb/config.hpp"
#include "omcomb/dynamics.hpp"
#include "omcomb/spectrum_comb.hpp"
#include "omcomb/steady_state.hpp"
#include "omcomb/sweep.hpp"

using namespace omcomb;

static void BM_Rk4Step(benchmark::State& state) {
  const SystemParams p = preset("fig4b").params;
  const double dt = step_for(p, kDefaultStepsPerPeriod);
  const MeanFieldEquations eq(p);
  FieldState s{Complex(1e3, -2e3), Complex(0.5, 0.1), 0.0};
  for (auto _ : state) {
    s = rk4_step(eq, s, dt);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Rk4Step);

static void BM_IntegrateFundamentalPeriods(benchmark::State& state) {
  const SystemParams p = preset("fig4b").params;
  const double dt = step_for(p, kDefaultStepsPerPeriod);
  const long long steps = state.range(0) * p.n * kDefaultStepsPerPeriod;
  for (auto _ : state) benchmark::DoNotOptimize(integrate_steps(p, FieldState{}, dt, steps, steps));
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_IntegrateFundamentalPeriods)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_ProjectHarmonics(benchmark::State& state) {
  const SystemParams p = preset("fig4b").params;
  const double dt = step_for(p, kDefaultStepsPerPeriod);
  const long long window = kDefaultRecordPeriods * p.n * kDefaultStepsPerPeriod;
  const FieldState start = settle(p);
  const Trajectory tr = integrate_steps(p, start, dt, window - 1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(project_harmonics(tr, p, kDefaultOrderSpan * p.n));
}
BENCHMARK(BM_ProjectHarmonics)->Unit(benchmark::kMillisecond);

static void BM_FftHarmonics(benchmark::State& state) {
  const SystemParams p = preset("fig4b").params;
  const double dt = step_for(p, kDefaultStepsPerPeriod);
  const long long window = kDefaultRecordPeriods * p.n * kDefaultStepsPerPeriod;
  const Trajectory tr = integrate_steps(p, FieldState{}, dt, window - 1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(fft_harmonics(tr, p, kDefaultOrderSpan * p.n));
}
BENCHMARK(BM_FftHarmonics)->Unit(benchmark::kMillisecond);

static void BM_SolveSteady(benchmark::State& state) {
  SystemParams p = baseline_params();
  p.eps_c = Amplitude::giga(4e3);
  for (auto _ : state) benchmark::DoNotOptimize(solve_steady(p));
}
BENCHMARK(BM_SolveSteady);

static void BM_FullRun(benchmark::State& state) {
  const RunConfig cfg = preset(state.range(0) ? "fig4b" : "fig2b");
  for (auto _ : state) benchmark::DoNotOptimize(run(cfg));
}
BENCHMARK(BM_FullRun)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
