#include <benchmark/benchmark.h>

#include <cmath>

#include "nlstirap/adiabatic.hpp"
#include "nlstirap/cpt.hpp"
#include "nlstirap/meanfield.hpp"
#include "nlstirap/modes.hpp"
#include "nlstirap/stability.hpp"
#include "nlstirap/sweep.hpp"

using namespace nlstirap;

static void BM_CptState(benchmark::State& state) {
  double chi = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cpt_state(chi, 4.0));
    chi += 1e-9;  // defeat value caching without changing the cost
  }
}
BENCHMARK(BM_CptState);

static void BM_ClosedSpectrum(benchmark::State& state) {
  double du = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(excitation_frequencies(3.7, 3.7, 8.0, du));
    du += 1e-9;
  }
}
BENCHMARK(BM_ClosedSpectrum);

static void BM_Classify(benchmark::State& state) {
  double du = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(3.7, 3.7, 8.0, du));
    du += 1e-9;
  }
}
BENCHMARK(BM_Classify);

static void BM_BogoliubovModes(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(bogoliubov_modes(3.7, 3.7, 8.0, -3.0));
}
BENCHMARK(BM_BogoliubovModes);

static void BM_ProjectionFull(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        projection_solve_full(3.7, 3.7, 1.0, 8.0, -3.0, 1.0));
}
BENCHMARK(BM_ProjectionFull);

static void BM_ProjectionReduced(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(projection_solve_reduced(3.7, 3.7, 1.0, 8.0, 1.0));
}
BENCHMARK(BM_ProjectionReduced);

static void BM_MeanFieldRun(benchmark::State& state) {
  SystemParams p;
  p.u_aa = 5.0;
  p.gamma = 1.0;
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(transfer_efficiency(p, 0.0, 40.0, tol));
}
BENCHMARK(BM_MeanFieldRun)->Arg(6)->Arg(8)->Arg(9);

static void BM_StabilityMapRow(benchmark::State& state) {
  SweepGrid g;
  g.u_min = g.u_max = 8.0;
  g.nu = 1;
  g.ndu = 101;
  const PulseParams p;
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep_stability(g, p, p.t_overlap(), 1));
}
BENCHMARK(BM_StabilityMapRow);

BENCHMARK_MAIN();
