#include <benchmark/benchmark.h>

#include "pasim/montecarlo.hpp"
#include "pasim/noma.hpp"
#include "pasim/sweep.hpp"
#include "pasim/wdma.hpp"

namespace {

const pasim::SystemConfig kCfg{};

double power_at(double snr_db) {
  return pasim::snr_db_to_power_w(snr_db, pasim::derive_constants(kCfg).noise_w_ue1);
}

void BM_QuadratureRule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pasim::fejer_rule(n));
}
BENCHMARK(BM_QuadratureRule)->Arg(64)->Arg(256);

void BM_WdmaOutage(benchmark::State& state) {
  const pasim::QuadratureRule rule = pasim::fejer_rule(static_cast<int>(state.range(0)));
  const double p = power_at(100.0);
  for (auto _ : state) benchmark::DoNotOptimize(pasim::wdma_outage(kCfg, p, pasim::Ue::first, rule));
}
BENCHMARK(BM_WdmaOutage)->Arg(64)->Arg(128);

void BM_WdmaRate(benchmark::State& state) {
  const pasim::QuadratureRule rule = pasim::fejer_rule(static_cast<int>(state.range(0)));
  const double p = power_at(100.0);
  for (auto _ : state) benchmark::DoNotOptimize(pasim::wdma_avg_rate(kCfg, p, pasim::Ue::first, rule));
}
BENCHMARK(BM_WdmaRate)->Arg(64)->Arg(128);

void BM_NomaOutageFar(benchmark::State& state) {
  const double p = power_at(95.0);
  for (auto _ : state) benchmark::DoNotOptimize(pasim::noma_outage_far(kCfg, p));
}
BENCHMARK(BM_NomaOutageFar);

void BM_NomaRateFar(benchmark::State& state) {
  const double p = power_at(100.0);
  for (auto _ : state) benchmark::DoNotOptimize(pasim::noma_rate_far(kCfg, p));
}
BENCHMARK(BM_NomaRateFar);

void BM_NomaRateFarNumeric(benchmark::State& state) {
  const double p = power_at(100.0);
  for (auto _ : state) benchmark::DoNotOptimize(pasim::noma_rate_far_numeric(kCfg, p));
}
BENCHMARK(BM_NomaRateFarNumeric);

void BM_McOutage(benchmark::State& state) {
  pasim::McSpec spec;
  spec.trials = static_cast<std::uint64_t>(state.range(0));
  spec.workers = 1;
  const double p = power_at(100.0);
  for (auto _ : state) benchmark::DoNotOptimize(pasim::mc_outage(spec, kCfg, p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_McOutage)->Arg(1 << 14)->Arg(1 << 17);

void BM_Sweep(benchmark::State& state) {
  pasim::SweepSpec spec;
  spec.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(pasim::run_sweep(spec, kCfg));
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

void BM_RateCrossover(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        pasim::find_crossover(kCfg, pasim::CrossoverMetric::rate_sum, 90.0, 150.0));
  }
}
BENCHMARK(BM_RateCrossover)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
