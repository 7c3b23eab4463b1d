#include <gtest/gtest.h>

#include <cmath>

#include "pasim/montecarlo.hpp"
#include "pasim/noma.hpp"
#include "pasim/wdma.hpp"

using pasim::McSpec;
using pasim::Scheme;
using pasim::SystemConfig;
using pasim::Ue;

namespace {

double power_at(const SystemConfig& c, double snr_db) {
  return pasim::snr_db_to_power_w(snr_db, pasim::derive_constants(c).noise_w_ue1);
}

McSpec spec(Scheme s, Ue u, std::uint64_t trials = 100'000, unsigned workers = 1) {
  McSpec m;
  m.scheme = s;
  m.user = u;
  m.trials = trials;
  m.workers = workers;
  return m;
}

}  // namespace

TEST(MonteCarlo, ImpossibleAndCertainEvents) {
  SystemConfig c;
  c.outage_threshold = 1e-300;
  for (auto s : {Scheme::wdma, Scheme::noma}) {
    EXPECT_EQ(pasim::mc_outage(spec(s, Ue::first, 10'000), c, power_at(c, 100.0)).value, 0.0);
    EXPECT_EQ(pasim::mc_outage(spec(s, Ue::first, 10'000), SystemConfig{}, 1e-30).value, 1.0);
    const auto r = pasim::mc_rate(spec(s, Ue::second, 10'000), SystemConfig{}, 1e-30);
    EXPECT_LT(r.value, 1e-12);
    EXPECT_GE(r.value, 0.0);
  }
}

TEST(MonteCarlo, RejectsBadInput) {
  const SystemConfig c;
  EXPECT_THROW(pasim::mc_outage(spec(Scheme::wdma, Ue::first, 0), c, 1.0), std::invalid_argument);
  EXPECT_THROW(pasim::mc_rate(spec(Scheme::noma, Ue::first), c, 0.0), std::invalid_argument);
}

TEST(MonteCarlo, DeterministicAcrossRunsAndWorkers) {
  const SystemConfig c;
  const double p = power_at(c, 100.0);
  for (auto s : {Scheme::wdma, Scheme::noma}) {
    const auto a = pasim::mc_rate(spec(s, Ue::second, 50'000, 1), c, p);
    const auto b = pasim::mc_rate(spec(s, Ue::second, 50'000, 1), c, p);
    const auto d = pasim::mc_rate(spec(s, Ue::second, 50'000, 4), c, p);
    const auto e = pasim::mc_rate(spec(s, Ue::second, 50'000, 7), c, p);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.std_error, b.std_error);
    EXPECT_EQ(a.value, d.value);
    EXPECT_EQ(a.std_error, d.std_error);
    EXPECT_EQ(a.value, e.value);
    const auto o1 = pasim::mc_outage(spec(s, Ue::first, 50'000, 1), c, p);
    const auto o3 = pasim::mc_outage(spec(s, Ue::first, 50'000, 3), c, p);
    EXPECT_EQ(o1.value, o3.value);
  }
}

TEST(MonteCarlo, SeedChangesEstimate) {
  const SystemConfig c;
  auto m = spec(Scheme::wdma, Ue::first, 20'000);
  const auto a = pasim::mc_rate(m, c, power_at(c, 100.0));
  m.seed = 2;
  const auto b = pasim::mc_rate(m, c, power_at(c, 100.0));
  EXPECT_NE(a.value, b.value);
  EXPECT_NEAR(a.value, b.value, 5.0 * std::hypot(a.std_error, b.std_error));
}

TEST(MonteCarlo, TrialSinrIsReproducible) {
  const SystemConfig c;
  const double p = power_at(c, 100.0);
  const double s1 = pasim::mc_trial_sinr(c, Scheme::noma, Ue::second, p, 3, 17);
  EXPECT_EQ(s1, pasim::mc_trial_sinr(c, Scheme::noma, Ue::second, p, 3, 17));

  // Same draw through the analytic-module SINR.
  pasim::TrialStream rng(3, 17);
  const auto pl = pasim::sample_noma(c, rng);
  EXPECT_NEAR(s1, pasim::noma_sinr(pl, p, c).sinr_far, 1e-12 * s1);
  pasim::TrialStream rng2(3, 17);
  const auto pw = pasim::sample_wdma(c, rng2);
  const double w1 = pasim::mc_trial_sinr(c, Scheme::wdma, Ue::first, p, 3, 17);
  EXPECT_NEAR(w1, pasim::wdma_sinr(pw, p, c).sinr_ue1, 1e-12 * w1);
}

TEST(MonteCarlo, StandardErrorShrinksWithTrials) {
  const SystemConfig c;
  const double p = power_at(c, 95.0);
  double ratio_sum = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto small = spec(Scheme::wdma, Ue::first, 20'000);
    small.seed = seed;
    auto large = small;
    large.trials = 40'000;
    ratio_sum += pasim::mc_rate(large, c, p).std_error / pasim::mc_rate(small, c, p).std_error;
  }
  EXPECT_NEAR(ratio_sum / 10.0, 1.0 / std::sqrt(2.0), 0.2 / std::sqrt(2.0));
}

TEST(MonteCarlo, OutageStandardErrorIsBinomial) {
  const SystemConfig c;
  const auto est = pasim::mc_outage(spec(Scheme::noma, Ue::second, 30'000), c, power_at(c, 95.0));
  EXPECT_DOUBLE_EQ(est.std_error, std::sqrt(est.value * (1.0 - est.value) / 30'000.0));
  EXPECT_EQ(est.trials, 30'000u);
  EXPECT_EQ(est.provenance, pasim::Provenance::monte_carlo);
}

TEST(MonteCarlo, AgreesWithAnalytics) {
  const SystemConfig c;
  for (double db : {90.0, 105.0, 120.0, 135.0, 150.0}) {
    const double p = power_at(c, db);
    const auto wo = pasim::mc_outage(spec(Scheme::wdma, Ue::first), c, p);
    EXPECT_NEAR(wo.value, pasim::wdma_outage(c, p), 3.0 * wo.std_error + 1e-12) << db;
    const auto wr = pasim::mc_rate(spec(Scheme::wdma, Ue::first), c, p);
    const double ar = pasim::wdma_avg_rate(c, p);
    EXPECT_NEAR(wr.value, ar, std::max(3.0 * wr.std_error, 0.01 * ar)) << db;
    const auto nr = pasim::mc_rate(spec(Scheme::noma, Ue::second), c, p);
    const double anr = pasim::noma_rate_far(c, p);
    EXPECT_NEAR(nr.value, anr, std::max(3.0 * nr.std_error, 0.01 * anr)) << db;
  }
}

TEST(MonteCarlo, Names) {
  EXPECT_STREQ(pasim::to_string(Scheme::noma), "noma");
  EXPECT_EQ(pasim::scheme_from_string("wdma"), Scheme::wdma);
  EXPECT_THROW(pasim::scheme_from_string("oma"), std::invalid_argument);
  EXPECT_STREQ(pasim::to_string(pasim::Provenance::monte_carlo), "monte-carlo");
}
