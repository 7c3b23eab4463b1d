#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pasim/montecarlo.hpp"
#include "pasim/wdma.hpp"
#include "support/oracles.hpp"

using pasim::SystemConfig;
using pasim::Ue;

namespace {

double power_at(const SystemConfig& c, double snr_db) {
  return pasim::snr_db_to_power_w(snr_db, pasim::derive_constants(c).noise_w_ue1);
}

SystemConfig omega(double offset) {
  SystemConfig c;
  c.region_y_offset_m = offset;
  c.region_y_m = 10.0;
  return c;
}

}  // namespace

TEST(WdmaSinr, FarSeparationRemovesInterference) {
  const SystemConfig c;
  const double p = power_at(c, 100.0);
  const auto k = pasim::derive_constants(c);
  pasim::WdmaPlacement pl{5.0, 5.0, 0.0, -1e9};
  const auto s = pasim::wdma_sinr(pl, p, c);
  EXPECT_NEAR(s.sinr_ue1, k.eta_m2 / 9.0 * p / (2.0 * k.noise_w_ue1), 1e-9 * s.sinr_ue1);
}

TEST(WdmaSinr, CoLocatedRowsStayBelowOne) {
  const SystemConfig c;
  const double p = power_at(c, 120.0);
  pasim::WdmaPlacement pl{3.0, 8.0, 0.0, 0.0};
  const auto s = pasim::wdma_sinr(pl, p, c);
  EXPECT_DOUBLE_EQ(s.signal_gain_ue1, s.interference_gain_ue1);
  EXPECT_LT(s.sinr_ue1, 1.0);
  EXPECT_LT(s.sinr_ue2, 1.0);
}

TEST(WdmaSinr, MatchesRederivation) {
  const SystemConfig c;
  const auto k = pasim::derive_constants(c);
  std::mt19937_64 gen(9);
  for (int i = 0; i < 100; ++i) {
    pasim::TrialStream rng(1, i);
    const auto pl = pasim::sample_wdma(c, rng);
    const double p = power_at(c, 80.0 + 0.5 * i);
    const auto s = pasim::wdma_sinr(pl, p, c);
    const double g = pasim::g_axis(pl.x_ue1, c);
    const double y = (pl.y_ue1 - pl.y_ue2) * (pl.y_ue1 - pl.y_ue2);
    const double expected = (1.0 / g) / (1.0 / (g + y) + 2.0 * k.noise_w_ue1 / (k.eta_m2 * p));
    EXPECT_NEAR(s.sinr_ue1, expected, 1e-12 * expected);
    EXPECT_LT(s.sinr_ue1, s.signal_gain_ue1 * p / (2.0 * k.noise_w_ue1));

    // Rate in the log-ratio form used by the closed-form average.
    const double bg = 2.0 * k.noise_w_ue1 / (k.eta_m2 * p) * g;
    const double ratio = (2.0 * g + bg * g + (1.0 + bg) * y) / (g + bg * g + bg * y);
    EXPECT_NEAR(std::log2(ratio), std::log2(1.0 + s.sinr_ue1), 1e-10);
  }
}

TEST(WdmaOutage, LimitsAndSaturation) {
  SystemConfig c;
  EXPECT_NEAR(pasim::wdma_outage(c, power_at(c, -100.0)), 1.0, 1e-12);
  c.outage_threshold = 1e6;
  EXPECT_EQ(pasim::wdma_outage(c, power_at(c, 300.0)), 1.0);
  c.outage_threshold = 1.0;
  EXPECT_LT(pasim::wdma_outage(c, power_at(c, 250.0)), 1e-9);
  c.outage_threshold = 0.5;
  EXPECT_EQ(pasim::wdma_outage(c, power_at(c, 250.0)), 0.0);
}

TEST(WdmaOutage, MatchesIndependentIntegration) {
  for (const auto& c : {SystemConfig{}, omega(0.0), omega(10.0)}) {
    for (double db : {90.0, 95.0, 100.0, 110.0, 130.0}) {
      const double p = power_at(c, db);
      EXPECT_NEAR(pasim::wdma_outage(c, p), oracle::wdma_outage(c, p), 2e-6) << db << " dB";
    }
  }
}

TEST(WdmaOutage, SecondUserUsesOwnNoise) {
  SystemConfig c;
  const double p = power_at(c, 95.0);
  EXPECT_DOUBLE_EQ(pasim::wdma_outage(c, p, Ue::first), pasim::wdma_outage(c, p, Ue::second));
  c.noise_power_dbm_ue2 = -80.0;
  EXPECT_GT(pasim::wdma_outage(c, p, Ue::second), pasim::wdma_outage(c, p, Ue::first));
}

TEST(WdmaRate, MatchesIndependentIntegration) {
  for (const auto& c : {SystemConfig{}, omega(0.0), omega(10.0)}) {
    for (double db : {60.0, 90.0, 100.0, 120.0, 150.0}) {
      const double p = power_at(c, db);
      const double expected = oracle::wdma_rate(c, p);
      EXPECT_NEAR(pasim::wdma_avg_rate(c, p), expected, 1e-8 * expected) << db << " dB";
      EXPECT_NEAR(pasim::wdma_avg_rate_numeric(c, p), expected, 1e-8 * expected) << db << " dB";
    }
  }
}

TEST(WdmaRate, ZeroPowerLimit) {
  const SystemConfig c;
  EXPECT_LT(pasim::wdma_avg_rate(c, power_at(c, -100.0)), 1e-9);
  EXPECT_GE(pasim::wdma_avg_rate(c, power_at(c, -100.0)), 0.0);
  EXPECT_THROW(pasim::wdma_avg_rate(c, 0.0), std::invalid_argument);
  EXPECT_THROW(pasim::wdma_outage(c, -1.0), std::invalid_argument);
}

TEST(WdmaLimits, FloorAndCeiling) {
  SystemConfig c;
  EXPECT_NEAR(pasim::wdma_outage(c, power_at(c, 200.0)), pasim::wdma_outage_floor(c), 1e-4);
  const double ceiling = pasim::wdma_rate_ceiling(c);
  EXPECT_NEAR(pasim::wdma_avg_rate(c, power_at(c, 200.0)), ceiling, 1e-3 * ceiling);
  EXPECT_GE(ceiling, 1.0);

  c.outage_threshold = 1.0;
  EXPECT_EQ(pasim::wdma_outage_floor(c), 0.0);
  c.outage_threshold = 1e9;
  EXPECT_NEAR(pasim::wdma_outage_floor(c), 1.0, 1e-12);

  SystemConfig thin;
  thin.region_y_m = 1e-4;
  EXPECT_NEAR(pasim::wdma_rate_ceiling(thin), 1.0, 1e-3);
}

TEST(WdmaLimits, FloorMatchesOracle) {
  // Interference-limited: outage iff U^2 <= (gamma_th - 1) G.
  for (const auto& c : {SystemConfig{}, omega(0.0), omega(10.0)}) {
    const auto tri = oracle::separation(c);
    const double half = 0.5 * c.region_x_m;
    const double h2 = c.pa_height_m * c.pa_height_m;
    double sum = 0.0;
    for (int i = 0; i < 200; ++i) {
      sum += oracle::gk(
          [&](double z) { return tri.cdf(std::sqrt((c.outage_threshold - 1.0) * (z * z + h2))); },
          half * i / 200, half * (i + 1) / 200);
    }
    EXPECT_NEAR(pasim::wdma_outage_floor(c), sum / half, 1e-7);
  }
}

TEST(WdmaLimits, DispersedRegionsHelpWdma) {
  EXPECT_LT(pasim::wdma_outage_floor(omega(10.0)), pasim::wdma_outage_floor(omega(0.0)));
  EXPECT_GT(pasim::wdma_rate_ceiling(omega(10.0)), pasim::wdma_rate_ceiling(omega(0.0)));
}

TEST(WdmaRate, MonotoneInPower) {
  const SystemConfig c;
  double prev_rate = 0.0;
  double prev_out = 1.0;
  for (double db = 70.0; db <= 160.0; db += 2.5) {
    const double p = power_at(c, db);
    const double r = pasim::wdma_avg_rate(c, p);
    const double o = pasim::wdma_outage(c, p);
    EXPECT_GE(r, prev_rate);
    EXPECT_LE(o, prev_out + 1e-15);
    prev_rate = r;
    prev_out = o;
  }
}
