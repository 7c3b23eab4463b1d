#pragma once

#include "pasim/config.hpp"
#include "pasim/geometry.hpp"
#include "pasim/quadrature.hpp"

namespace pasim {

/// Instantaneous WDMA link state for both users under an equal P/2 split.
struct WdmaInstant {
  double sinr_ue1 = 0.0;
  double sinr_ue2 = 0.0;
  double signal_gain_ue1 = 0.0;        ///< |g_1|^2
  double interference_gain_ue1 = 0.0;  ///< |g_{1,2}|^2
  double signal_gain_ue2 = 0.0;
  double interference_gain_ue2 = 0.0;
};

WdmaInstant wdma_sinr(const WdmaPlacement& p, double power_w, const SystemConfig& cfg);

// Placement-averaged metrics. UE 2 uses the same expressions with its own
// noise power; the geometry is mirror-symmetric.

double wdma_outage(const SystemConfig& cfg, double power_w, Ue ue = Ue::first,
                   const QuadratureRule& rule = default_rule());

/// Average rate in bit/s/Hz. For s = 0 the inner expectation over the
/// y-separation uses the closed-form log integrals; for s > 0 it is integrated
/// numerically against the shifted triangular density.
double wdma_avg_rate(const SystemConfig& cfg, double power_w, Ue ue = Ue::first,
                     const QuadratureRule& rule = default_rule());

/// Same quantity as wdma_avg_rate, always through numeric inner integration.
double wdma_avg_rate_numeric(const SystemConfig& cfg, double power_w, Ue ue = Ue::first,
                             const QuadratureRule& rule = default_rule());

/// Limit of wdma_outage as P -> infinity (interference-limited floor).
double wdma_outage_floor(const SystemConfig& cfg, const QuadratureRule& rule = default_rule());

/// Limit of wdma_avg_rate as P -> infinity. Always >= 1 bit/s/Hz.
double wdma_rate_ceiling(const SystemConfig& cfg, const QuadratureRule& rule = default_rule());

}  // namespace pasim
