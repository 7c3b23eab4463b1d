#pragma once

#include <optional>

#include "pasim/config.hpp"
#include "pasim/geometry.hpp"
#include "pasim/quadrature.hpp"

namespace pasim {

/// Instantaneous NOMA link state. The far user's SINR is capped by
/// alpha_far / alpha_near no matter how much power is used.
struct NomaInstant {
  double sinr_near = 0.0;
  double sinr_far = 0.0;
  double d_near = 0.0;  ///< PA-to-near-user distance, m
  double d_far = 0.0;   ///< PA-to-far-user distance, m
};

NomaInstant noma_sinr(const NomaPlacement& p, double power_w, const SystemConfig& cfg);

/// Far-user outage region in m = (x_far - D_x/2)^2.
///
/// c2 is the largest squared horizontal-plus-vertical offset that still
/// decodes; m1 <= m2 <= m3 bound the segments where the conditional outage is
/// 0, rising (A > D), rising (A <= D) and 1, all clamped to [0, m4].
struct NomaBreakpoints {
  double c2 = 0.0;
  double m1 = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;  ///< (D_x/2)^2
};

NomaBreakpoints noma_breakpoints(const SystemConfig& cfg, double power_w);

/// Transmit powers at and above which the outage probabilities are exactly 0.
/// far_power_w is empty when alpha_far <= threshold * alpha_near, in which
/// case the far user is always in outage.
struct ZeroOutageThresholds {
  double near_power_w = 0.0;
  std::optional<double> far_power_w;
};

ZeroOutageThresholds noma_zero_outage_thresholds(const SystemConfig& cfg);

double noma_outage_near(const SystemConfig& cfg, double power_w);

/// Closed form for s = 0; for s > 0 falls through to noma_outage_far_numeric.
double noma_outage_far(const SystemConfig& cfg, double power_w,
                       const QuadratureRule& rule = default_rule());
double noma_outage_far_numeric(const SystemConfig& cfg, double power_w,
                               const QuadratureRule& rule = default_rule());

double noma_rate_near(const SystemConfig& cfg, double power_w);

/// Always below log2(1 + alpha_far / alpha_near).
double noma_rate_far(const SystemConfig& cfg, double power_w,
                     const QuadratureRule& rule = default_rule());
double noma_rate_far_numeric(const SystemConfig& cfg, double power_w,
                             const QuadratureRule& rule = default_rule());

/// High-power limit of noma_rate_far: log2(1 + alpha_far / alpha_near).
double noma_rate_far_ceiling(const SystemConfig& cfg);

double noma_outage(const SystemConfig& cfg, double power_w, Ue ue,
                   const QuadratureRule& rule = default_rule());
double noma_rate(const SystemConfig& cfg, double power_w, Ue ue,
                 const QuadratureRule& rule = default_rule());

}  // namespace pasim
