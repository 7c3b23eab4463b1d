#include "pasim/noma.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace pasim {

namespace {

void require_power(double power_w) {
  if (!(power_w > 0.0) || !std::isfinite(power_w)) {
    throw std::invalid_argument("power_w must be finite and > 0");
  }
}

double half_x(const SystemConfig& cfg) { return 0.5 * cfg.region_x_m; }

// Largest vertical separation the far user can see.
double max_separation(const SystemConfig& cfg) {
  return 2.0 * cfg.region_y_offset_m + 2.0 * cfg.region_y_m;
}

}  // namespace

NomaInstant noma_sinr(const NomaPlacement& p, double power_w, const SystemConfig& cfg) {
  require_power(power_w);
  const auto k = derive_constants(cfg);
  const double sep = p.y_far - p.y_near;
  const double dxf = p.x_far - half_x(cfg);
  const double h = cfg.pa_height_m;

  NomaInstant out;
  out.d_near = std::sqrt(g_axis(p.x_near, cfg));
  out.d_far = std::sqrt(dxf * dxf + sep * sep + h * h);
  const double near_rx = k.eta_m2 * cfg.noma_alpha_near * power_w;
  out.sinr_near = near_rx / (k.noise_w_ue1 * out.d_near * out.d_near);
  out.sinr_far = k.eta_m2 * cfg.noma_alpha_far * power_w /
                 (near_rx + k.noise_w_ue2 * out.d_far * out.d_far);
  return out;
}

NomaBreakpoints noma_breakpoints(const SystemConfig& cfg, double power_w) {
  require_power(power_w);
  const auto k = derive_constants(cfg);
  const double gth = cfg.outage_threshold;
  const double h = cfg.pa_height_m;
  const double s2 = 2.0 * cfg.region_y_offset_m;
  const double mid = s2 + cfg.region_y_m;
  const double top = max_separation(cfg);

  NomaBreakpoints bp;
  bp.m4 = half_x(cfg) * half_x(cfg);
  bp.c2 = k.eta_m2 * cfg.noma_alpha_far * power_w / (gth * k.noise_w_ue2) -
          k.eta_m2 * cfg.noma_alpha_near * power_w / k.noise_w_ue2 - h * h;
  auto clamp = [&](double z) { return std::min(std::max(z, 0.0), bp.m4); };
  bp.m1 = clamp(bp.c2 - top * top);
  bp.m2 = clamp(bp.c2 - mid * mid);
  bp.m3 = clamp(bp.c2 - s2 * s2);
  return bp;
}

ZeroOutageThresholds noma_zero_outage_thresholds(const SystemConfig& cfg) {
  const auto k = derive_constants(cfg);
  const double gth = cfg.outage_threshold;
  const double h2 = cfg.pa_height_m * cfg.pa_height_m;
  const double c2 = half_x(cfg) * half_x(cfg);
  const double top = max_separation(cfg);

  ZeroOutageThresholds out;
  out.near_power_w = gth * k.noise_w_ue1 * (c2 + h2) / (k.eta_m2 * cfg.noma_alpha_near);
  const double margin = cfg.noma_alpha_far - gth * cfg.noma_alpha_near;
  if (margin > 0.0) {
    out.far_power_w = gth * k.noise_w_ue2 * (c2 + top * top + h2) / (k.eta_m2 * margin);
  }
  return out;
}

double noma_outage_near(const SystemConfig& cfg, double power_w) {
  require_power(power_w);
  const auto k = derive_constants(cfg);
  if (power_w >= noma_zero_outage_thresholds(cfg).near_power_w) return 0.0;

  const double dx = cfg.region_x_m;
  const double c1 = k.eta_m2 * cfg.noma_alpha_near * power_w /
                        (cfg.outage_threshold * k.noise_w_ue1) -
                    cfg.pa_height_m * cfg.pa_height_m;
  if (c1 <= 0.0) return 1.0;
  if (c1 >= 0.25 * dx * dx) return 0.0;
  return std::clamp(1.0 - 4.0 * std::sqrt(c1) / dx + 4.0 * c1 / (dx * dx), 0.0, 1.0);
}

double noma_outage_far(const SystemConfig& cfg, double power_w, const QuadratureRule& rule) {
  const auto bp = noma_breakpoints(cfg, power_w);
  const auto far = noma_zero_outage_thresholds(cfg).far_power_w;
  if (far && power_w >= *far) return 0.0;
  if (bp.c2 <= 0.0) return 1.0;
  const double top = max_separation(cfg);
  if (bp.c2 >= bp.m4 + top * top) return 0.0;
  if (cfg.region_y_offset_m != 0.0) return noma_outage_far_numeric(cfg, power_w, rule);

  const double c2 = bp.c2;
  const double d = cfg.region_y_m;
  const double d2 = d * d;
  auto phi1 = [&](double m) {
    return 2.0 * m + 4.0 / (3.0 * d) * std::pow(c2 - m, 1.5) +
           (c2 * m - 0.5 * m * m) / (2.0 * d2);
  };
  auto phi2 = [&](double m) { return m - c2 * m / (2.0 * d2) + m * m / (4.0 * d2); };
  auto phi3 = [](double m) { return m; };

  const double sum = (phi1(bp.m2) - phi1(bp.m1)) + (phi2(bp.m3) - phi2(bp.m2)) +
                     (phi3(bp.m4) - phi3(bp.m3));
  const double dx = cfg.region_x_m;
  return std::clamp(4.0 / (dx * dx) * sum, 0.0, 1.0);
}

double noma_outage_far_numeric(const SystemConfig& cfg, double power_w,
                               const QuadratureRule& rule) {
  const auto bp = noma_breakpoints(cfg, power_w);
  if (bp.c2 <= 0.0) return 1.0;
  const auto dist = diff_distribution(cfg);

  auto conditional = [&](double m) {
    const double r2 = bp.c2 - m;
    if (r2 <= 0.0) return 1.0;
    return 1.0 - diff_cdf(std::sqrt(r2), dist);
  };
  // The integrand is smooth between consecutive breakpoints.
  const std::array<double, 5> edges{0.0, bp.m1, bp.m2, bp.m3, bp.m4};
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (edges[i + 1] > edges[i]) sum += integrate_interval(conditional, edges[i], edges[i + 1], rule);
  }
  const double dx = cfg.region_x_m;
  return std::clamp(4.0 / (dx * dx) * sum, 0.0, 1.0);
}

double noma_rate_near(const SystemConfig& cfg, double power_w) {
  require_power(power_w);
  const auto k = derive_constants(cfg);
  const double dx = cfg.region_x_m;
  const double c = half_x(cfg);
  const double h2 = cfg.pa_height_m * cfg.pa_height_m;
  const double gain = k.eta_m2 * cfg.noma_alpha_near * power_w / k.noise_w_ue1;

  // E[ln(1 + K/G)] over the near-user density, with both log integrals taken
  // as definite integrals from 0 to D_x/2.
  const double log_part = j0_definite(0.0, c, h2 + gain, 1.0) - j0_definite(0.0, c, h2, 1.0);
  const double lin_part = j1_definite(0.0, c, h2 + gain, 1.0) - j1_definite(0.0, c, h2, 1.0);
  const double nats = 4.0 / dx * log_part - 8.0 / (dx * dx) * lin_part;
  return std::max(0.0, nats / std::numbers::ln2);
}

double noma_rate_far(const SystemConfig& cfg, double power_w, const QuadratureRule& rule) {
  require_power(power_w);
  if (cfg.region_y_offset_m != 0.0) return noma_rate_far_numeric(cfg, power_w, rule);

  const auto k = derive_constants(cfg);
  const double k1 = k.eta_m2 * cfg.noma_alpha_near * power_w;
  const double k2 = k.eta_m2 * cfg.noma_alpha_far * power_w;
  const double n2 = k.noise_w_ue2;
  const double h2 = cfg.pa_height_m * cfg.pa_height_m;
  const double d = cfg.region_y_m;
  const double c = half_x(cfg);

  // E[ln(beta + N2 A^2)] over the triangular law of A.
  auto h_of = [&](double beta) {
    return j1_definite(0.0, d, beta, n2) / (d * d) +
           2.0 * j0_definite(d, 2.0 * d, beta, n2) / d -
           j1_definite(d, 2.0 * d, beta, n2) / (d * d);
  };
  auto delta_h = [&](double m) {
    const double beta1 = k1 + n2 * (h2 + m);
    return h_of(beta1 + k2) - h_of(beta1);
  };
  const double dx = cfg.region_x_m;
  const double integral = integrate_interval(delta_h, 0.0, c * c, rule);
  return std::max(0.0, 4.0 / (dx * dx * std::numbers::ln2) * integral);
}

double noma_rate_far_numeric(const SystemConfig& cfg, double power_w,
                             const QuadratureRule& rule) {
  require_power(power_w);
  const auto k = derive_constants(cfg);
  const auto dist = diff_distribution(cfg);
  const double k1 = k.eta_m2 * cfg.noma_alpha_near * power_w;
  const double k2 = k.eta_m2 * cfg.noma_alpha_far * power_w;
  const double n2 = k.noise_w_ue2;
  const double h2 = cfg.pa_height_m * cfg.pa_height_m;
  const double c = half_x(cfg);

  auto delta_h = [&](double m) {
    const double beta1 = k1 + n2 * (h2 + m);
    return expect_diff([&](double a) { return std::log1p(k2 / (beta1 + n2 * a * a)); }, dist,
                       rule);
  };
  const double dx = cfg.region_x_m;
  const double integral = integrate_interval(delta_h, 0.0, c * c, rule);
  return std::max(0.0, 4.0 / (dx * dx * std::numbers::ln2) * integral);
}

double noma_rate_far_ceiling(const SystemConfig& cfg) {
  validate(cfg);
  return std::log2(1.0 + cfg.noma_alpha_far / cfg.noma_alpha_near);
}

double noma_outage(const SystemConfig& cfg, double power_w, Ue ue, const QuadratureRule& rule) {
  return ue == Ue::first ? noma_outage_near(cfg, power_w) : noma_outage_far(cfg, power_w, rule);
}

double noma_rate(const SystemConfig& cfg, double power_w, Ue ue, const QuadratureRule& rule) {
  return ue == Ue::first ? noma_rate_near(cfg, power_w) : noma_rate_far(cfg, power_w, rule);
}

}  // namespace pasim
