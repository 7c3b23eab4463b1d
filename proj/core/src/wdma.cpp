#include "pasim/wdma.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace pasim {

namespace {

void require_power(double power_w) {
  if (!(power_w > 0.0) || !std::isfinite(power_w)) {
    throw std::invalid_argument("power_w must be finite and > 0");
  }
}

// B = 2 sigma^2 / (eta P): noise-to-signal scale of one waveguide's half power.
double noise_scale(const DerivedConstants& k, Ue ue, double power_w) {
  return 2.0 * k.noise_w(ue) / (k.eta_m2 * power_w);
}

// Mean over x ~ U(0, D_x).
template <class F>
double average_over_x(F&& f, const SystemConfig& cfg, const QuadratureRule& rule) {
  return integrate_interval(f, 0.0, cfg.region_x_m, rule) / cfg.region_x_m;
}

// Knots of the separation law in y = U^2.
std::vector<double> y_knots(const DiffDistribution& dist) {
  const double lo = dist.lower();
  const double mid = dist.mode();
  const double hi = dist.upper();
  std::vector<double> knots{mid * mid, hi * hi};
  if (lo > 0.0) knots.insert(knots.begin(), lo * lo);
  return knots;
}

// Mean of f(G) over x ~ U(0, D_x), written as an integral over the offset
// z = |x - D_x/2| in [0, D_x/2] and split at the offsets where G equals one
// of `g_knots`, so that each piece is smooth.
template <class F>
double average_over_offset(F&& f, const SystemConfig& cfg, const QuadratureRule& rule,
                           std::vector<double> g_knots) {
  const double c = 0.5 * cfg.region_x_m;
  const double h2 = cfg.pa_height_m * cfg.pa_height_m;
  std::vector<double> edges{0.0};
  std::sort(g_knots.begin(), g_knots.end());
  for (double g : g_knots) {
    if (!(g > h2) || !std::isfinite(g)) continue;
    const double z = std::sqrt(g - h2);
    if (z < c && z > edges.back()) edges.push_back(z);
  }
  edges.push_back(c);
  auto in_z = [&](double z) { return f(z * z + h2); };
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    sum += integrate_interval(in_z, edges[i], edges[i + 1], rule);
  }
  return sum / c;
}

}  // namespace

WdmaInstant wdma_sinr(const WdmaPlacement& p, double power_w, const SystemConfig& cfg) {
  require_power(power_w);
  const auto k = derive_constants(cfg);
  const double dy = p.y_ue1 - p.y_ue2;
  const double sep = dy * dy;

  const double g1 = g_axis(p.x_ue1, cfg);
  const double g2 = g_axis(p.x_ue2, cfg);

  WdmaInstant out;
  out.signal_gain_ue1 = k.eta_m2 / g1;
  out.interference_gain_ue1 = k.eta_m2 / (g1 + sep);
  out.signal_gain_ue2 = k.eta_m2 / g2;
  out.interference_gain_ue2 = k.eta_m2 / (g2 + sep);
  out.sinr_ue1 = out.signal_gain_ue1 /
                 (out.interference_gain_ue1 + 2.0 * k.noise_w_ue1 / power_w);
  out.sinr_ue2 = out.signal_gain_ue2 /
                 (out.interference_gain_ue2 + 2.0 * k.noise_w_ue2 / power_w);
  return out;
}

double wdma_outage(const SystemConfig& cfg, double power_w, Ue ue, const QuadratureRule& rule) {
  require_power(power_w);
  const auto k = derive_constants(cfg);
  const auto dist = diff_distribution(cfg);
  const double b = noise_scale(k, ue, power_w);
  const double inv_threshold = 1.0 / cfg.outage_threshold;

  // Outage given G: Y <= T(G) with T = G / (1/gamma_th - B G) - G, certain
  // when the denominator is non-positive (or so small that T overflows).
  auto conditional = [&](double g) {
    const double margin = inv_threshold - b * g;
    if (margin <= 0.0 || margin < 1e-12 * b * g) return 1.0;
    return sq_diff_cdf(g / margin - g, dist);
  };
  // T is increasing in G; T(G) = K is the positive root of
  // B G^2 + (1 + B K - 1/gamma_th) G - K/gamma_th = 0.
  std::vector<double> g_knots;
  for (double k_y : y_knots(dist)) {
    const double q = k_y * inv_threshold;
    const double lin = 1.0 + b * k_y - inv_threshold;
    const double den = lin + std::sqrt(lin * lin + 4.0 * b * q);
    if (den > 0.0) g_knots.push_back(2.0 * q / den);
  }
  if (b > 0.0) g_knots.push_back(inv_threshold / b);
  return std::clamp(average_over_offset(conditional, cfg, rule, g_knots), 0.0, 1.0);
}

double wdma_avg_rate(const SystemConfig& cfg, double power_w, Ue ue, const QuadratureRule& rule) {
  require_power(power_w);
  if (cfg.region_y_offset_m != 0.0) return wdma_avg_rate_numeric(cfg, power_w, ue, rule);

  const auto k = derive_constants(cfg);
  const double b_scale = noise_scale(k, ue, power_w);
  const double dy = cfg.region_y_m;

  // log2(1 + gamma) = log2((a + b u^2) / (c + d u^2)) at separation u.
  auto phi = [&](double x) {
    const double g = g_axis(x, cfg);
    const double bg = b_scale * g;
    const double a = 2.0 * g + bg * g;
    const double b = 1.0 + bg;
    const double c = g + bg * g;
    const double d = bg;
    auto p0 = [&](double y) { return j0_definite(0.0, y, a, b) - j0_definite(0.0, y, c, d); };
    auto p1 = [&](double y) { return j1_definite(0.0, y, a, b) - j1_definite(0.0, y, c, d); };
    return 2.0 * p1(dy) - p1(2.0 * dy) + 2.0 * dy * (p0(2.0 * dy) - p0(dy));
  };
  const double mean_phi = average_over_x(phi, cfg, rule);
  return std::max(0.0, mean_phi / (dy * dy * std::numbers::ln2));
}

double wdma_avg_rate_numeric(const SystemConfig& cfg, double power_w, Ue ue,
                             const QuadratureRule& rule) {
  require_power(power_w);
  const auto k = derive_constants(cfg);
  const auto dist = diff_distribution(cfg);
  const double b_scale = noise_scale(k, ue, power_w);

  auto inner = [&](double x) {
    const double g = g_axis(x, cfg);
    const double bg = b_scale * g;
    const double c = g + bg * g;
    return expect_diff([&](double u) { return std::log1p((g + u * u) / (c + bg * u * u)); },
                       dist, rule);
  };
  return std::max(0.0, average_over_x(inner, cfg, rule) / std::numbers::ln2);
}

double wdma_outage_floor(const SystemConfig& cfg, const QuadratureRule& rule) {
  validate(cfg);
  if (cfg.outage_threshold <= 1.0) return 0.0;
  const auto dist = diff_distribution(cfg);
  const double excess = cfg.outage_threshold - 1.0;
  auto conditional = [&](double g) { return sq_diff_cdf(excess * g, dist); };
  std::vector<double> g_knots;
  for (double k_y : y_knots(dist)) g_knots.push_back(k_y / excess);
  return std::clamp(average_over_offset(conditional, cfg, rule, g_knots), 0.0, 1.0);
}

double wdma_rate_ceiling(const SystemConfig& cfg, const QuadratureRule& rule) {
  validate(cfg);
  const double dy = cfg.region_y_m;

  if (cfg.region_y_offset_m != 0.0) {
    const auto dist = diff_distribution(cfg);
    auto inner = [&](double x) {
      const double g = g_axis(x, cfg);
      return expect_diff([&](double u) { return std::log(2.0 + u * u / g); }, dist, rule);
    };
    return average_over_x(inner, cfg, rule) / std::numbers::ln2;
  }

  // ln(2 + u^2/G) = ln(2G + u^2) - ln G.
  auto phi = [&](double x) {
    const double g = g_axis(x, cfg);
    const double log_g = std::log(g);
    auto p0 = [&](double y) { return j0_definite(0.0, y, 2.0 * g, 1.0) - y * log_g; };
    auto p1 = [&](double y) { return j1_definite(0.0, y, 2.0 * g, 1.0) - 0.5 * y * y * log_g; };
    return 2.0 * p1(dy) - p1(2.0 * dy) + 2.0 * dy * (p0(2.0 * dy) - p0(dy));
  };
  return average_over_x(phi, cfg, rule) / (dy * dy * std::numbers::ln2);
}

}  // namespace pasim
