#include "pasim/geometry.hpp"

#include <cmath>

namespace pasim {

DiffDistribution diff_distribution(const SystemConfig& cfg) {
  return DiffDistribution{cfg.region_y_m, cfg.region_y_offset_m};
}

double g_axis(double x, const SystemConfig& cfg) {
  const double dx = x - 0.5 * cfg.region_x_m;
  return dx * dx + cfg.pa_height_m * cfg.pa_height_m;
}

WdmaPlacement sample_wdma(const SystemConfig& cfg, TrialStream& rng) {
  const double s = cfg.region_y_offset_m;
  const double dy = cfg.region_y_m;
  WdmaPlacement p;
  p.x_ue1 = rng.uniform(0.0, cfg.region_x_m);
  p.x_ue2 = rng.uniform(0.0, cfg.region_x_m);
  p.y_ue1 = rng.uniform(s, s + dy);
  p.y_ue2 = -rng.uniform(s, s + dy);
  return p;
}

NomaPlacement sample_noma(const SystemConfig& cfg, TrialStream& rng) {
  const double s = cfg.region_y_offset_m;
  const double dy = cfg.region_y_m;
  const double c = 0.5 * cfg.region_x_m;
  const double x1 = rng.uniform(0.0, cfg.region_x_m);
  const double x2 = rng.uniform(0.0, cfg.region_x_m);
  NomaPlacement p;
  if (std::abs(x1 - c) <= std::abs(x2 - c)) {
    p.x_near = x1;
    p.x_far = x2;
  } else {
    p.x_near = x2;
    p.x_far = x1;
  }
  p.y_near = rng.uniform(s, s + dy);
  p.y_far = -rng.uniform(s, s + dy);
  return p;
}

double diff_pdf(double u, const DiffDistribution& dist) {
  const double d = dist.half_width;
  const double v = u - dist.lower();
  if (v <= 0.0 || v > 2.0 * d) return 0.0;
  if (v <= d) return v / (d * d);
  return (2.0 * d - v) / (d * d);
}

double diff_cdf(double u, const DiffDistribution& dist) {
  const double d = dist.half_width;
  const double v = u - dist.lower();
  if (v <= 0.0) return 0.0;
  if (v <= d) return v * v / (2.0 * d * d);
  if (v <= 2.0 * d) {
    const double r = 2.0 * d - v;
    return 1.0 - r * r / (2.0 * d * d);
  }
  return 1.0;
}

double sq_diff_cdf(double y, const DiffDistribution& dist) {
  if (y <= 0.0) return 0.0;
  if (dist.offset != 0.0) return diff_cdf(std::sqrt(y), dist);
  const double d2 = dist.half_width * dist.half_width;
  if (y <= d2) return y / (2.0 * d2);
  if (y <= 4.0 * d2) return (4.0 * dist.half_width * std::sqrt(y) - y) / (2.0 * d2) - 1.0;
  return 1.0;
}

double near_coord_cdf_g(double g, const SystemConfig& cfg) {
  const double dx = cfg.region_x_m;
  if (g <= 0.0) return 0.0;
  if (g >= 0.25 * dx * dx) return 1.0;
  return 4.0 * std::sqrt(g) / dx - 4.0 * g / (dx * dx);
}

double near_pdf(double x, const SystemConfig& cfg) {
  const double dx = cfg.region_x_m;
  if (x < 0.0 || x > dx) return 0.0;
  return 2.0 / dx - 4.0 * std::abs(x - 0.5 * dx) / (dx * dx);
}

double far_pdf(double x, const SystemConfig& cfg) {
  const double dx = cfg.region_x_m;
  if (x < 0.0 || x > dx) return 0.0;
  return 4.0 * std::abs(x - 0.5 * dx) / (dx * dx);
}

}  // namespace pasim
