#pragma once

#include "pasim/config.hpp"
#include "pasim/quadrature.hpp"
#include "pasim/rng.hpp"

namespace pasim {

/// One WDMA realization. PA i sits at (region_x_m / 2, y_ue_i, h) and is
/// therefore not stored.
struct WdmaPlacement {
  double x_ue1 = 0.0;
  double x_ue2 = 0.0;
  double y_ue1 = 0.0;  ///< in [s, s + D_y]
  double y_ue2 = 0.0;  ///< in [-s - D_y, -s]
};

/// One NOMA realization. The near user is the one whose x coordinate is
/// closer to the waveguide; the single PA sits at (region_x_m / 2, y_near, h).
struct NomaPlacement {
  double x_near = 0.0;
  double x_far = 0.0;
  double y_near = 0.0;  ///< in [s, s + D_y]
  double y_far = 0.0;   ///< in [-s - D_y, -s]
};

/// Law of U = y_upper - y_lower with y_upper ~ U(s, s + D) and
/// y_lower ~ U(-s - D, -s): triangular on [2s, 2s + 2D], mode 2s + D.
struct DiffDistribution {
  double half_width = 0.0;  ///< D (region_y_m)
  double offset = 0.0;      ///< s (region_y_offset_m)

  double lower() const noexcept { return 2.0 * offset; }
  double mode() const noexcept { return 2.0 * offset + half_width; }
  double upper() const noexcept { return 2.0 * offset + 2.0 * half_width; }
};

DiffDistribution diff_distribution(const SystemConfig& cfg);

/// G(x) = (x - D_x/2)^2 + h^2, the squared PA-to-user distance of a user
/// directly under its PA's waveguide row.
double g_axis(double x, const SystemConfig& cfg);

WdmaPlacement sample_wdma(const SystemConfig& cfg, TrialStream& rng);
NomaPlacement sample_noma(const SystemConfig& cfg, TrialStream& rng);

double diff_pdf(double u, const DiffDistribution& dist);
double diff_cdf(double u, const DiffDistribution& dist);

/// CDF of Y = U^2. For s = 0 this is the four-piece closed form
///   y/(2D^2) on (0, D^2],  (4D sqrt(y) - y)/(2D^2) - 1 on (D^2, 4D^2].
double sq_diff_cdf(double y, const DiffDistribution& dist);

/// CDF of (x_near - D_x/2)^2.
double near_coord_cdf_g(double g, const SystemConfig& cfg);

/// Densities of the ordered x coordinates; zero outside [0, D_x].
double near_pdf(double x, const SystemConfig& cfg);
double far_pdf(double x, const SystemConfig& cfg);

/// E[f(U)] with each linear leg of the triangular density integrated by `rule`.
template <class F>
double expect_diff(F&& f, const DiffDistribution& dist, const QuadratureRule& rule) {
  const double d2 = dist.half_width * dist.half_width;
  const double lo = dist.lower();
  const double mid = dist.mode();
  const double hi = dist.upper();
  const double rising =
      integrate_interval([&](double u) { return (u - lo) / d2 * f(u); }, lo, mid, rule);
  const double falling =
      integrate_interval([&](double u) { return (hi - u) / d2 * f(u); }, mid, hi, rule);
  return rising + falling;
}

}  // namespace pasim
