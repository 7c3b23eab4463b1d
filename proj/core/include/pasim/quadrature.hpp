#pragma once

#include <cmath>
#include <span>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pasim {

inline constexpr int kDefaultNodes = 64;

/// Weights attached to the Chebyshev nodes t_k = cos((2k-1) pi / 2N).
///
/// `chebyshev` uses (pi/N) sqrt(1 - t_k^2), i.e. first-kind Gauss-Chebyshev
/// applied to f(t) sqrt(1 - t^2). It converges only as O(N^-2) whenever f is
/// nonzero at t = +-1.
///
/// `fejer` keeps the same nodes with Fejer's first-rule weights, which are
/// exact for polynomials of degree < N. This is the default.
enum class Weighting { fejer, chebyshev };

class QuadratureRule {
 public:
  /// Throws std::invalid_argument for order < 1.
  QuadratureRule(int order, Weighting weighting);

  int order() const noexcept { return static_cast<int>(nodes_.size()); }
  Weighting weighting() const noexcept { return weighting_; }

  /// Strictly decreasing in k.
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

 private:
  Weighting weighting_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

QuadratureRule chebyshev_rule(int order);
QuadratureRule fejer_rule(int order);

/// Fejer rule with kDefaultNodes nodes, built once.
const QuadratureRule& default_rule();

const char* to_string(Weighting w);
Weighting weighting_from_string(std::string_view name);

class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Approximates the integral of f over [-1, 1].
template <class F>
double integrate_unit(F&& f, const QuadratureRule& rule) {
  const auto t = rule.nodes();
  const auto w = rule.weights();
  double sum = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double v = f(t[k]);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "non-finite integrand at node " << (k + 1) << " (t = " << t[k] << ")";
      throw IntegrationError(msg.str());
    }
    sum += w[k] * v;
  }
  return sum;
}

/// Integral of f over [a, b] through the affine map x = a + (b - a)(t + 1)/2.
template <class F>
double integrate_interval(F&& f, double a, double b, const QuadratureRule& rule) {
  if (a == b) return 0.0;
  const double half = 0.5 * (b - a);
  return half * integrate_unit([&](double t) { return f(a + half * (t + 1.0)); }, rule);
}

// Closed-form antiderivatives for u >= 0, a > 0, b >= 0:
//   j0' = ln(a + b u^2),  j0(u) = u ln(a+bu^2) - 2u + 2 sqrt(a/b) atan(u sqrt(b/a))
//   j1' = u ln(a + b u^2), j1(u) = ((a+bu^2) ln(a+bu^2) - (a+bu^2)) / (2b)
// At b = 0 the limits u ln a and (u^2/2) ln a are returned. Both throw
// std::domain_error for a <= 0.
double j0(double u, double a, double b);
double j1(double u, double a, double b);

/// j0(u_hi) - j0(u_lo), evaluated without cancellation for b u^2 << a.
double j0_definite(double u_lo, double u_hi, double a, double b);
/// j1(u_hi) - j1(u_lo); finite and accurate for every b >= 0, including b = 0.
double j1_definite(double u_lo, double u_hi, double a, double b);

}  // namespace pasim
