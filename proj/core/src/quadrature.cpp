#include "pasim/quadrature.hpp"

#include <numbers>
#include <string>

namespace pasim {

QuadratureRule::QuadratureRule(int order, Weighting weighting) : weighting_(weighting) {
  if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
  const double pi = std::numbers::pi;
  const int n = order;
  nodes_.resize(n);
  weights_.resize(n);
  for (int k = 1; k <= n; ++k) {
    const double theta = (2.0 * k - 1.0) * pi / (2.0 * n);
    nodes_[k - 1] = std::cos(theta);
    if (weighting == Weighting::chebyshev) {
      weights_[k - 1] = (pi / n) * std::sin(theta);
    } else {
      double s = 0.0;
      for (int j = 1; j <= n / 2; ++j) {
        s += std::cos(2.0 * j * theta) / (4.0 * j * j - 1.0);
      }
      weights_[k - 1] = (2.0 / n) * (1.0 - 2.0 * s);
    }
  }
  // cos() is not exactly odd-symmetric in floating point; mirror the upper half.
  for (int k = 0; k < n / 2; ++k) {
    nodes_[n - 1 - k] = -nodes_[k];
    weights_[n - 1 - k] = weights_[k];
  }
  if (n % 2 == 1) nodes_[n / 2] = 0.0;
}

QuadratureRule chebyshev_rule(int order) { return QuadratureRule(order, Weighting::chebyshev); }

QuadratureRule fejer_rule(int order) { return QuadratureRule(order, Weighting::fejer); }

const QuadratureRule& default_rule() {
  static const QuadratureRule rule(kDefaultNodes, Weighting::fejer);
  return rule;
}

const char* to_string(Weighting w) { return w == Weighting::fejer ? "fejer" : "chebyshev"; }

Weighting weighting_from_string(std::string_view name) {
  if (name == "fejer") return Weighting::fejer;
  if (name == "chebyshev") return Weighting::chebyshev;
  throw std::invalid_argument("unknown quadrature weighting: " + std::string(name));
}

namespace {

void check_domain(double a, double b) {
  if (!(a > 0.0)) throw std::domain_error("log-integral requires a > 0");
  if (!(b >= 0.0)) throw std::domain_error("log-integral requires b >= 0");
}

// log1p(w^2) - 2 + 2 atan(w)/w, so that j0(u) = u (ln a + omega(u sqrt(b/a))).
double omega(double w) {
  const double w2 = w * w;
  if (w2 < 1e-4) {
    return w2 * (1.0 / 3.0 + w2 * (-1.0 / 10.0 + w2 * (1.0 / 21.0 - w2 / 36.0)));
  }
  return std::log1p(w2) - 2.0 + 2.0 * std::atan(w) / w;
}

// ((1 + v) log1p(v) - v) / v, so that j1(u) - j1(0) = (u^2/2)(ln a + chi(b u^2 / a)).
double chi(double v) {
  if (v < 1e-4) {
    return v * (0.5 + v * (-1.0 / 6.0 + v * (1.0 / 12.0 - v / 20.0)));
  }
  return ((1.0 + v) * std::log1p(v) - v) / v;
}

double j0_from_zero(double u, double a, double b) {
  if (u == 0.0) return 0.0;
  return u * (std::log(a) + omega(u * std::sqrt(b / a)));
}

double j1_from_zero(double u, double a, double b) {
  if (u == 0.0) return 0.0;
  return 0.5 * u * u * (std::log(a) + chi(b * u * u / a));
}

}  // namespace

double j0(double u, double a, double b) {
  check_domain(a, b);
  return j0_from_zero(u, a, b);
}

double j1(double u, double a, double b) {
  check_domain(a, b);
  if (b <= 1e-300 * a) return 0.5 * u * u * std::log(a);
  const double q = a + b * u * u;
  return (q * std::log(q) - q) / (2.0 * b);
}

double j0_definite(double u_lo, double u_hi, double a, double b) {
  check_domain(a, b);
  return j0_from_zero(u_hi, a, b) - j0_from_zero(u_lo, a, b);
}

double j1_definite(double u_lo, double u_hi, double a, double b) {
  check_domain(a, b);
  return j1_from_zero(u_hi, a, b) - j1_from_zero(u_lo, a, b);
}

}  // namespace pasim
