#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "pasim/quadrature.hpp"
#include "support/oracles.hpp"

using pasim::QuadratureRule;

TEST(Quadrature, NodeFormula) {
  const auto one = pasim::chebyshev_rule(1);
  ASSERT_EQ(one.order(), 1);
  EXPECT_EQ(one.nodes()[0], 0.0);

  const auto two = pasim::chebyshev_rule(2);
  EXPECT_NEAR(two.nodes()[0], std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(two.nodes()[1], -std::sqrt(0.5), 1e-15);

  for (int n : {3, 17, 64, 129}) {
    for (auto rule : {pasim::chebyshev_rule(n), pasim::fejer_rule(n)}) {
      const auto t = rule.nodes();
      for (int k = 1; k <= n; ++k) {
        EXPECT_NEAR(t[k - 1], std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * n)), 1e-15);
        if (k > 1) EXPECT_LT(t[k - 1], t[k - 2]);
        EXPECT_EQ(t[k - 1], -t[n - k]);
        EXPECT_EQ(rule.weights()[k - 1], rule.weights()[n - k]);
        EXPECT_GT(rule.weights()[k - 1], 0.0);
      }
    }
  }
}

TEST(Quadrature, RejectsEmptyRule) {
  EXPECT_THROW(pasim::chebyshev_rule(0), std::invalid_argument);
  EXPECT_THROW(pasim::fejer_rule(-3), std::invalid_argument);
}

TEST(Quadrature, ChebyshevWeightsConstant) {
  const auto rule = pasim::chebyshev_rule(64);
  EXPECT_NEAR(pasim::integrate_unit([](double) { return 1.0; }, rule), 2.0, 1e-3);
}

TEST(Quadrature, FejerIsExactForPolynomials) {
  const int n = 16;
  const auto rule = pasim::fejer_rule(n);
  for (int deg = 0; deg < n; ++deg) {
    const double exact = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1);
    EXPECT_NEAR(pasim::integrate_unit([&](double t) { return std::pow(t, deg); }, rule), exact,
                1e-14)
        << "degree " << deg;
  }
}

TEST(Quadrature, IntervalMapping) {
  const auto& rule = pasim::default_rule();
  EXPECT_EQ(rule.order(), pasim::kDefaultNodes);
  EXPECT_NEAR(pasim::integrate_interval([](double) { return 3.5; }, -2.0, 5.0, rule), 24.5,
              24.5e-3);
  EXPECT_NEAR(pasim::integrate_interval([](double x) { return std::sin(x); }, 0.0,
                                        std::numbers::pi, rule),
              2.0, 1e-4);
  EXPECT_NEAR(pasim::integrate_interval([](double x) { return std::sin(x); }, 0.0,
                                        std::numbers::pi, pasim::chebyshev_rule(64)),
              2.0, 1e-3);
  EXPECT_EQ(pasim::integrate_interval([](double) { return 1e300; }, 4.0, 4.0, rule), 0.0);
}

TEST(Quadrature, NonFiniteIntegrandNamesNode) {
  const auto rule = pasim::fejer_rule(3);
  try {
    pasim::integrate_unit([](double t) { return t == 0.0 ? std::nan("") : 1.0; }, rule);
    FAIL() << "expected IntegrationError";
  } catch (const pasim::IntegrationError& e) {
    EXPECT_NE(std::string(e.what()).find("node 2"), std::string::npos) << e.what();
  }
}

TEST(Quadrature, WeightingNames) {
  EXPECT_EQ(pasim::weighting_from_string("fejer"), pasim::Weighting::fejer);
  EXPECT_EQ(pasim::weighting_from_string(pasim::to_string(pasim::Weighting::chebyshev)),
            pasim::Weighting::chebyshev);
  EXPECT_THROW(pasim::weighting_from_string("gauss"), std::invalid_argument);
}

TEST(LogIntegrals, PointValues) {
  const double a = 2.5;
  const double b = 0.7;
  EXPECT_NEAR(pasim::j1(0.0, a, b), (a * std::log(a) - a) / (2.0 * b), 1e-14);
  EXPECT_EQ(pasim::j0(0.0, a, b), 0.0);
  EXPECT_NEAR(pasim::j0(3.0, a, 0.0), 3.0 * std::log(a), 1e-14);
  EXPECT_NEAR(pasim::j1(3.0, a, 0.0), 4.5 * std::log(a), 1e-14);
  const double u = 1.3;
  const double q = a + b * u * u;
  EXPECT_NEAR(pasim::j0(u, a, b),
              u * std::log(q) - 2.0 * u + 2.0 * std::sqrt(a / b) * std::atan(u * std::sqrt(b / a)),
              1e-13);
  EXPECT_NEAR(pasim::j1(u, a, b), (q * std::log(q) - q) / (2.0 * b), 1e-13);
}

TEST(LogIntegrals, DomainErrors) {
  EXPECT_THROW(pasim::j0(1.0, 0.0, 1.0), std::domain_error);
  EXPECT_THROW(pasim::j1(1.0, -1.0, 1.0), std::domain_error);
  EXPECT_THROW(pasim::j0_definite(0.0, 1.0, 1.0, -1.0), std::domain_error);
}

TEST(LogIntegrals, DerivativeMatchesIntegrand) {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> ua(0.1, 50.0);
  std::uniform_real_distribution<double> ub(0.01, 5.0);
  std::uniform_real_distribution<double> uu(0.05, 20.0);
  for (int i = 0; i < 50; ++i) {
    const double a = ua(gen);
    const double b = ub(gen);
    const double u = uu(gen);
    const double h = 1e-5 * std::max(1.0, u);
    const double d0 = (pasim::j0(u + h, a, b) - pasim::j0(u - h, a, b)) / (2.0 * h);
    const double d1 = (pasim::j1_definite(u - h, u + h, a, b)) / (2.0 * h);
    EXPECT_NEAR(d0, std::log(a + b * u * u), 1e-6) << "a=" << a << " b=" << b << " u=" << u;
    EXPECT_NEAR(d1, u * std::log(a + b * u * u), 1e-6 * std::max(1.0, u))
        << "a=" << a << " b=" << b << " u=" << u;
  }
}

TEST(LogIntegrals, DefiniteMatchesAdaptiveQuadrature) {
  std::mt19937_64 gen(77);
  std::uniform_real_distribution<double> loga(-6.0, 6.0);
  std::uniform_real_distribution<double> logb(-14.0, 2.0);
  std::uniform_real_distribution<double> uu(0.0, 40.0);
  for (int i = 0; i < 40; ++i) {
    const double a = std::pow(10.0, loga(gen));
    const double b = std::pow(10.0, logb(gen));
    double lo = uu(gen);
    double hi = uu(gen);
    if (lo > hi) std::swap(lo, hi);
    const double i0 = oracle::gk([&](double u) { return std::log(a + b * u * u); }, lo, hi);
    const double i1 = oracle::gk([&](double u) { return u * std::log(a + b * u * u); }, lo, hi);
    EXPECT_NEAR(pasim::j0_definite(lo, hi, a, b), i0, 1e-10 * std::max(1.0, std::abs(i0)));
    EXPECT_NEAR(pasim::j1_definite(lo, hi, a, b), i1, 1e-10 * std::max(1.0, std::abs(i1)));
  }
}

TEST(LogIntegrals, TinyCurvatureStaysAccurate) {
  // b u^2 / a around 1e-12: the printed j1 loses every digit here.
  const double a = 9.0 + 1e-3;
  const double b = 1e-12;
  const double exact = 0.5 * 400.0 * std::log(a) +
                       oracle::gk([&](double u) { return u * std::log1p(b * u * u / a); }, 0.0, 20.0);
  EXPECT_NEAR(pasim::j1_definite(0.0, 20.0, a, b), exact, 1e-12 * exact);
  EXPECT_NEAR(pasim::j1_definite(0.0, 20.0, a, 0.0), 200.0 * std::log(a), 1e-12);
}
