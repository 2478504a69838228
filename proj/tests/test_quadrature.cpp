#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "symvi/quadrature.hpp"

using namespace symvi;

namespace {
double phi(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }
}  // namespace

TEST_CASE("gauss-legendre rule sanity") {
  for (int n : {7, 15, 30, 60}) {
    const GlRule& r = gl_rule(n);
    REQUIRE(r.nodes.size() == static_cast<std::size_t>(n));
    double wsum = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
      wsum += r.weights[i];
      CHECK(r.nodes[i] == doctest::Approx(-r.nodes[r.nodes.size() - 1 - i]).epsilon(1e-14));
    }
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
  }
}

TEST_CASE("standard normal integrates to 1 over the real line") {
  const double v = integrate_1d(phi, SupportSpec::full_space(1));
  CHECK(std::abs(v - 1.0) < 1e-10);
}

TEST_CASE("uniform component mass") {
  const double v = integrate_interval([](double) { return 1.0 / 12.0; }, 3.0, 9.0);
  CHECK(v == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("second moment of the standard normal") {
  // oracle: closed form E[X^2] = 1
  const double v = integrate_1d([](double x) { return x * x * phi(x); },
                                SupportSpec::full_space(1));
  CHECK(std::abs(v - 1.0) < 1e-10);
}

TEST_CASE("heavy tail via tan substitution: cauchy mass") {
  auto cauchy = [](double x) { return 1.0 / (std::numbers::pi * (1.0 + x * x)); };
  const double v = integrate_1d(cauchy, SupportSpec::full_space(1));
  CHECK(std::abs(v - 1.0) < 1e-10);
}

TEST_CASE("2-D constants and polynomials") {
  QuadratureConfig cfg;
  CHECK(integrate_2d([](double, double) { return 1.0; }, {0, 1, 0, 1}, cfg) ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(integrate_2d([](double x, double y) { return x * y; }, {0, 1, 0, 1}, cfg) ==
        doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("2-D standard normal over a wide box") {
  auto f = [](double x, double y) { return phi(x) * phi(y); };
  const double v = integrate_2d(f, {-8, 8, -8, 8});
  CHECK(std::abs(v - 1.0) < 1e-8);
}

TEST_CASE("linearity on piecewise polynomials") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (int rep = 0; rep < 10; ++rep) {
    const double c0 = coef(rng), c1 = coef(rng), c2 = coef(rng), c3 = coef(rng);
    auto f = [&](double x) { return c0 + c1 * x + c2 * x * x + (x > 0.5 ? 1.0 : 0.0); };
    auto g = [&](double x) { return c3 * x * x * x - c1 + (x < -0.25 ? 2.0 : 0.0); };
    const double a = coef(rng), b = coef(rng);
    const SupportSpec dom = SupportSpec::intervals({{-1.0, 0.5}, {0.5, 2.0}});
    auto lin = [&](double x) { return a * f(x) + b * g(x); };
    const double lhs = integrate_1d(lin, dom);
    const double rhs = a * integrate_1d(f, dom) + b * integrate_1d(g, dom);
    CHECK(std::abs(lhs - rhs) < 1e-9);
  }
}

TEST_CASE("refinement monotonicity: tighter tolerance moves the result less than the bound") {
  auto f = [](double x) { return std::exp(-x) * std::sin(5.0 * x) + 2.0; };
  QuadratureConfig loose;
  loose.rel_tol = 1e-6;
  loose.abs_tol = 1e-8;
  QuadratureConfig tight = loose;
  tight.rel_tol /= 2.0;
  tight.abs_tol /= 2.0;
  const SupportSpec dom = SupportSpec::intervals({{0.0, 6.0}});
  const double a = integrate_1d(f, dom, loose);
  const double b = integrate_1d(f, dom, tight);
  CHECK(std::abs(a - b) <= std::max(loose.abs_tol, loose.rel_tol * std::abs(a)));
}

TEST_CASE("interval additivity") {
  auto f = [](double x) { return std::cos(x) + x * x; };
  const double whole = integrate_interval(f, -1.0, 2.0);
  const double split = integrate_interval(f, -1.0, 0.3) + integrate_interval(f, 0.3, 2.0);
  CHECK(std::abs(whole - split) < 1e-10);
}

TEST_CASE("non-finite integrand is reported") {
  CHECK_THROWS_AS(integrate_interval([](double x) { return 1.0 / x; }, -1.0, 1.0),
                  NonFiniteIntegrand);
}

TEST_CASE("subdivision budget exhaustion is reported") {
  QuadratureConfig cfg;
  cfg.max_subdivisions = 2;
  cfg.rel_tol = 1e-14;
  cfg.abs_tol = 1e-16;
  auto nasty = [](double x) { return std::sin(300.0 * x) * std::sqrt(std::abs(x - 0.3337)); };
  CHECK_THROWS_AS(integrate_interval(nasty, 0.0, 1.0, cfg), NonConvergence);
}

TEST_CASE("oracle config is strictly tighter") {
  QuadratureConfig base;
  const QuadratureConfig o = oracle_config(base);
  CHECK(o.rel_tol == doctest::Approx(base.rel_tol / 100.0));
  CHECK(o.abs_tol == doctest::Approx(base.abs_tol / 100.0));
  CHECK(o.nodes_per_panel == base.nodes_per_panel * 4);
}

TEST_CASE("config validation") {
  QuadratureConfig cfg;
  cfg.rel_tol = -1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
