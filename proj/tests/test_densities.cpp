#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "symvi/location_family.hpp"
#include "symvi/quadrature.hpp"
#include "symvi/target_density.hpp"

using namespace symvi;

namespace {

Eigen::VectorXd vec1(double x) { return Eigen::VectorXd::Constant(1, x); }

double target_mass(const TargetDensity& p) {
  if (p.support().is_full() && p.dim() == 1) {
    return integrate_1d([&](double x) { return p.pdf1(x); }, SupportSpec::full_space(1));
  }
  return integrate_1d([&](double x) { return p.pdf1(x); }, p.support());
}

}  // namespace

TEST_CASE("p1 pdf values and mass") {
  const TargetDensity p1 = TargetDensity::p1();
  CHECK(p1.pdf1(-6.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  CHECK(p1.pdf1(0.0) == 0.0);
  CHECK(p1.pdf1(2.9) == 0.0);
  CHECK(p1.pdf1(3.0) == doctest::Approx(1.0 / 12.0));
  CHECK(p1.mean1() == doctest::Approx(0.0));
  CHECK(std::abs(target_mass(p1) - 1.0) < 1e-8);
  CHECK(p1.log_concavity() == LogConcavity::No);
  REQUIRE(p1.support().pieces().size() == 2);
  CHECK(p1.support().pieces()[0].lo == doctest::Approx(-9.0));
  CHECK(p1.support().pieces()[1].hi == doctest::Approx(9.0));
}

TEST_CASE("p2 pdf values and mass") {
  const TargetDensity p2 = TargetDensity::p2();
  // 0.01 weight over an interval of length 0.6
  CHECK(p2.pdf1(0.0) == doctest::Approx(0.01 / 0.6).epsilon(1e-14));
  // 0.99 weight on the p1 component
  CHECK(p2.pdf1(-6.0) == doctest::Approx(0.99 / 12.0).epsilon(1e-14));
  CHECK(std::abs(target_mass(p2) - 1.0) < 1e-8);
  CHECK(p2.support().contains(0.0));
  CHECK(!p2.support().contains(1.0));
  CHECK(p2.log_concavity() == LogConcavity::No);
}

TEST_CASE("single uniform is log-concave, mixtures are not") {
  CHECK(TargetDensity::uniform(-1.0, 1.0).log_concavity() == LogConcavity::Concave);
  CHECK(TargetDensity::std_normal().log_concavity() == LogConcavity::SomewhereStrictly);
}

TEST_CASE("mixture constructor validation") {
  CHECK_THROWS_AS(TargetDensity::uniform_mixture({{0.5, 0.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(TargetDensity::uniform_mixture({{1.0, 2.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(TargetDensity::uniform_mixture({}), std::invalid_argument);
}

TEST_CASE("base densities are exactly even and positive") {
  const BaseDensity bases[] = {BaseDensity::gaussian(), BaseDensity::laplace(),
                               BaseDensity::student_t(5.0), BaseDensity::cauchy()};
  for (const BaseDensity& q0 : bases) {
    for (int i = 0; i < 100; ++i) {
      const double x = -12.0 + 24.0 * i / 99.0;
      CHECK(q0.pdf(x) == q0.pdf(-x));  // exact, by construction
      CHECK(q0.pdf(x) > 0.0);
    }
    const double mass = integrate_1d([&](double x) { return q0.pdf(x); },
                                     SupportSpec::full_space(1));
    CHECK(std::abs(mass - 1.0) < 1e-8);
  }
}

TEST_CASE("family pdf equals the textbook pdf under the canonical parameter") {
  const double xs[] = {-4.2, -1.0, 0.0, 0.7, 3.3};
  const double nus[] = {-2.0, 0.0, 1.5};

  SUBCASE("gaussian variance 4") {
    const LocationFamily fam = LocationFamily::gaussian(4.0);
    CHECK(fam.param().name == "variance");
    for (double nu : nus) {
      for (double x : xs) {
        const double sigma = 2.0;
        const double ref = std::exp(-0.5 * (x - nu) * (x - nu) / (sigma * sigma)) /
                           (sigma * std::sqrt(2.0 * std::numbers::pi));
        CHECK(fam.pdf1(nu, x) == doctest::Approx(ref).epsilon(1e-12));
      }
    }
  }
  SUBCASE("laplace b = 4") {
    const LocationFamily fam = LocationFamily::laplace(4.0);
    for (double nu : nus) {
      for (double x : xs) {
        const double ref = std::exp(-std::abs(x - nu) / 4.0) / 8.0;
        CHECK(fam.pdf1(nu, x) == doctest::Approx(ref).epsilon(1e-12));
      }
    }
    // q_nu(x) = (1/8) e^{-|x-nu|/4}: at nu=0, x=4
    CHECK(fam.pdf1(0.0, 4.0) == doctest::Approx(std::exp(-1.0) / 8.0).epsilon(1e-12));
  }
  SUBCASE("student-t(5) scale 1.5") {
    const LocationFamily fam = LocationFamily::student_t(5.0, 1.5);
    const BaseDensity t5 = BaseDensity::student_t(5.0);
    for (double x : xs) {
      const double ref = t5.pdf((x - 0.5) / 1.5) / 1.5;
      CHECK(fam.pdf1(0.5, x) == doctest::Approx(ref).epsilon(1e-12));
    }
  }
  SUBCASE("cauchy scale 2") {
    const LocationFamily fam = LocationFamily::cauchy(2.0);
    for (double x : xs) {
      const double ref = 1.0 / (std::numbers::pi * 2.0 * (1.0 + (x / 2.0) * (x / 2.0)));
      CHECK(fam.pdf1(0.0, x) == doctest::Approx(ref).epsilon(1e-12));
    }
  }
}

TEST_CASE("standard normal family mode value") {
  const LocationFamily fam = LocationFamily::gaussian(1.0);
  CHECK(fam.pdf1(0.0, 0.0) ==
        doctest::Approx(1.0 / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("family members are even around their location") {
  const LocationFamily fams[] = {LocationFamily::gaussian(4.0), LocationFamily::laplace(4.0),
                                 LocationFamily::student_t(5.0, 1.0),
                                 LocationFamily::cauchy(1.0)};
  for (const LocationFamily& fam : fams) {
    for (int i = 0; i < 50; ++i) {
      const double x = -6.0 + 12.0 * i / 49.0;
      const double nu = 0.8;
      CHECK(fam.pdf1(nu, nu + x) == doctest::Approx(fam.pdf1(nu, nu - x)).epsilon(1e-14));
    }
  }
}

TEST_CASE("family mass is 1") {
  const LocationFamily fams[] = {LocationFamily::gaussian(4.0), LocationFamily::laplace(4.0),
                                 LocationFamily::student_t(5.0, 1.0),
                                 LocationFamily::cauchy(1.0)};
  for (const LocationFamily& fam : fams) {
    const double mass = integrate_1d([&](double x) { return fam.pdf1(1.3, x); },
                                     SupportSpec::full_space(1), {}, {1.3, fam.scale().sqrt1()});
    CHECK(std::abs(mass - 1.0) < 1e-8);
  }
}

TEST_CASE("scale matrix invariants") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int rep = 0; rep < 20; ++rep) {
    Eigen::MatrixXd a(2, 2);
    a << u(rng), u(rng), u(rng), u(rng);
    const ScaleMatrix s(a * a.transpose() + 0.5 * Eigen::MatrixXd::Identity(2, 2));
    const Eigen::MatrixXd recon =
        s.inverse_sqrt() * s.inverse_sqrt() * s.matrix();
    CHECK((recon - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK_THROWS_AS(ScaleMatrix(Eigen::MatrixXd::Zero(2, 2)), std::invalid_argument);
  const Eigen::MatrixXd neg = -Eigen::MatrixXd::Identity(2, 2);
  CHECK_THROWS_AS(ScaleMatrix{neg}, std::invalid_argument);
}

TEST_CASE("family_pdf dimension mismatch") {
  const LocationFamily fam = LocationFamily::gaussian(1.0);
  Eigen::VectorXd nu2 = Eigen::VectorXd::Zero(2);
  CHECK_THROWS_AS(family_pdf(fam, nu2, vec1(0.0)), DimensionMismatch);
}

TEST_CASE("even symmetry checks") {
  CHECK(is_even_symmetric(TargetDensity::p1(), 200, 1e-12));
  CHECK(is_even_symmetric(TargetDensity::p2(), 200, 1e-12));
  // asymmetric about the declared point 0
  CHECK(!is_even_symmetric_about(TargetDensity::uniform(0.0, 1.0), vec1(0.0), 200, 1e-9));
  // 2-D bimodal mixture about mu = (2, 1)
  CHECK(is_even_symmetric(TargetDensity::bimodal_2d(), 200, 1e-12));
}

TEST_CASE("bimodal 2-D mass") {
  const TargetDensity p = TargetDensity::bimodal_2d();
  const Box box = p.effective_box();
  Eigen::VectorXd pt(2);
  const double mass = integrate_2d(
      [&](double x, double y) {
        Eigen::VectorXd q(2);
        q << x, y;
        return p.pdf(q);
      },
      {box.lo(0), box.hi(0), box.lo(1), box.hi(1)},
      QuadratureConfig{1e-9, 1e-11, 4000, 15, 1e-14});
  CHECK(std::abs(mass - 1.0) < 1e-8);
}

TEST_CASE("support spec validation and clipping") {
  CHECK_THROWS_AS(SupportSpec::intervals({{0.0, 2.0}, {1.0, 3.0}}), std::invalid_argument);
  const SupportSpec s = SupportSpec::intervals({{-9.0, -3.0}, {3.0, 9.0}});
  const SupportSpec c = s.clip(-4.0, 5.0);
  REQUIRE(c.pieces().size() == 2);
  CHECK(c.pieces()[0].lo == doctest::Approx(-4.0));
  CHECK(c.pieces()[0].hi == doctest::Approx(-3.0));
  CHECK(c.pieces()[1].lo == doctest::Approx(3.0));
  CHECK(c.pieces()[1].hi == doctest::Approx(5.0));
  CHECK(s.clip(-1.0, 1.0).pieces().empty());
}
