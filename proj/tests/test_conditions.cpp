#include <doctest.h>

#include <cmath>
#include <random>

#include "symvi/cases.hpp"
#include "symvi/conditions.hpp"

using namespace symvi;

namespace {
WeightFunction fkl_weight(const BaseDensity& base) {
  return {DivergenceSpec::fkl(), base};
}
WeightFunction alpha_weight(double a, const BaseDensity& base) {
  return {DivergenceSpec::alpha_div(a), base};
}
}  // namespace

TEST_CASE("convexity verdicts for the fkl weights") {
  CHECK(check_convexity(fkl_weight(BaseDensity::gaussian())).verdict ==
        ConvexityVerdict::StrictlyConvex);

  const ConvexityReport laplace = check_convexity(fkl_weight(BaseDensity::laplace()));
  CHECK(laplace.verdict == ConvexityVerdict::ConvexNotStrict);
  REQUIRE(laplace.flat.has_value());
  CHECK(laplace.flat->hi - laplace.flat->lo > 1.0);  // a real flat stretch, not noise

  const ConvexityReport t5 = check_convexity(fkl_weight(BaseDensity::student_t(5.0)));
  CHECK(t5.verdict == ConvexityVerdict::NotConvex);
  REQUIRE(t5.witness.has_value());
  // the witness must reproduce the midpoint violation on re-evaluation
  const WeightFunction w = fkl_weight(BaseDensity::student_t(5.0));
  const double mid = 0.5 * (t5.witness->a + t5.witness->b);
  CHECK(w(mid) > 0.5 * (w(t5.witness->a) + w(t5.witness->b)) + 1e-12);

  CHECK(check_convexity(fkl_weight(BaseDensity::cauchy())).verdict ==
        ConvexityVerdict::NotConvex);
}

TEST_CASE("alpha weight convexity grid (4 bases x 5 alphas)") {
  const std::pair<const char*, BaseDensity> bases[] = {
      {"gaussian", BaseDensity::gaussian()},
      {"laplace", BaseDensity::laplace()},
      {"cauchy", BaseDensity::cauchy()},
      {"student_t5", BaseDensity::student_t(5.0)},
  };
  const double alphas[] = {0.1, 0.5, 0.9, 1.1, 2.0};
  for (const auto& [name, base] : bases) {
    for (double a : alphas) {
      const ConvexityReport rep = check_convexity(alpha_weight(a, base));
      CAPTURE(name);
      CAPTURE(a);
      // no (base, alpha) pair on the shipped grid is convex-but-not-strict
      CHECK(rep.verdict != ConvexityVerdict::ConvexNotStrict);
      if (a == 0.1) CHECK(rep.verdict == ConvexityVerdict::NotConvex);
    }
  }
  // alpha > 1 gives strict convexity for the light-tailed bases
  for (double a : {1.1, 2.0}) {
    CHECK(check_convexity(alpha_weight(a, BaseDensity::gaussian())).verdict ==
          ConvexityVerdict::StrictlyConvex);
    CHECK(check_convexity(alpha_weight(a, BaseDensity::laplace())).verdict ==
          ConvexityVerdict::StrictlyConvex);
  }
  // the heavy-tailed bases need a larger alpha than 1.1
  CHECK(check_convexity(alpha_weight(1.1, BaseDensity::cauchy())).verdict ==
        ConvexityVerdict::NotConvex);
  CHECK(check_convexity(alpha_weight(1.1, BaseDensity::student_t(5.0))).verdict ==
        ConvexityVerdict::NotConvex);
}

TEST_CASE("gaussian alpha=2 weight overflows the grid and is judged in log domain") {
  const ConvexityReport rep = check_convexity(alpha_weight(2.0, BaseDensity::gaussian()));
  CHECK(rep.grid.log_domain);
  CHECK(rep.verdict == ConvexityVerdict::StrictlyConvex);
}

TEST_CASE("overflowing polynomial-power weight is not refuted by its non-convex log") {
  // student-t(5) at alpha = 8: w ~ (1 + z^2/5)^21 overflows the default grid
  // and log w is non-convex in the tails, yet w itself is strictly convex;
  // the verdict must come from the finite window, not the log scan
  const ConvexityReport rep = check_convexity(alpha_weight(8.0, BaseDensity::student_t(5.0)));
  CHECK(rep.verdict == ConvexityVerdict::StrictlyConvex);
  CHECK(!rep.grid.log_domain);
  CHECK(rep.grid.hi < 12.0);  // restricted to the finite window
  CHECK(rep.grid.hi > 10.0);
}

TEST_CASE("case 3.2 weight is only quasi-convex") {
  const ConvexityReport rep = check_convexity(alpha_weight(0.3, BaseDensity::gaussian()));
  CHECK(rep.verdict == ConvexityVerdict::NotConvex);
}

TEST_CASE("strict convexity survives injective affine composition") {
  // f strictly convex, g(x) = a x + b with a != 0 => f(g(x)) strictly convex
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> ua(0.3, 2.5);
  std::uniform_real_distribution<double> ub(-3.0, 3.0);
  const WeightFunction base = fkl_weight(BaseDensity::gaussian());
  REQUIRE(check_convexity(base).verdict == ConvexityVerdict::StrictlyConvex);
  for (int rep = 0; rep < 8; ++rep) {
    const double a = (rep % 2 == 0 ? 1.0 : -1.0) * ua(rng);
    const double b = ub(rng);
    auto composed = [&, a, b](double z) { return base(a * z + b); };
    CHECK(check_convexity_fn(composed, 12.0, 2048).verdict ==
          ConvexityVerdict::StrictlyConvex);
  }
}

TEST_CASE("grid extension triggers when the tail second differences shrink") {
  // log(1+e^z) + log(1+e^{-z}): strictly convex, but its curvature decays so
  // fast that the certificate widens the grid and still cannot resolve
  // strictness in the far tail
  auto softplus_pair = [](double z) {
    auto softplus = [](double t) { return t > 30.0 ? t : std::log1p(std::exp(t)); };
    return softplus(z) + softplus(-z);
  };
  const ConvexityReport rep = check_convexity_fn(softplus_pair, 12.0, 512);
  CHECK(rep.grid.hi == doctest::Approx(48.0));  // two doublings, then capped
  CHECK(rep.verdict != ConvexityVerdict::NotConvex);
}

TEST_CASE("radially increasing checks") {
  CHECK(check_radially_increasing(fkl_weight(BaseDensity::gaussian()), 12.0, 512, 1));
  CHECK(check_radially_increasing(fkl_weight(BaseDensity::laplace()), 12.0, 512, 1));
  CHECK(check_radially_increasing(fkl_weight(BaseDensity::student_t(5.0)), 12.0, 512, 1));
  // negative-valued alpha weight still increases toward zero
  CHECK(check_radially_increasing(alpha_weight(0.7, BaseDensity::laplace()), 12.0, 512, 1));
  CHECK(!check_radially_increasing_fn([](double) { return 1.0; }, 12.0, 512));
  // 2-D gaussian weight along rays
  CHECK(check_radially_increasing(fkl_weight(BaseDensity::gaussian()), 12.0, 256, 2));
}

TEST_CASE("support around the mean") {
  const TargetDensity p1 = TargetDensity::p1();
  CHECK(!check_support_around_mean(p1, 0.1));
  CHECK(!check_support_around_mean(p1, 1.0));
  CHECK(!check_support_around_mean(p1, 3.0));  // boundary touch has measure zero
  CHECK(check_support_around_mean(p1, 3.5));
  CHECK(check_support_around_mean(TargetDensity::p2(), 0.1));
  CHECK(check_support_around_mean(TargetDensity::uniform(-1.0, 1.0), 0.5));
  CHECK(check_support_around_mean(TargetDensity::std_normal(), 1e-3));
  CHECK_THROWS_AS(check_support_around_mean(p1, 0.0), std::invalid_argument);
}

TEST_CASE("guarantee verdicts for the built-in cases") {
  auto run = [](const std::string& id) {
    const CaseDefinition c = make_case(id);
    return verdict(c.divergence, c.family, c.target);
  };
  SUBCASE("1.1: strictly convex fkl weight -> T1") {
    const GuaranteeVerdict v = run("1.1");
    CHECK(v.result == GuaranteeResult::UniqueMinimizer);
    CHECK(*v.theorem == TheoremId::T1);
    CHECK(v.convexity->verdict == ConvexityVerdict::StrictlyConvex);
  }
  SUBCASE("1.2: laplace weight over p1 -> no guarantee") {
    const GuaranteeVerdict v = run("1.2");
    CHECK(v.result == GuaranteeResult::StationaryOnly);
    CHECK(v.convexity->verdict == ConvexityVerdict::ConvexNotStrict);
    CHECK(*v.support_around_mean == false);
  }
  SUBCASE("2.1: laplace weight over p2 -> T2") {
    const GuaranteeVerdict v = run("2.1");
    CHECK(v.result == GuaranteeResult::UniqueMinimizer);
    CHECK(*v.theorem == TheoremId::T2);
    // T2 presupposes the support-around-mean and radial-increase conditions
    CHECK(*v.support_around_mean);
    CHECK(*v.radially_increasing);
  }
  SUBCASE("2.2: student-t weight is not convex -> no guarantee") {
    CHECK(run("2.2").result == GuaranteeResult::StationaryOnly);
  }
  SUBCASE("3.1: strictly convex alpha weight -> T3") {
    const GuaranteeVerdict v = run("3.1");
    CHECK(v.result == GuaranteeResult::UniqueMinimizer);
    CHECK(*v.theorem == TheoremId::T3);
  }
  SUBCASE("3.2 and 4.2: quasi-convex alpha weights -> no guarantee") {
    CHECK(run("3.2").result == GuaranteeResult::StationaryOnly);
    CHECK(run("4.2").result == GuaranteeResult::StationaryOnly);
  }
  SUBCASE("4.1: strictly convex alpha weight -> T3") {
    const GuaranteeVerdict v = run("4.1");
    CHECK(v.result == GuaranteeResult::UniqueMinimizer);
    CHECK(*v.theorem == TheoremId::T3);
  }
}

TEST_CASE("rkl verdicts") {
  // somewhere strictly log-concave full-support target
  const GuaranteeVerdict ok =
      verdict(DivergenceSpec::rkl(), LocationFamily::gaussian(1.0), TargetDensity::std_normal());
  CHECK(ok.result == GuaranteeResult::UniqueMinimizer);
  CHECK(*ok.theorem == TheoremId::MargossianRKL);

  // bounded-support target: the RKL is infinite, assumption violated
  const GuaranteeVerdict bad =
      verdict(DivergenceSpec::rkl(), LocationFamily::gaussian(4.0), TargetDensity::p1());
  CHECK(bad.result == GuaranteeResult::NotApplicable);
  CHECK(!bad.reason.empty());

  // full support but not somewhere-strictly log-concave
  const GuaranteeVerdict weak = verdict(DivergenceSpec::rkl(), LocationFamily::gaussian_iso(2, 1.0),
                                        TargetDensity::bimodal_2d());
  CHECK(weak.result == GuaranteeResult::StationaryOnly);
}

TEST_CASE("2-D fkl setup certifies through the strictly convex gaussian weight") {
  const GuaranteeVerdict v = verdict(DivergenceSpec::fkl(), LocationFamily::gaussian_iso(2, 1.0),
                                     TargetDensity::bimodal_2d());
  CHECK(v.result == GuaranteeResult::UniqueMinimizer);
  CHECK(*v.theorem == TheoremId::T1);
  CHECK(*v.radially_increasing);
}

TEST_CASE("asymmetric target yields not-applicable") {
  const TargetDensity skewed = TargetDensity::uniform_mixture(
      {{0.5, -1.0, 0.0}, {0.5, 0.0, 2.0}}, "skewed");
  const GuaranteeVerdict v =
      verdict(DivergenceSpec::fkl(), LocationFamily::gaussian(1.0), skewed);
  CHECK(v.result == GuaranteeResult::NotApplicable);
  CHECK(!v.symmetry_ok);
}
