#pragma once

#include <functional>
#include <optional>
#include <string>

#include "symvi/divergence.hpp"
#include "symvi/location_family.hpp"
#include "symvi/target_density.hpp"

namespace symvi {

enum class ConvexityVerdict { StrictlyConvex, ConvexNotStrict, NotConvex };

/// Pair witnessing a midpoint-convexity violation:
/// w((a+b)/2) > (w(a)+w(b))/2 + tol on re-evaluation.
struct NonConvexWitness {
  double a = 0.0, b = 0.0;
  double violation = 0.0;  // w(mid) - (w(a)+w(b))/2
};

/// Flat segment on which second differences fall below the strict margin.
struct FlatSegment {
  double lo = 0.0, hi = 0.0;
};

struct ConvexityGrid {
  double lo = 0.0, hi = 0.0;
  int n = 0;
  bool log_domain = false;  // judged on log w where |w| overflowed 1e30
};

struct ConvexityReport {
  ConvexityVerdict verdict = ConvexityVerdict::NotConvex;
  ConvexityGrid grid;
  std::optional<NonConvexWitness> witness;      // set for NotConvex
  std::optional<FlatSegment> flat;              // set for ConvexNotStrict
  double min_second_diff = 0.0;                 // raw, over the grid judged
  double max_second_diff = 0.0;
};

std::string to_string(ConvexityVerdict v);

/// Numerical convexity certificate on a symmetric grid [-range, range] with n
/// points: a midpoint test over all grid pairs plus a second-central-
/// difference scan. StrictlyConvex requires every second difference to clear
/// strict_margin relative to the local |w| scale; ConvexNotStrict tolerates
/// flat stretches; a single verified violation yields NotConvex. If the
/// verdict is convex but the tail second differences are not monotone in |z|,
/// the range is doubled (up to 4x) and the certificate re-run; the report
/// records the grid used. This is a certificate on a grid, not a proof.
ConvexityReport check_convexity(const WeightFunction& w, double range = 12.0, int n = 2048,
                                double strict_margin = 1e-7);

/// Same certificate for an arbitrary 1-D function (no overflow fallback).
ConvexityReport check_convexity_fn(const std::function<double(double)>& f, double range,
                                   int n, double strict_margin = 1e-7);

/// True iff w is strictly increasing along |x| on the grid: over [0, range]
/// in 1-D, along 16 rays in 2-D.
bool check_radially_increasing(const WeightFunction& w, double range, int n, int dim = 1);
bool check_radially_increasing_fn(const std::function<double(double)>& f, double range, int n);

/// Exact interval arithmetic on the support: does the eps-ball around the
/// mean intersect supp(p) in a set of positive measure? Full-space supports
/// always qualify.
bool check_support_around_mean(const TargetDensity& p, double eps);

enum class GuaranteeResult { UniqueMinimizer, StationaryOnly, NotApplicable };
enum class TheoremId { T1, T2, T3, T4, MargossianRKL };

std::string to_string(GuaranteeResult r);
std::string to_string(TheoremId t);

struct GuaranteeVerdict {
  GuaranteeResult result = GuaranteeResult::NotApplicable;
  std::optional<TheoremId> theorem;   // set for UniqueMinimizer
  std::string reason;                 // set for NotApplicable

  // condition sub-reports
  std::optional<ConvexityReport> convexity;
  std::optional<bool> radially_increasing;
  std::optional<bool> support_around_mean;
  bool symmetry_ok = false;
  bool finiteness_ok = false;
};

/// Dispatches the sufficient conditions for a unique global minimizer at the
/// mean. FKL: strict convexity of -log q0 (T1), else convexity + radial
/// increase + support-around-mean (T2). Alpha: the same on the alpha weight
/// (T3/T4). RKL: somewhere-strict log-concavity of the target. Symmetry or
/// finiteness failures yield NotApplicable with the reason.
GuaranteeVerdict verdict(const DivergenceSpec& spec, const LocationFamily& fam,
                         const TargetDensity& p);

}  // namespace symvi
