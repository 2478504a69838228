#include "symvi/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "symvi/errors.hpp"

namespace symvi {

std::string to_string(ConvexityVerdict v) {
  switch (v) {
    case ConvexityVerdict::StrictlyConvex: return "strictly_convex";
    case ConvexityVerdict::ConvexNotStrict: return "convex_not_strict";
    case ConvexityVerdict::NotConvex: return "not_convex";
  }
  return "?";
}

std::string to_string(GuaranteeResult r) {
  switch (r) {
    case GuaranteeResult::UniqueMinimizer: return "unique_minimizer";
    case GuaranteeResult::StationaryOnly: return "stationary_only";
    case GuaranteeResult::NotApplicable: return "not_applicable";
  }
  return "?";
}

std::string to_string(TheoremId t) {
  switch (t) {
    case TheoremId::T1: return "T1";
    case TheoremId::T2: return "T2";
    case TheoremId::T3: return "T3";
    case TheoremId::T4: return "T4";
    case TheoremId::MargossianRKL: return "MargossianRKL";
  }
  return "?";
}

namespace {

constexpr double kOverflowCut = 1e30;

struct GridScan {
  std::vector<double> z;
  std::vector<double> v;       // judged values (w or log w)
  std::vector<double> d;       // second central differences, index 1..n-2
  bool log_domain = false;
  bool has_overflow = false;
};

double local_scale(const std::vector<double>& v, std::size_t i) {
  double s = 1.0;
  for (std::size_t k = i == 0 ? 0 : i - 1; k <= std::min(i + 1, v.size() - 1); ++k) {
    s = std::max(s, std::abs(v[k]));
  }
  return s;
}

void fill_second_diffs(GridScan& g) {
  g.d.assign(g.v.size(), 0.0);
  for (std::size_t i = 1; i + 1 < g.v.size(); ++i) {
    g.d[i] = g.v[i + 1] - 2.0 * g.v[i] + g.v[i - 1];
  }
}

/// Midpoint test over all same-parity grid pairs. Returns the worst
/// normalized violation, if any.
std::optional<NonConvexWitness> midpoint_violation(const GridScan& g) {
  const std::size_t n = g.v.size();
  std::optional<NonConvexWitness> worst;
  double worst_norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; j += 2) {
      const std::size_t m = (i + j) / 2;
      const double avg = 0.5 * (g.v[i] + g.v[j]);
      const double excess = g.v[m] - avg;
      const double scale = std::max({1.0, std::abs(g.v[i]), std::abs(g.v[j]), std::abs(g.v[m])});
      if (excess > 1e-9 * scale) {
        const double normalized = excess / scale;
        if (normalized > worst_norm) {
          worst_norm = normalized;
          worst = NonConvexWitness{g.z[i], g.z[j], excess};
        }
      }
    }
  }
  return worst;
}

bool tails_monotone(const GridScan& g) {
  const std::size_t n = g.d.size();
  if (n < 8) return true;
  const std::size_t q = n / 4;
  // right tail: second differences non-decreasing in z
  for (std::size_t i = n - q; i + 2 < n; ++i) {
    const double slack = 1e-12 * local_scale(g.v, i);
    if (g.d[i + 1] < g.d[i] - slack) return false;
  }
  // left tail: non-decreasing in |z| (i.e. non-increasing in z)
  for (std::size_t i = q; i > 1; --i) {
    const double slack = 1e-12 * local_scale(g.v, i);
    if (g.d[i - 1] < g.d[i] - slack) return false;
  }
  return true;
}

ConvexityReport certify_scan(const GridScan& g, double strict_margin) {
  ConvexityReport report;
  report.grid = {g.z.front(), g.z.back(), static_cast<int>(g.z.size()), g.log_domain};

  const std::size_t nn = g.v.size();
  double dmin = 0.0, dmax = 0.0;
  bool first = true;
  for (std::size_t i = 1; i + 1 < nn; ++i) {
    dmin = first ? g.d[i] : std::min(dmin, g.d[i]);
    dmax = first ? g.d[i] : std::max(dmax, g.d[i]);
    first = false;
  }
  report.min_second_diff = dmin;
  report.max_second_diff = dmax;

  // any negative second difference beyond noise, or midpoint violation
  std::optional<NonConvexWitness> witness = midpoint_violation(g);
  for (std::size_t i = 1; i + 1 < nn && !witness; ++i) {
    if (g.d[i] < -1e-9 * local_scale(g.v, i)) {
      witness = NonConvexWitness{g.z[i - 1], g.z[i + 1], -g.d[i] / 2.0};
    }
  }
  if (witness) {
    report.verdict = ConvexityVerdict::NotConvex;
    report.witness = witness;
    return report;
  }

  bool all_strict = true;
  std::size_t flat_begin = 0, flat_len = 0, best_begin = 0, best_len = 0;
  for (std::size_t i = 1; i + 1 < nn; ++i) {
    if (g.d[i] >= strict_margin * local_scale(g.v, i)) {
      flat_len = 0;
      continue;
    }
    all_strict = false;
    if (flat_len == 0) flat_begin = i;
    ++flat_len;
    if (flat_len > best_len) {
      best_len = flat_len;
      best_begin = flat_begin;
    }
  }
  if (all_strict) {
    report.verdict = ConvexityVerdict::StrictlyConvex;
    return report;
  }
  if (g.log_domain) {
    // a flat log segment with nonzero slope is exp(linear): strictly convex
    bool all_sloped = true;
    for (std::size_t i = 1; i + 1 < nn && all_sloped; ++i) {
      if (g.d[i] >= strict_margin * local_scale(g.v, i)) continue;
      if (std::abs(g.v[i + 1] - g.v[i]) <= 1e-12 * local_scale(g.v, i)) all_sloped = false;
    }
    if (all_sloped) {
      report.verdict = ConvexityVerdict::StrictlyConvex;
      return report;
    }
  }
  report.verdict = ConvexityVerdict::ConvexNotStrict;
  report.flat = FlatSegment{g.z[best_begin - 1], g.z[best_begin + best_len]};
  return report;
}

struct Judged {
  ConvexityReport report;
  GridScan scan;  // the scan the verdict was drawn from (for tail checks)
};

/// Certifies one weight grid. Where |w| overflows the working cut the direct
/// judgment is restricted to the largest symmetric finite window around 0;
/// log w over the full grid may then upgrade the certificate (exp of a convex
/// function is convex, and exp of linear-or-strictly-convex is strictly
/// convex), but a non-convex log never refutes convexity of w itself. The
/// report records the grid actually certified.
Judged judge_weight(const WeightFunction& w, double range, int n, double strict_margin) {
  GridScan g;
  g.z.resize(static_cast<std::size_t>(n));
  g.v.resize(static_cast<std::size_t>(n));
  std::vector<bool> ok(static_cast<std::size_t>(n));
  const double h = 2.0 * range / (n - 1);
  bool overflow = false;
  for (int i = 0; i < n; ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    g.z[k] = -range + i * h;
    g.v[k] = w(g.z[k]);
    ok[k] = std::isfinite(g.v[k]) && std::abs(g.v[k]) <= kOverflowCut;
    if (!ok[k]) overflow = true;
  }
  if (!overflow) {
    fill_second_diffs(g);
    return {certify_scan(g, strict_margin), g};
  }

  // largest symmetric finite window around the center
  std::size_t lo = static_cast<std::size_t>(n) / 2 - 1, hi = static_cast<std::size_t>(n) / 2;
  if (!ok[lo] || !ok[hi]) {
    throw std::runtime_error("weight overflows near the origin; cannot certify convexity");
  }
  while (lo > 0 && hi + 1 < static_cast<std::size_t>(n) && ok[lo - 1] && ok[hi + 1]) {
    --lo;
    ++hi;
  }
  if (hi - lo + 1 < 16) {
    throw std::runtime_error("finite window too small to certify convexity");
  }
  GridScan window;
  window.z.assign(g.z.begin() + static_cast<std::ptrdiff_t>(lo),
                  g.z.begin() + static_cast<std::ptrdiff_t>(hi + 1));
  window.v.assign(g.v.begin() + static_cast<std::ptrdiff_t>(lo),
                  g.v.begin() + static_cast<std::ptrdiff_t>(hi + 1));
  fill_second_diffs(window);
  ConvexityReport window_report = certify_scan(window, strict_margin);
  if (window_report.verdict == ConvexityVerdict::NotConvex) {
    return {window_report, window};
  }

  // only positive weights can overflow here (alpha > 1); judge log w globally
  if (w.sign() <= 0.0) {
    return {window_report, window};
  }
  GridScan logscan;
  logscan.log_domain = true;
  logscan.z = g.z;
  logscan.v.resize(g.z.size());
  for (std::size_t k = 0; k < g.z.size(); ++k) logscan.v[k] = w.log_abs(g.z[k]);
  fill_second_diffs(logscan);
  ConvexityReport log_report = certify_scan(logscan, strict_margin);
  if (log_report.verdict == ConvexityVerdict::NotConvex) {
    // log-domain non-convexity says nothing about w; keep the window verdict
    return {window_report, window};
  }
  return {log_report, logscan};
}

template <class Judge>
ConvexityReport certify_with_extension(const Judge& judge, double range, int n) {
  if (n < 16) throw std::invalid_argument("convexity grid needs n >= 16");
  if (!(range > 0.0)) throw std::invalid_argument("convexity range must be positive");
  double cur_range = range;
  int cur_n = n;
  for (int attempt = 0;; ++attempt) {
    Judged j = judge(cur_range, cur_n);
    if (j.report.verdict == ConvexityVerdict::NotConvex) return j.report;
    if (attempt >= 2 || tails_monotone(j.scan)) return j.report;
    cur_range *= 2.0;  // extend until the tail second differences are monotone
    cur_n *= 2;
  }
}

}  // namespace

ConvexityReport check_convexity(const WeightFunction& w, double range, int n,
                                double strict_margin) {
  return certify_with_extension(
      [&](double r, int m) { return judge_weight(w, r, m, strict_margin); }, range, n);
}

ConvexityReport check_convexity_fn(const std::function<double(double)>& f, double range, int n,
                                   double strict_margin) {
  auto judge = [&](double r, int m) {
    GridScan g;
    g.z.resize(static_cast<std::size_t>(m));
    g.v.resize(static_cast<std::size_t>(m));
    const double h = 2.0 * r / (m - 1);
    for (int i = 0; i < m; ++i) {
      const std::size_t k = static_cast<std::size_t>(i);
      g.z[k] = -r + i * h;
      g.v[k] = f(g.z[k]);
      if (!std::isfinite(g.v[k])) {
        throw std::runtime_error("function not finite on the certification grid");
      }
    }
    fill_second_diffs(g);
    return Judged{certify_scan(g, strict_margin), g};
  };
  return certify_with_extension(judge, range, n);
}

bool check_radially_increasing(const WeightFunction& w, double range, int n, int dim) {
  if (n < 16) throw std::invalid_argument("radial grid needs n >= 16");
  if (dim == 1) {
    double prev = w(0.0);
    for (int i = 1; i < n; ++i) {
      const double cur = w(range * i / (n - 1));
      if (!(cur > prev)) return false;
      prev = cur;
    }
    return true;
  }
  const int rays = 16;
  for (int k = 0; k < rays; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / rays;
    Eigen::VectorXd dir(2);
    dir << std::cos(theta), std::sin(theta);
    double prev = w(Eigen::VectorXd(Eigen::VectorXd::Zero(2)));
    for (int i = 1; i < n; ++i) {
      const Eigen::VectorXd pt = (range * i / (n - 1)) * dir;
      const double cur = w(pt);
      if (!(cur > prev)) return false;
      prev = cur;
    }
  }
  return true;
}

bool check_radially_increasing_fn(const std::function<double(double)>& f, double range, int n) {
  if (n < 16) throw std::invalid_argument("radial grid needs n >= 16");
  double prev = f(0.0);
  for (int i = 1; i < n; ++i) {
    const double cur = f(range * i / (n - 1));
    if (!(cur > prev)) return false;
    prev = cur;
  }
  return true;
}

bool check_support_around_mean(const TargetDensity& p, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const SupportSpec& supp = p.support();
  if (supp.is_full()) return true;
  const double mu = p.mean1();
  for (const Interval& iv : supp.pieces()) {
    const double lo = std::max(iv.lo, mu - eps);
    const double hi = std::min(iv.hi, mu + eps);
    if (hi > lo) return true;  // positive measure, not a boundary touch
  }
  return false;
}

namespace {

bool support_scan(const TargetDensity& p) {
  for (double eps : {1e-3, 1e-2, 1e-1}) {
    if (check_support_around_mean(p, eps)) return true;
  }
  return false;
}

}  // namespace

GuaranteeVerdict verdict(const DivergenceSpec& spec, const LocationFamily& fam,
                         const TargetDensity& p) {
  GuaranteeVerdict out;

  out.symmetry_ok = is_even_symmetric(p, 200, 1e-9);
  if (!out.symmetry_ok) {
    out.result = GuaranteeResult::NotApplicable;
    out.reason = "target is not even symmetric around its mean";
    return out;
  }

  if (spec.kind == DivergenceSpec::Kind::RKL) {
    if (!p.support().is_full()) {
      out.finiteness_ok = false;
      out.result = GuaranteeResult::NotApplicable;
      out.reason = "RKL is infinite: the family has full support but the target does not";
      return out;
    }
    out.finiteness_ok = true;
    if (p.log_concavity() == LogConcavity::SomewhereStrictly) {
      out.result = GuaranteeResult::UniqueMinimizer;
      out.theorem = TheoremId::MargossianRKL;
    } else {
      out.result = GuaranteeResult::StationaryOnly;
    }
    return out;
  }

  // Assumption check: the divergence must be finite at probe locations.
  try {
    const Eigen::VectorXd mu = p.mean();
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(p.dim());
    for (const Eigen::VectorXd& nu : {mu, Eigen::VectorXd(mu - ones), Eigen::VectorXd(mu + ones)}) {
      const double v = objective_simplified(spec, p, fam, nu);
      if (!std::isfinite(v)) throw NonFiniteIntegrand("objective not finite");
    }
    out.finiteness_ok = true;
  } catch (const std::exception& e) {
    out.finiteness_ok = false;
    out.result = GuaranteeResult::NotApplicable;
    out.reason = std::string("divergence is not finite for the probed locations: ") + e.what();
    return out;
  }

  const WeightFunction w = weight_function(spec, fam.base());
  out.convexity = check_convexity(w);
  const double radial_range = out.convexity->grid.hi;
  out.radially_increasing = check_radially_increasing(w, radial_range, 2048, fam.dim());
  out.support_around_mean = support_scan(p);

  const bool is_fkl = spec.kind == DivergenceSpec::Kind::FKL;
  if (out.convexity->verdict == ConvexityVerdict::StrictlyConvex) {
    out.result = GuaranteeResult::UniqueMinimizer;
    out.theorem = is_fkl ? TheoremId::T1 : TheoremId::T3;
  } else if (out.convexity->verdict == ConvexityVerdict::ConvexNotStrict &&
             *out.radially_increasing && *out.support_around_mean) {
    out.result = GuaranteeResult::UniqueMinimizer;
    out.theorem = is_fkl ? TheoremId::T2 : TheoremId::T4;
  } else {
    out.result = GuaranteeResult::StationaryOnly;
  }
  return out;
}

}  // namespace symvi
