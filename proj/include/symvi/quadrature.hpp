#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "symvi/errors.hpp"
#include "symvi/support.hpp"

namespace symvi {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 4000;
  int nodes_per_panel = 15;
  double tail_mass = 1e-14;  // eps_tail: mass bound used when truncating tails

  void validate() const;
};

/// The same engine run 100x stricter with 4x node density; used as the
/// independent-configuration oracle for derived test values.
QuadratureConfig oracle_config(const QuadratureConfig& cfg = {});

/// Substitution x = center + scale * tan(theta) used for full-space domains.
struct RealLineMap {
  double center = 0.0;
  double scale = 1.0;
};

/// Gauss-Legendre rule on [-1, 1].
struct GlRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GlRule& gl_rule(int n);

namespace detail {

template <class F>
double gl_panel(const F& f, double a, double b, const GlRule& rule) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double x = mid + half * rule.nodes[k];
    const double v = f(x);
    if (!std::isfinite(v)) {
      throw NonFiniteIntegrand("integrand not finite at x = " + std::to_string(x));
    }
    acc += rule.weights[k] * v;
  }
  return acc * half;
}

struct Segment {
  double a, b;
  double coarse;  // single-panel estimate
  double fine;    // two-half-panel estimate
  double err;     // |coarse - fine|
  bool operator<(const Segment& o) const { return err < o.err; }
};

template <class F>
Segment make_segment(const F& f, double a, double b, const GlRule& rule) {
  Segment s;
  s.a = a;
  s.b = b;
  s.coarse = gl_panel(f, a, b, rule);
  const double m = 0.5 * (a + b);
  s.fine = gl_panel(f, a, m, rule) + gl_panel(f, m, b, rule);
  s.err = std::abs(s.coarse - s.fine);
  return s;
}

/// Globally adaptive refinement over a set of seed intervals: repeatedly
/// bisect the segment with the largest error estimate until the summed
/// estimate meets tolerance or the budget runs out.
template <class F>
double adapt(const F& f, const std::vector<Interval>& seeds, const QuadratureConfig& cfg) {
  const GlRule& rule = gl_rule(cfg.nodes_per_panel);
  std::priority_queue<Segment> queue;
  double total = 0.0, total_err = 0.0;
  for (const Interval& iv : seeds) {
    if (!(iv.hi > iv.lo)) continue;
    Segment s = make_segment(f, iv.lo, iv.hi, rule);
    total += s.fine;
    total_err += s.err;
    queue.push(s);
  }
  int splits = 0;
  auto tolerance = [&] { return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)); };
  while (!queue.empty() && total_err > tolerance()) {
    if (splits >= cfg.max_subdivisions) {
      throw NonConvergence("quadrature budget exhausted: error estimate " +
                           std::to_string(total_err) + " above tolerance " +
                           std::to_string(tolerance()));
    }
    Segment worst = queue.top();
    queue.pop();
    total -= worst.fine;
    total_err -= worst.err;
    const double m = 0.5 * (worst.a + worst.b);
    if (m <= worst.a || m >= worst.b) {
      // interval narrowed to machine resolution; keep its estimate
      total += worst.fine;
      continue;
    }
    for (const Segment& child :
         {make_segment(f, worst.a, m, rule), make_segment(f, m, worst.b, rule)}) {
      total += child.fine;
      total_err += child.err;
      queue.push(child);
    }
    ++splits;
  }
  return total;
}

}  // namespace detail

/// Integral of f over an interval union or over R (via tan substitution with
/// the supplied map). Throws NonConvergence / NonFiniteIntegrand.
template <class F>
double integrate_1d(const F& f, const SupportSpec& domain, const QuadratureConfig& cfg = {},
                    const RealLineMap& map = {}) {
  cfg.validate();
  if (!domain.is_full()) {
    return detail::adapt(f, domain.pieces(), cfg);
  }
  const double s = map.scale;
  const double c = map.center;
  auto g = [&](double theta) {
    const double t = std::tan(theta);
    const double ct = std::cos(theta);
    return f(c + s * t) * s / (ct * ct);
  };
  // seed several panels so the peak region is localized early
  const double half_pi = std::asin(1.0);
  std::vector<Interval> seeds;
  const int n_seed = 8;
  for (int i = 0; i < n_seed; ++i) {
    seeds.push_back({-half_pi + 2.0 * half_pi * i / n_seed,
                     -half_pi + 2.0 * half_pi * (i + 1) / n_seed});
  }
  return detail::adapt(g, seeds, cfg);
}

/// Convenience: integral over a single bounded interval.
template <class F>
double integrate_interval(const F& f, double lo, double hi, const QuadratureConfig& cfg = {}) {
  return integrate_1d(f, SupportSpec::intervals({{lo, hi}}), cfg);
}

/// Integral over a union of bounded intervals given directly (already split
/// at integrand kinks by the caller).
template <class F>
double integrate_pieces(const F& f, const std::vector<Interval>& pieces,
                        const QuadratureConfig& cfg = {}) {
  cfg.validate();
  return detail::adapt(f, pieces, cfg);
}

struct Rect {
  double xlo, xhi, ylo, yhi;
};

namespace detail {

template <class F>
double gl_cell(const F& f, const Rect& r, const GlRule& rule) {
  const double xm = 0.5 * (r.xlo + r.xhi), xh = 0.5 * (r.xhi - r.xlo);
  const double ym = 0.5 * (r.ylo + r.yhi), yh = 0.5 * (r.yhi - r.ylo);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = xm + xh * rule.nodes[i];
    double row = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const double y = ym + yh * rule.nodes[j];
      const double v = f(x, y);
      if (!std::isfinite(v)) {
        throw NonFiniteIntegrand("integrand not finite at (" + std::to_string(x) + ", " +
                                 std::to_string(y) + ")");
      }
      row += rule.weights[j] * v;
    }
    acc += rule.weights[i] * row;
  }
  return acc * xh * yh;
}

struct Cell {
  Rect r;
  double coarse, fine, err;
  bool operator<(const Cell& o) const { return err < o.err; }
};

template <class F>
Cell make_cell(const F& f, const Rect& r, const GlRule& rule) {
  Cell c;
  c.r = r;
  c.coarse = gl_cell(f, r, rule);
  const double xm = 0.5 * (r.xlo + r.xhi), ym = 0.5 * (r.ylo + r.yhi);
  c.fine = gl_cell(f, {r.xlo, xm, r.ylo, ym}, rule) + gl_cell(f, {xm, r.xhi, r.ylo, ym}, rule) +
           gl_cell(f, {r.xlo, xm, ym, r.yhi}, rule) + gl_cell(f, {xm, r.xhi, ym, r.yhi}, rule);
  c.err = std::abs(c.coarse - c.fine);
  return c;
}

}  // namespace detail

/// Tensor-product Gauss-Legendre over a rectangle with adaptive quadtree
/// refinement.
template <class F>
double integrate_2d(const F& f, const Rect& box, const QuadratureConfig& cfg = {}) {
  cfg.validate();
  if (!(box.xhi > box.xlo) || !(box.yhi > box.ylo)) return 0.0;
  const GlRule& rule = gl_rule(cfg.nodes_per_panel);
  std::priority_queue<detail::Cell> queue;
  detail::Cell root = detail::make_cell(f, box, rule);
  double total = root.fine, total_err = root.err;
  queue.push(root);
  int splits = 0;
  auto tolerance = [&] { return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)); };
  while (!queue.empty() && total_err > tolerance()) {
    if (splits >= cfg.max_subdivisions) {
      throw NonConvergence("2-D quadrature budget exhausted: error estimate " +
                           std::to_string(total_err));
    }
    detail::Cell worst = queue.top();
    queue.pop();
    total -= worst.fine;
    total_err -= worst.err;
    const Rect& r = worst.r;
    const double xm = 0.5 * (r.xlo + r.xhi), ym = 0.5 * (r.ylo + r.yhi);
    if (xm <= r.xlo || ym <= r.ylo) {
      total += worst.fine;
      continue;
    }
    for (const Rect& q : {Rect{r.xlo, xm, r.ylo, ym}, Rect{xm, r.xhi, r.ylo, ym},
                          Rect{r.xlo, xm, ym, r.yhi}, Rect{xm, r.xhi, ym, r.yhi}}) {
      detail::Cell child = detail::make_cell(f, q, rule);
      total += child.fine;
      total_err += child.err;
      queue.push(child);
    }
    ++splits;
  }
  return total;
}

}  // namespace symvi
