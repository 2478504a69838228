#include "symvi/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace symvi {

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(tail_mass > 0.0)) {
    throw std::invalid_argument("quadrature tolerances must be positive");
  }
  if (max_subdivisions < 1) throw std::invalid_argument("max_subdivisions must be >= 1");
  if (nodes_per_panel < 2) throw std::invalid_argument("nodes_per_panel must be >= 2");
}

QuadratureConfig oracle_config(const QuadratureConfig& cfg) {
  QuadratureConfig o = cfg;
  o.rel_tol = cfg.rel_tol / 100.0;
  o.abs_tol = cfg.abs_tol / 100.0;
  o.nodes_per_panel = cfg.nodes_per_panel * 4;
  o.max_subdivisions = cfg.max_subdivisions * 4;
  return o;
}

namespace {

// Nodes via Newton iteration on P_n with the Tricomi initial guess.
GlRule compute_gl_rule(int n) {
  GlRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence for P_n(x) and P_n'(x)
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

}  // namespace

const GlRule& gl_rule(int n) {
  static std::mutex mutex;
  static std::map<int, GlRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gl_rule(n)).first;
  return it->second;
}

}  // namespace symvi
