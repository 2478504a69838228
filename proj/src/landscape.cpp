#include "symvi/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "symvi/errors.hpp"
#include "symvi/parallel.hpp"

namespace symvi {

void SweepConfig::validate() const {
  if (!(lo < hi)) throw std::invalid_argument("sweep range must satisfy lo < hi");
  if (!(step > 0.0)) throw std::invalid_argument("sweep step must be positive");
  if ((hi - lo) / step > 1e7) throw std::invalid_argument("sweep grid too fine (> 1e7 points)");
  if (!(tol_eq > 0.0)) throw std::invalid_argument("tol_eq must be positive");
  quad.validate();
}

int SweepConfig::num_points() const {
  return static_cast<int>(std::lround((hi - lo) / step)) + 1;
}

std::string to_string(StationaryKind k) {
  switch (k) {
    case StationaryKind::UniqueGlobalMin: return "unique_global_min";
    case StationaryKind::Plateau: return "plateau";
    case StationaryKind::LocalMax: return "local_max";
    case StationaryKind::Other: return "other";
  }
  return "?";
}

SweepResult sweep(const DivergenceSpec& spec, const TargetDensity& p, const LocationFamily& fam,
                  const SweepConfig& cfg) {
  cfg.validate();
  const int n = cfg.num_points();
  SweepResult res;
  res.config = cfg;
  res.divergence = spec.name();
  res.family = fam.name();
  res.target = p.name();
  res.nu.resize(static_cast<std::size_t>(n));
  res.value.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) res.nu[static_cast<std::size_t>(i)] = cfg.lo + i * cfg.step;

  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    const double nu = res.nu[i];
    try {
      res.value[i] = objective_simplified1(spec, p, fam, nu, cfg.quad);
    } catch (const NonFiniteIntegrand& e) {
      throw NonFiniteIntegrand("sweep failed at nu = " + std::to_string(nu) + ": " + e.what());
    } catch (const NonConvergence& e) {
      throw NonConvergence("sweep failed at nu = " + std::to_string(nu) + ": " + e.what());
    }
  });
  return res;
}

namespace {

/// Two objective values are indistinguishable when they differ by less than
/// tol_eq relative to their own magnitude. The sweep-range scale is NOT used
/// here: objectives spanning many orders of magnitude (large-alpha weights)
/// would otherwise flatten the basin into a spurious plateau.
double eq_threshold(double a, double b, double tol_eq) {
  return tol_eq * std::max(std::abs(a), std::abs(b)) + 1e-15;
}

}  // namespace

StationaryClassification classify_at_mean(const SweepResult& res, double mu, double tol_eq) {
  const std::vector<double>& v = res.value;
  const std::vector<double>& nu = res.nu;
  const std::size_t n = v.size();
  if (n < 3) throw std::invalid_argument("classification needs at least 3 sweep points");
  if (mu < nu.front() - 1e-12 || mu > nu.back() + 1e-12) {
    throw std::invalid_argument("mean lies outside the sweep range");
  }
  const double step = res.config.step;

  StationaryClassification out;
  std::size_t i_mu = 0;
  double best = std::abs(nu[0] - mu);
  for (std::size_t i = 1; i < n; ++i) {
    const double d = std::abs(nu[i] - mu);
    if (d < best) {
      best = d;
      i_mu = i;
    }
  }
  if (i_mu > 0 && i_mu + 1 < n) {
    out.gradient_at_mean = (v[i_mu + 1] - v[i_mu - 1]) / (2.0 * step);
  }

  std::size_t i_min = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (v[i] < v[i_min]) i_min = i;
  }
  const double v_min = v[i_min];

  // local maximum at the mean, with the global minimum elsewhere
  if (i_mu > 0 && i_mu + 1 < n && v[i_mu] > v[i_mu - 1] + eq_threshold(v[i_mu], v[i_mu - 1], tol_eq) &&
      v[i_mu] > v[i_mu + 1] + eq_threshold(v[i_mu], v[i_mu + 1], tol_eq) &&
      v[i_mu] > v_min + eq_threshold(v[i_mu], v_min, tol_eq)) {
    out.kind = StationaryKind::LocalMax;
    out.at = nu[i_mu];
    return out;
  }

  // maximal contiguous near-minimal interval containing the argmin
  std::size_t lo = i_min, hi = i_min;
  while (lo > 0 && v[lo - 1] - v_min <= eq_threshold(v[lo - 1], v_min, tol_eq)) --lo;
  while (hi + 1 < n && v[hi + 1] - v_min <= eq_threshold(v[hi + 1], v_min, tol_eq)) ++hi;

  if (hi > lo) {
    if (nu[lo] <= mu + 0.5 * step && mu - 0.5 * step <= nu[hi]) {
      out.kind = StationaryKind::Plateau;
      out.plateau_lo = nu[lo];
      out.plateau_hi = nu[hi];
      return out;
    }
    out.kind = StationaryKind::Other;
    out.note = "flat minimal region away from the mean";
    out.plateau_lo = nu[lo];
    out.plateau_hi = nu[hi];
    return out;
  }

  const double radius =
      res.config.neighborhood > 0.0 ? res.config.neighborhood : step;
  bool unique = true;
  for (std::size_t i = 0; i < n && unique; ++i) {
    if (std::abs(nu[i] - nu[i_min]) <= radius + 0.5 * step) continue;
    if (v[i] - v_min <= eq_threshold(v[i], v_min, tol_eq)) unique = false;
  }
  if (unique) {
    out.kind = StationaryKind::UniqueGlobalMin;
    out.at = nu[i_min];
    return out;
  }
  out.kind = StationaryKind::Other;
  out.note = "minimum is not unique on the grid";
  out.at = nu[i_min];
  return out;
}

double stationarity_residual(const DivergenceSpec& spec, const TargetDensity& p,
                             const LocationFamily& fam, double mu, double h,
                             const QuadratureConfig& cfg) {
  if (!(h > 0.0)) throw std::invalid_argument("h must be positive");
  const double up = objective_simplified1(spec, p, fam, mu + h, cfg);
  const double dn = objective_simplified1(spec, p, fam, mu - h, cfg);
  return std::abs(up - dn) / (2.0 * h);
}

double stationarity_residual(const DivergenceSpec& spec, const TargetDensity& p,
                             const LocationFamily& fam, const Eigen::VectorXd& mu, double h,
                             const QuadratureConfig& cfg) {
  if (!(h > 0.0)) throw std::invalid_argument("h must be positive");
  double sq = 0.0;
  for (int k = 0; k < mu.size(); ++k) {
    Eigen::VectorXd up = mu, dn = mu;
    up(k) += h;
    dn(k) -= h;
    const double g = (objective_simplified(spec, p, fam, up, cfg) -
                      objective_simplified(spec, p, fam, dn, cfg)) /
                     (2.0 * h);
    sq += g * g;
  }
  return std::sqrt(sq);
}

}  // namespace symvi
