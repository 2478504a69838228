#include "symvi/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "symvi/errors.hpp"
#include "symvi/sampling.hpp"

namespace symvi {

std::string to_string(Region r) {
  switch (r) {
    case Region::H2: return "H2";
    case Region::H3: return "H3";
    case Region::H4: return "H4";
  }
  return "?";
}

HalfspacePartition::HalfspacePartition(Eigen::VectorXd nu_prime, ScaleMatrix scale)
    : nu_prime_(std::move(nu_prime)), scale_(std::move(scale)) {
  if (nu_prime_.size() != scale_.dim()) {
    throw DimensionMismatch("nu' dimension does not match the scale matrix");
  }
  if (nu_prime_.norm() == 0.0) throw std::invalid_argument("nu' must be nonzero");
  inv_nu_ = scale_.inverse() * nu_prime_;
  threshold_ = 0.5 * scale_.whiten(nu_prime_).squaredNorm();
}

double HalfspacePartition::projection(const Eigen::VectorXd& tau) const {
  if (tau.size() != dim()) throw DimensionMismatch("tau dimension mismatch");
  return tau.dot(inv_nu_);
}

Region HalfspacePartition::classify(const Eigen::VectorXd& tau) const {
  const double s = projection(tau);
  if (s > threshold_) return Region::H2;
  if (s < -threshold_) return Region::H3;
  return Region::H4;  // boundaries belong to the slab
}

Region HalfspacePartition::classify1(double tau) const {
  return classify(Eigen::VectorXd::Constant(1, tau));
}

Region classify_point(const HalfspacePartition& part, const Eigen::VectorXd& tau) {
  return part.classify(tau);
}

double delta_w(const WeightFunction& w, const ScaleMatrix& scale,
               const Eigen::VectorXd& nu_prime, const Eigen::VectorXd& tau) {
  if (nu_prime.norm() == 0.0) throw std::invalid_argument("nu' must be nonzero");
  return w(scale.whiten(tau - nu_prime)) - w(scale.whiten(tau));
}

double delta_w1(const WeightFunction& w, const ScaleMatrix& scale, double nu_prime,
                double tau) {
  if (nu_prime == 0.0) throw std::invalid_argument("nu' must be nonzero");
  const double sih = scale.inv_sqrt1();
  return w(sih * (tau - nu_prime)) - w(sih * tau);
}

namespace {

struct RegionWindow {
  double lo, hi;
};

double integrate_region_1d(const DivergenceSpec& spec, const TargetDensity& p,
                           const LocationFamily& fam, double nu_prime,
                           const RegionWindow& window, const QuadratureConfig& cfg) {
  const double mu = p.mean1();
  const WeightFunction w(spec, fam.base());
  const bool is_alpha = spec.kind == DivergenceSpec::Kind::Alpha;
  const double alpha = spec.alpha;
  const double sih = fam.scale().inv_sqrt1();
  const double sqrt_s = fam.scale().sqrt1();

  // tau-space support pieces clipped to the region window
  SupportSpec tau_supp = [&] {
    if (p.support().is_full()) {
      const Box box = p.effective_box(cfg.tail_mass);
      return SupportSpec::intervals({{box.lo(0) - mu, box.hi(0) - mu}});
    }
    std::vector<Interval> shifted;
    for (const Interval& iv : p.support().pieces()) {
      shifted.push_back({iv.lo - mu, iv.hi - mu});
    }
    return SupportSpec::intervals(std::move(shifted));
  }();
  tau_supp = tau_supp.clip(window.lo, window.hi);
  if (tau_supp.pieces().empty()) return 0.0;

  // split at the weight's gradient kinks in both delta terms
  std::vector<double> cuts;
  for (double k : w.kinks()) {
    cuts.push_back(nu_prime + k * sqrt_s);
    cuts.push_back(k * sqrt_s);
  }
  const std::vector<Interval> pieces = split_intervals(tau_supp.pieces(), std::move(cuts));

  auto integrand = [&](double tau) {
    const double px = p.pdf1(mu + tau);
    if (px <= 0.0) return 0.0;
    const double intensity = is_alpha ? std::pow(px, alpha) : px;
    return (w(sih * (tau - nu_prime)) - w(sih * tau)) * intensity;
  };
  return integrate_pieces(integrand, pieces, cfg);
}

DeltaDecomposition decompose_1d(const DivergenceSpec& spec, const TargetDensity& p,
                                const LocationFamily& fam, double nu_prime,
                                const QuadratureConfig& cfg) {
  const double half = 0.5 * std::abs(nu_prime);
  const double inf = std::numeric_limits<double>::infinity();
  // H2 lies on the nu' side of the slab, H3 mirrors it
  const RegionWindow h2 = nu_prime > 0.0 ? RegionWindow{half, inf} : RegionWindow{-inf, -half};
  const RegionWindow h3 = nu_prime > 0.0 ? RegionWindow{-inf, -half} : RegionWindow{half, inf};
  const RegionWindow h4{-half, half};

  DeltaDecomposition out;
  out.on_H2 = integrate_region_1d(spec, p, fam, nu_prime, h2, cfg);
  out.on_H3 = integrate_region_1d(spec, p, fam, nu_prime, h3, cfg);
  out.on_H4 = integrate_region_1d(spec, p, fam, nu_prime, h4, cfg);
  out.total = out.on_H2 + out.on_H3 + out.on_H4;
  return out;
}

double integrate_region_2d(const DivergenceSpec& spec, const TargetDensity& p,
                           const LocationFamily& fam, const Eigen::VectorXd& nu_prime,
                           const Eigen::VectorXd& u_hat, const Eigen::VectorXd& v_hat,
                           const RegionWindow& u_window, double radius,
                           const QuadratureConfig& cfg) {
  const Eigen::VectorXd mu = p.mean();
  const WeightFunction w(spec, fam.base());
  const bool is_alpha = spec.kind == DivergenceSpec::Kind::Alpha;
  const double alpha = spec.alpha;
  const double ulo = std::max(u_window.lo, -radius);
  const double uhi = std::min(u_window.hi, radius);
  if (!(uhi > ulo)) return 0.0;
  // rotation (u, v) -> tau is measure preserving
  auto integrand = [&](double u, double v) {
    const Eigen::VectorXd tau = u * u_hat + v * v_hat;
    const double px = p.pdf(mu + tau);
    if (px <= 0.0) return 0.0;
    const double intensity = is_alpha ? std::pow(px, alpha) : px;
    const double dw = w(fam.scale().whiten(tau - nu_prime)) - w(fam.scale().whiten(tau));
    return dw * intensity;
  };
  return integrate_2d(integrand, {ulo, uhi, -radius, radius}, cfg);
}

DeltaDecomposition decompose_2d(const DivergenceSpec& spec, const TargetDensity& p,
                                const LocationFamily& fam, const Eigen::VectorXd& nu_prime,
                                const QuadratureConfig& cfg) {
  const HalfspacePartition part(nu_prime, fam.scale());
  const Eigen::VectorXd n_vec = fam.scale().inverse() * nu_prime;
  const double n_norm = n_vec.norm();
  const Eigen::VectorXd u_hat = n_vec / n_norm;
  Eigen::VectorXd v_hat(2);
  v_hat << -u_hat(1), u_hat(0);
  const double u_t = part.threshold() / n_norm;

  const Box box = p.effective_box(cfg.tail_mass);
  const Eigen::VectorXd mu = p.mean();
  double radius = 0.0;
  for (int i = 0; i < 2; ++i) {
    radius = std::max(radius, std::abs(box.lo(i) - mu(i)));
    radius = std::max(radius, std::abs(box.hi(i) - mu(i)));
  }
  radius = radius * std::numbers::sqrt2 + nu_prime.norm();

  const double inf = std::numeric_limits<double>::infinity();
  DeltaDecomposition out;
  out.on_H2 = integrate_region_2d(spec, p, fam, nu_prime, u_hat, v_hat, {u_t, inf}, radius, cfg);
  out.on_H3 = integrate_region_2d(spec, p, fam, nu_prime, u_hat, v_hat, {-inf, -u_t}, radius, cfg);
  out.on_H4 = integrate_region_2d(spec, p, fam, nu_prime, u_hat, v_hat, {-u_t, u_t}, radius, cfg);
  out.total = out.on_H2 + out.on_H3 + out.on_H4;
  return out;
}

}  // namespace

DeltaDecomposition delta_objective_decomposition(const DivergenceSpec& spec,
                                                 const TargetDensity& p,
                                                 const LocationFamily& fam,
                                                 const Eigen::VectorXd& nu_prime,
                                                 const QuadratureConfig& cfg) {
  if (spec.kind == DivergenceSpec::Kind::RKL) {
    throw UnsupportedSpec("decomposition is defined for FKL and alpha objectives");
  }
  if (nu_prime.norm() == 0.0) throw std::invalid_argument("nu' must be nonzero");
  if (p.dim() != fam.dim() || nu_prime.size() != p.dim()) {
    throw DimensionMismatch("target/family/nu' dimensions disagree");
  }
  if (p.dim() == 1) return decompose_1d(spec, p, fam, nu_prime(0), cfg);
  return decompose_2d(spec, p, fam, nu_prime, cfg);
}

DeltaDecomposition delta_objective_decomposition1(const DivergenceSpec& spec,
                                                  const TargetDensity& p,
                                                  const LocationFamily& fam, double nu_prime,
                                                  const QuadratureConfig& cfg) {
  return delta_objective_decomposition(spec, p, fam, Eigen::VectorXd::Constant(1, nu_prime),
                                       cfg);
}

bool mirror_pairing_check(const HalfspacePartition& part, const TargetDensity& p, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const Eigen::VectorXd mu = p.mean();
  Box box = p.effective_box();
  // recentre around the mean so eta is a tau-space offset
  Box tau_box;
  tau_box.lo = box.lo - mu;
  tau_box.hi = box.hi - mu;
  int found = 0;
  const int budget = 10000 * n;
  for (int i = 1; i <= budget && found < n; ++i) {
    Eigen::VectorXd eta(part.dim());
    const unsigned bases[2] = {2, 3};
    for (int k = 0; k < part.dim(); ++k) {
      const double u = radical_inverse(static_cast<unsigned>(i), bases[k]);
      eta(k) = tau_box.lo(k) + u * (tau_box.hi(k) - tau_box.lo(k));
    }
    if (part.classify(eta) != Region::H3) continue;
    ++found;
    if (part.classify(-eta) != Region::H2) return false;
    if (std::abs(p.pdf(mu + eta) - p.pdf(mu - eta)) > 1e-12) return false;
  }
  return found == n;
}

}  // namespace symvi
