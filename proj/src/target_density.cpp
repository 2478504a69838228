#include "symvi/target_density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "symvi/errors.hpp"
#include "symvi/sampling.hpp"

namespace symvi {

namespace {

double mixture_pdf(const std::vector<UniformComponent>& comps, double x) {
  double v = 0.0;
  for (const UniformComponent& c : comps) {
    if (x >= c.lo && x <= c.hi) v += c.weight / (c.hi - c.lo);
  }
  return v;
}

std::vector<Interval> merged_support(const std::vector<UniformComponent>& comps) {
  std::vector<Interval> ivs;
  ivs.reserve(comps.size());
  for (const UniformComponent& c : comps) ivs.push_back({c.lo, c.hi});
  std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  for (const Interval& iv : ivs) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

double gaussian_tail_radius(double eps_tail) {
  // overshoots the exact Gaussian quantile; cheap and safe
  return std::sqrt(-2.0 * std::log(std::max(eps_tail, 1e-300))) + 2.0;
}

}  // namespace

TargetDensity TargetDensity::uniform_mixture(std::vector<UniformComponent> comps,
                                             std::string name) {
  if (comps.empty()) throw std::invalid_argument("mixture needs at least one component");
  double wsum = 0.0;
  for (const UniformComponent& c : comps) {
    if (!(c.weight > 0.0)) throw std::invalid_argument("mixture weights must be positive");
    if (!(c.hi > c.lo)) throw std::invalid_argument("mixture intervals must have positive length");
    wsum += c.weight;
  }
  if (std::abs(wsum - 1.0) > 1e-9) {
    throw std::invalid_argument("mixture weights must sum to 1");
  }
  TargetDensity t;
  t.name_ = std::move(name);
  double mean = 0.0;
  for (const UniformComponent& c : comps) mean += c.weight * 0.5 * (c.lo + c.hi);
  t.mean_ = Eigen::VectorXd::Constant(1, mean);
  t.support_ = SupportSpec::intervals(merged_support(comps));
  t.log_concavity_ = comps.size() == 1 ? LogConcavity::Concave : LogConcavity::No;
  t.components_ = comps;
  auto pdf1 = [comps](double x) { return mixture_pdf(comps, x); };
  t.pdf1_ = pdf1;
  t.pdf_ = [pdf1](const Eigen::VectorXd& x) {
    if (x.size() != 1) throw DimensionMismatch("1-D target evaluated at non-1-D point");
    return pdf1(x(0));
  };
  // symmetry about the mean holds iff the component layout mirrors
  t.symmetry_certified_ = true;
  for (const UniformComponent& c : comps) {
    const double mlo = 2.0 * mean - c.hi, mhi = 2.0 * mean - c.lo;
    bool mirrored = false;
    for (const UniformComponent& d : comps) {
      if (std::abs(d.lo - mlo) < 1e-12 && std::abs(d.hi - mhi) < 1e-12 &&
          std::abs(d.weight - c.weight) < 1e-12) {
        mirrored = true;
        break;
      }
    }
    if (!mirrored) t.symmetry_certified_ = false;
  }
  return t;
}

TargetDensity TargetDensity::p1() {
  auto t = uniform_mixture({{0.5, -9.0, -3.0}, {0.5, 3.0, 9.0}}, "p1");
  return t;
}

TargetDensity TargetDensity::p2() {
  // written Unif(X; [-0.3, -0.3]) in the source experiments, a degenerate
  // interval; the component is stated to be centered at 0, so [-0.3, 0.3]
  auto t = uniform_mixture(
      {{0.495, -9.0, -3.0}, {0.01, -0.3, 0.3}, {0.495, 3.0, 9.0}}, "p2");
  return t;
}

TargetDensity TargetDensity::uniform(double lo, double hi) {
  return uniform_mixture({{1.0, lo, hi}},
                         "unif(" + std::to_string(lo) + "," + std::to_string(hi) + ")");
}

TargetDensity TargetDensity::std_normal() {
  TargetDensity t;
  t.name_ = "std_normal";
  t.mean_ = Eigen::VectorXd::Zero(1);
  t.support_ = SupportSpec::full_space(1);
  t.log_concavity_ = LogConcavity::SomewhereStrictly;
  t.symmetry_certified_ = true;
  t.tail_scale_ = 1.0;
  auto pdf1 = [](double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
  };
  t.pdf1_ = pdf1;
  t.pdf_ = [pdf1](const Eigen::VectorXd& x) {
    if (x.size() != 1) throw DimensionMismatch("1-D target evaluated at non-1-D point");
    return pdf1(x(0));
  };
  return t;
}

TargetDensity TargetDensity::bimodal_2d() {
  TargetDensity t;
  t.name_ = "bimodal_2d";
  Eigen::VectorXd mu(2), m(2);
  mu << 2.0, 1.0;
  m << 1.8, -1.1;
  t.mean_ = mu;
  t.support_ = SupportSpec::full_space(2);
  t.log_concavity_ = LogConcavity::No;
  t.symmetry_certified_ = true;
  t.tail_scale_ = std::sqrt(0.5) * 2.0 + m.norm();
  const double var = 0.5;
  t.pdf_ = [mu, m, var](const Eigen::VectorXd& x) {
    if (x.size() != 2) throw DimensionMismatch("2-D target evaluated at non-2-D point");
    const double norm = 1.0 / (2.0 * std::numbers::pi * var);
    const double a = (x - (mu + m)).squaredNorm();
    const double b = (x - (mu - m)).squaredNorm();
    return 0.5 * norm * (std::exp(-0.5 * a / var) + std::exp(-0.5 * b / var));
  };
  return t;
}

double TargetDensity::pdf(const Eigen::VectorXd& x) const { return pdf_(x); }

double TargetDensity::pdf1(double x) const {
  if (pdf1_) return pdf1_(x);
  return pdf_(Eigen::VectorXd::Constant(1, x));
}

Box TargetDensity::effective_box(double eps_tail) const {
  Box box;
  box.lo = Eigen::VectorXd(dim());
  box.hi = Eigen::VectorXd(dim());
  if (!support_.is_full()) {
    box.lo(0) = support_.pieces().front().lo;
    box.hi(0) = support_.pieces().back().hi;
    return box;
  }
  if (name_ == "bimodal_2d") {
    Eigen::VectorXd m(2);
    m << 1.8, -1.1;
    const double r = gaussian_tail_radius(eps_tail) * std::sqrt(0.5);
    for (int i = 0; i < 2; ++i) {
      box.lo(i) = mean_(i) - std::abs(m(i)) - r;
      box.hi(i) = mean_(i) + std::abs(m(i)) + r;
    }
    return box;
  }
  const double r = gaussian_tail_radius(eps_tail) * tail_scale_;
  box.lo(0) = mean_(0) - r;
  box.hi(0) = mean_(0) + r;
  return box;
}

bool is_even_symmetric_about(const TargetDensity& p, const Eigen::VectorXd& mu, int n_samples,
                             double tol) {
  if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
  if (mu.size() != p.dim()) throw DimensionMismatch("mean dimension mismatch");
  const Box box = p.effective_box();
  for (const Eigen::VectorXd& y : halton_box(box, n_samples)) {
    const Eigen::VectorXd mirrored = 2.0 * mu - y;
    if (std::abs(p.pdf(y) - p.pdf(mirrored)) > tol) return false;
  }
  return true;
}

bool is_even_symmetric(const TargetDensity& p, int n_samples, double tol) {
  return is_even_symmetric_about(p, p.mean(), n_samples, tol);
}

}  // namespace symvi
