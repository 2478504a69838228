#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symvi/support.hpp"

namespace symvi {

/// Declared analytically per target; log p is -inf off the support so a
/// generic numerical checker would be ill-posed.
enum class LogConcavity { No, Concave, SomewhereStrictly };

struct UniformComponent {
  double weight = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

struct Box {
  Eigen::VectorXd lo, hi;
};

/// Even-symmetric target density with known mean, support metadata, and a
/// declared log-concavity attribute. Immutable; pdf evaluation is pure.
class TargetDensity {
 public:
  /// 0.5 Unif([-9,-3]) + 0.5 Unif([3,9]); mean 0, mean not in the support.
  static TargetDensity p1();

  /// 0.99 p1 + 0.01 Unif([-0.3, 0.3]); mean 0 in the interior of the support.
  static TargetDensity p2();

  static TargetDensity uniform(double lo, double hi);

  /// Weighted mixture of 1-D uniforms; weights must sum to 1 within 1e-9.
  static TargetDensity uniform_mixture(std::vector<UniformComponent> comps,
                                       std::string name = "uniform_mixture");

  static TargetDensity std_normal();

  /// Bimodal 2-D Gaussian mixture, even symmetric around mu = (2, 1):
  /// 0.5 N(mu + m, 0.5 I) + 0.5 N(mu - m, 0.5 I), m = (1.8, -1.1).
  static TargetDensity bimodal_2d();

  int dim() const { return static_cast<int>(mean_.size()); }
  const Eigen::VectorXd& mean() const { return mean_; }
  double mean1() const { return mean_(0); }
  const SupportSpec& support() const { return support_; }
  LogConcavity log_concavity() const { return log_concavity_; }
  bool symmetry_certified() const { return symmetry_certified_; }
  const std::string& name() const { return name_; }

  double pdf(const Eigen::VectorXd& x) const;
  double pdf1(double x) const;

  /// Component list when the target is a uniform mixture, else nullopt.
  const std::optional<std::vector<UniformComponent>>& uniform_components() const {
    return components_;
  }

  /// Box outside which the density carries negligible mass (< eps_tail).
  /// Equals the support hull for bounded targets; a quantile box otherwise.
  Box effective_box(double eps_tail = 1e-14) const;

 private:
  TargetDensity() = default;
  std::string name_;
  Eigen::VectorXd mean_;
  SupportSpec support_ = SupportSpec::full_space(1);
  LogConcavity log_concavity_ = LogConcavity::No;
  bool symmetry_certified_ = false;
  std::function<double(const Eigen::VectorXd&)> pdf_;
  std::function<double(double)> pdf1_;
  std::optional<std::vector<UniformComponent>> components_;
  double tail_scale_ = 1.0;  // per-unit tail decay scale for full-support targets
};

/// Deterministic low-discrepancy symmetry check: true iff
/// |p(mu+x) - p(mu-x)| <= tol for all n sampled offsets x over the target's
/// effective box. The declared mean may differ from the true mean (negative
/// controls), so the check is honest rather than trusting the certificate.
bool is_even_symmetric(const TargetDensity& p, int n_samples, double tol);
bool is_even_symmetric_about(const TargetDensity& p, const Eigen::VectorXd& mu,
                             int n_samples, double tol);

}  // namespace symvi
