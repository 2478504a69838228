#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace symvi {

enum class BaseKind { Gaussian, Laplace, StudentT, Cauchy };

/// Standardized base density q0: location 0, unit canonical scale, even
/// symmetric around the origin with full support. The Gaussian evaluates in
/// any dimension (spherical product form); the other kinds are 1-D.
class BaseDensity {
 public:
  static BaseDensity gaussian();
  static BaseDensity laplace();
  static BaseDensity student_t(double dof);
  static BaseDensity cauchy();

  BaseKind kind() const { return kind_; }
  double dof() const { return dof_; }
  std::string name() const;

  double log_pdf(double z) const;
  double pdf(double z) const;
  double log_pdf(const Eigen::VectorXd& z) const;
  double pdf(const Eigen::VectorXd& z) const;

  /// z-locations where the log-density has a gradient kink ({0} for Laplace).
  /// Integration domains are split there so panels stay smooth.
  const std::vector<double>& gradient_kinks() const { return kinks_; }

 private:
  BaseDensity(BaseKind kind, double dof);
  BaseKind kind_;
  double dof_ = 0.0;
  double log_norm_ = 0.0;  // log of the 1-D normalization constant
  std::vector<double> kinks_;
};

}  // namespace symvi
