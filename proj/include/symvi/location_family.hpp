#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "symvi/base_density.hpp"
#include "symvi/scale_matrix.hpp"

namespace symvi {

/// The user-facing scale parameter a family was constructed from, together
/// with its mapping to S. Reported in all outputs so "Gaussian variance 4"
/// vs "S = 4" is never ambiguous.
struct CanonicalParam {
  std::string name;   // "variance" or "scale"
  double value = 1.0;
};

/// Location family q_nu(x) = q0(S^{-1/2}(x - nu)) |S|^{-1/2} with fixed S.
class LocationFamily {
 public:
  LocationFamily(BaseDensity base, ScaleMatrix scale, CanonicalParam param);

  /// 1-D constructors taking the distribution's canonical parameter.
  /// Gaussian: variance v (S = v). Laplace: scale b (S = b^2).
  /// Student-t / Cauchy: scale s (S = s^2).
  static LocationFamily gaussian(double variance);
  static LocationFamily laplace(double scale_b);
  static LocationFamily student_t(double dof, double scale);
  static LocationFamily cauchy(double scale);

  /// Spherical d-dimensional Gaussian family, S = variance * I.
  static LocationFamily gaussian_iso(int dim, double variance);

  int dim() const { return scale_.dim(); }
  const BaseDensity& base() const { return base_; }
  const ScaleMatrix& scale() const { return scale_; }
  const CanonicalParam& param() const { return param_; }
  std::string name() const;

  double pdf(const Eigen::VectorXd& nu, const Eigen::VectorXd& x) const;
  double log_pdf(const Eigen::VectorXd& nu, const Eigen::VectorXd& x) const;
  double pdf1(double nu, double x) const;
  double log_pdf1(double nu, double x) const;

  /// x-positions where log q_nu(.) kinks, given the member location.
  std::vector<double> pdf_kinks(double nu) const;

 private:
  BaseDensity base_;
  ScaleMatrix scale_;
  CanonicalParam param_;
};

/// q0(S^{-1/2}(x - nu)) |S|^{-1/2}; throws DimensionMismatch on bad shapes.
double family_pdf(const LocationFamily& fam, const Eigen::VectorXd& nu,
                  const Eigen::VectorXd& x);

}  // namespace symvi
