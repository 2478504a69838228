#pragma once

#include <Eigen/Dense>

namespace symvi {

/// Positive definite scale matrix S with its derived quantities S^{-1/2},
/// S^{-1}, and |S|^{-1/2}. Immutable after construction.
class ScaleMatrix {
 public:
  /// Validates symmetry and positive definiteness (all eigenvalues > 0).
  explicit ScaleMatrix(Eigen::MatrixXd s);

  static ScaleMatrix identity(int dim);
  /// s * I with s > 0.
  static ScaleMatrix isotropic(int dim, double s);

  int dim() const { return static_cast<int>(s_.rows()); }
  const Eigen::MatrixXd& matrix() const { return s_; }
  const Eigen::MatrixXd& inverse() const { return inv_; }
  const Eigen::MatrixXd& inverse_sqrt() const { return inv_sqrt_; }
  const Eigen::MatrixXd& sqrt() const { return sqrt_; }
  double inv_sqrt_det() const { return inv_sqrt_det_; }

  /// S^{-1/2} v
  Eigen::VectorXd whiten(const Eigen::VectorXd& v) const;

  /// 1-D conveniences (dim() == 1).
  double value1() const { return s_(0, 0); }
  double inv_sqrt1() const { return inv_sqrt_(0, 0); }
  double sqrt1() const { return sqrt_(0, 0); }

 private:
  Eigen::MatrixXd s_, inv_, inv_sqrt_, sqrt_;
  double inv_sqrt_det_ = 0.0;
};

}  // namespace symvi
