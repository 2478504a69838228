#include "symvi/scale_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace symvi {

ScaleMatrix::ScaleMatrix(Eigen::MatrixXd s) : s_(std::move(s)) {
  if (s_.rows() != s_.cols() || s_.rows() < 1) {
    throw std::invalid_argument("scale matrix must be square");
  }
  if (!s_.isApprox(s_.transpose(), 1e-12)) {
    throw std::invalid_argument("scale matrix must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s_);
  if (eig.info() != Eigen::Success) {
    throw std::invalid_argument("scale matrix eigendecomposition failed");
  }
  const Eigen::VectorXd& vals = eig.eigenvalues();
  if ((vals.array() <= 0.0).any()) {
    throw std::invalid_argument("scale matrix must be positive definite");
  }
  const Eigen::MatrixXd& v = eig.eigenvectors();
  inv_ = v * vals.cwiseInverse().asDiagonal() * v.transpose();
  inv_sqrt_ = v * vals.cwiseSqrt().cwiseInverse().asDiagonal() * v.transpose();
  sqrt_ = v * vals.cwiseSqrt().asDiagonal() * v.transpose();
  inv_sqrt_det_ = 1.0 / std::sqrt(vals.prod());
}

ScaleMatrix ScaleMatrix::identity(int dim) {
  return ScaleMatrix(Eigen::MatrixXd::Identity(dim, dim));
}

ScaleMatrix ScaleMatrix::isotropic(int dim, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("isotropic scale must be positive");
  return ScaleMatrix(s * Eigen::MatrixXd::Identity(dim, dim));
}

Eigen::VectorXd ScaleMatrix::whiten(const Eigen::VectorXd& v) const { return inv_sqrt_ * v; }

}  // namespace symvi
