#include "symvi/base_density.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "symvi/errors.hpp"

namespace symvi {

namespace {
constexpr double kLogSqrt2Pi = 0.9189385332046727;  // log(sqrt(2 pi))
}

BaseDensity::BaseDensity(BaseKind kind, double dof) : kind_(kind), dof_(dof) {
  switch (kind_) {
    case BaseKind::Gaussian:
      log_norm_ = -kLogSqrt2Pi;
      break;
    case BaseKind::Laplace:
      log_norm_ = -std::numbers::ln2;
      kinks_ = {0.0};
      break;
    case BaseKind::StudentT:
      if (!(dof_ > 0.0)) throw std::invalid_argument("Student-t dof must be positive");
      log_norm_ = std::lgamma(0.5 * (dof_ + 1.0)) - std::lgamma(0.5 * dof_) -
                  0.5 * std::log(dof_ * std::numbers::pi);
      break;
    case BaseKind::Cauchy:
      log_norm_ = -std::log(std::numbers::pi);
      break;
  }
}

BaseDensity BaseDensity::gaussian() { return {BaseKind::Gaussian, 0.0}; }
BaseDensity BaseDensity::laplace() { return {BaseKind::Laplace, 0.0}; }
BaseDensity BaseDensity::student_t(double dof) { return {BaseKind::StudentT, dof}; }
BaseDensity BaseDensity::cauchy() { return {BaseKind::Cauchy, 0.0}; }

std::string BaseDensity::name() const {
  switch (kind_) {
    case BaseKind::Gaussian: return "gaussian";
    case BaseKind::Laplace: return "laplace";
    case BaseKind::StudentT: return "student_t(" + std::to_string(dof_) + ")";
    case BaseKind::Cauchy: return "cauchy";
  }
  return "?";
}

double BaseDensity::log_pdf(double z) const {
  switch (kind_) {
    case BaseKind::Gaussian:
      return log_norm_ - 0.5 * z * z;
    case BaseKind::Laplace:
      return log_norm_ - std::abs(z);
    case BaseKind::StudentT:
      return log_norm_ - 0.5 * (dof_ + 1.0) * std::log1p(z * z / dof_);
    case BaseKind::Cauchy:
      return log_norm_ - std::log1p(z * z);
  }
  return 0.0;
}

double BaseDensity::pdf(double z) const { return std::exp(log_pdf(z)); }

double BaseDensity::log_pdf(const Eigen::VectorXd& z) const {
  if (z.size() == 1) return log_pdf(z(0));
  if (kind_ != BaseKind::Gaussian) {
    throw DimensionMismatch("base density '" + name() + "' is 1-D only");
  }
  return -0.5 * z.squaredNorm() - static_cast<double>(z.size()) * kLogSqrt2Pi;
}

double BaseDensity::pdf(const Eigen::VectorXd& z) const { return std::exp(log_pdf(z)); }

}  // namespace symvi
