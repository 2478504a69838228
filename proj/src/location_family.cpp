#include "symvi/location_family.hpp"

#include <cmath>
#include <stdexcept>

#include "symvi/errors.hpp"

namespace symvi {

LocationFamily::LocationFamily(BaseDensity base, ScaleMatrix scale, CanonicalParam param)
    : base_(std::move(base)), scale_(std::move(scale)), param_(std::move(param)) {
  if (scale_.dim() > 1 && base_.kind() != BaseKind::Gaussian) {
    throw DimensionMismatch("only the Gaussian base supports d > 1");
  }
}

LocationFamily LocationFamily::gaussian(double variance) {
  if (!(variance > 0.0)) throw std::invalid_argument("variance must be positive");
  return {BaseDensity::gaussian(), ScaleMatrix::isotropic(1, variance),
          {"variance", variance}};
}

LocationFamily LocationFamily::laplace(double scale_b) {
  if (!(scale_b > 0.0)) throw std::invalid_argument("Laplace scale must be positive");
  return {BaseDensity::laplace(), ScaleMatrix::isotropic(1, scale_b * scale_b),
          {"scale", scale_b}};
}

LocationFamily LocationFamily::student_t(double dof, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("Student-t scale must be positive");
  return {BaseDensity::student_t(dof), ScaleMatrix::isotropic(1, scale * scale),
          {"scale", scale}};
}

LocationFamily LocationFamily::cauchy(double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("Cauchy scale must be positive");
  return {BaseDensity::cauchy(), ScaleMatrix::isotropic(1, scale * scale), {"scale", scale}};
}

LocationFamily LocationFamily::gaussian_iso(int dim, double variance) {
  if (!(variance > 0.0)) throw std::invalid_argument("variance must be positive");
  return {BaseDensity::gaussian(), ScaleMatrix::isotropic(dim, variance),
          {"variance", variance}};
}

std::string LocationFamily::name() const {
  return base_.name() + "(" + param_.name + "=" + std::to_string(param_.value) + ")";
}

double LocationFamily::log_pdf(const Eigen::VectorXd& nu, const Eigen::VectorXd& x) const {
  if (nu.size() != dim() || x.size() != dim()) {
    throw DimensionMismatch("family/location/point dimensions disagree");
  }
  return base_.log_pdf(scale_.whiten(x - nu)) + std::log(scale_.inv_sqrt_det());
}

double LocationFamily::pdf(const Eigen::VectorXd& nu, const Eigen::VectorXd& x) const {
  return std::exp(log_pdf(nu, x));
}

double LocationFamily::log_pdf1(double nu, double x) const {
  return base_.log_pdf(scale_.inv_sqrt1() * (x - nu)) + std::log(scale_.inv_sqrt_det());
}

double LocationFamily::pdf1(double nu, double x) const { return std::exp(log_pdf1(nu, x)); }

std::vector<double> LocationFamily::pdf_kinks(double nu) const {
  std::vector<double> out;
  for (double k : base_.gradient_kinks()) out.push_back(nu + k * scale_.sqrt1());
  return out;
}

double family_pdf(const LocationFamily& fam, const Eigen::VectorXd& nu,
                  const Eigen::VectorXd& x) {
  return fam.pdf(nu, x);
}

}  // namespace symvi
