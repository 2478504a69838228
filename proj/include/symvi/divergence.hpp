#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <vector>

#include "symvi/base_density.hpp"
#include "symvi/location_family.hpp"
#include "symvi/quadrature.hpp"
#include "symvi/target_density.hpp"

namespace symvi {

struct DivergenceSpec {
  enum class Kind { RKL, FKL, Alpha };
  Kind kind = Kind::FKL;
  double alpha = 0.0;

  static DivergenceSpec rkl() { return {Kind::RKL, 0.0}; }
  static DivergenceSpec fkl() { return {Kind::FKL, 0.0}; }
  /// Requires alpha > 0 and alpha != 1; throws InvalidAlpha otherwise.
  static DivergenceSpec alpha_div(double alpha);

  std::string name() const;
};

/// The location-simplified weight induced by a divergence and a base density:
///   FKL:   w(z) = -log q0(z)
///   Alpha: w(z) = q0(z)^{1-alpha} / (alpha (alpha-1))
/// Even symmetric by construction. The RKL has no such form (UnsupportedSpec).
class WeightFunction {
 public:
  WeightFunction(DivergenceSpec spec, BaseDensity base);

  double operator()(double z) const;
  double operator()(const Eigen::VectorXd& z) const;

  /// log |w(z)|, overflow-free even where w itself would not fit a double
  /// (heavy growth at alpha > 1). Only meaningful for Alpha weights.
  double log_abs(double z) const;
  /// Sign of w: -1 for alpha in (0,1), else +1.
  double sign() const { return sign_; }

  const DivergenceSpec& spec() const { return spec_; }
  const BaseDensity& base() const { return base_; }
  /// z-locations of gradient kinks, inherited from the base density.
  const std::vector<double>& kinks() const { return base_.gradient_kinks(); }
  std::string name() const;

 private:
  DivergenceSpec spec_;
  BaseDensity base_;
  double sign_ = 1.0;
  double log_coeff_ = 0.0;  // log |1 / (alpha (alpha-1))|
};

WeightFunction weight_function(const DivergenceSpec& spec, const BaseDensity& base);

/// Divergence evaluation result; value is +inf with a diagnostic when the
/// divergence is not finite (RKL with a support gap).
struct DivergenceValue {
  double value = 0.0;
  std::string diagnostic;
  bool finite() const { return std::isfinite(value); }
};

/// Full divergence D(p, q_nu) per the defining integrals (no dropped
/// constants). For RKL with supp(q_nu) not contained in supp(p) the result is
/// Infinite rather than a large float.
DivergenceValue divergence_full(const DivergenceSpec& spec, const TargetDensity& p,
                                const LocationFamily& fam, const Eigen::VectorXd& nu,
                                const QuadratureConfig& cfg = {});
DivergenceValue divergence_full1(const DivergenceSpec& spec, const TargetDensity& p,
                                 const LocationFamily& fam, double nu,
                                 const QuadratureConfig& cfg = {});

/// Location-simplified objective (additive/positive-multiplicative constants
/// in nu dropped):
///   FKL:   integral of w(S^{-1/2}(x-nu)) p(x) dx
///   Alpha: integral of w(S^{-1/2}(x-nu)) p(x)^alpha dx
/// Throws UnsupportedSpec for RKL.
double objective_simplified(const DivergenceSpec& spec, const TargetDensity& p,
                            const LocationFamily& fam, const Eigen::VectorXd& nu,
                            const QuadratureConfig& cfg = {});
double objective_simplified1(const DivergenceSpec& spec, const TargetDensity& p,
                             const LocationFamily& fam, double nu,
                             const QuadratureConfig& cfg = {});

/// Verifies the algebra relating the full divergence to the simplified
/// objective at two locations:
///   FKL:   D(nu1) - D(nu2) == obj(nu1) - obj(nu2)
///   Alpha: D(nu) == |S|^{(alpha-1)/2} obj(nu) - 1/(alpha (alpha-1)), both nu
/// within the given tolerance.
bool check_full_vs_simplified(const DivergenceSpec& spec, const TargetDensity& p,
                              const LocationFamily& fam, double nu1, double nu2,
                              const QuadratureConfig& cfg = {}, double tol = 1e-8);

}  // namespace symvi
