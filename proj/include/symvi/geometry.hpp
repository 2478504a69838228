#pragma once

#include <Eigen/Dense>
#include <string>

#include "symvi/divergence.hpp"
#include "symvi/scale_matrix.hpp"

namespace symvi {

enum class Region { H2, H3, H4 };

std::string to_string(Region r);

/// Halfspace partition of tau-space (tau = x - mu) induced by a candidate
/// shift nu' and scale S, with threshold t = ||S^{-1/2} nu'||^2 / 2:
///   H2: tau . S^{-1} nu' >  t     (weight difference <= 0)
///   H3: tau . S^{-1} nu' < -t     (mirror of H2)
///   H4: |tau . S^{-1} nu'| <= t   (slab; boundaries included)
/// H1 = H3 union H4. The origin always lies in H4.
class HalfspacePartition {
 public:
  HalfspacePartition(Eigen::VectorXd nu_prime, ScaleMatrix scale);

  int dim() const { return scale_.dim(); }
  const Eigen::VectorXd& nu_prime() const { return nu_prime_; }
  const ScaleMatrix& scale() const { return scale_; }
  double threshold() const { return threshold_; }

  /// tau . S^{-1} nu'
  double projection(const Eigen::VectorXd& tau) const;
  Region classify(const Eigen::VectorXd& tau) const;
  Region classify1(double tau) const;

 private:
  Eigen::VectorXd nu_prime_;
  ScaleMatrix scale_;
  Eigen::VectorXd inv_nu_;  // S^{-1} nu'
  double threshold_ = 0.0;
};

Region classify_point(const HalfspacePartition& part, const Eigen::VectorXd& tau);

/// Pointwise weight difference w(S^{-1/2}(tau - nu')) - w(S^{-1/2} tau).
/// Nonnegative on H3 and H4 and nonpositive on H2 whenever w is radially
/// increasing.
double delta_w(const WeightFunction& w, const ScaleMatrix& scale,
               const Eigen::VectorXd& nu_prime, const Eigen::VectorXd& tau);
double delta_w1(const WeightFunction& w, const ScaleMatrix& scale, double nu_prime, double tau);

/// Objective difference obj(mu + nu') - obj(mu) split over the partition,
/// with the symmetric integrand I = p (FKL) or p^alpha (Alpha):
///   on_Hk = integral over Hk of [w(S^{-1/2}(tau-nu')) - w(S^{-1/2}tau)]
///           I(mu + tau) dtau.
/// total = on_H2 + on_H3 + on_H4.
struct DeltaDecomposition {
  double total = 0.0;
  double on_H2 = 0.0;
  double on_H3 = 0.0;
  double on_H4 = 0.0;
};

DeltaDecomposition delta_objective_decomposition(const DivergenceSpec& spec,
                                                 const TargetDensity& p,
                                                 const LocationFamily& fam,
                                                 const Eigen::VectorXd& nu_prime,
                                                 const QuadratureConfig& cfg = {});
DeltaDecomposition delta_objective_decomposition1(const DivergenceSpec& spec,
                                                  const TargetDensity& p,
                                                  const LocationFamily& fam, double nu_prime,
                                                  const QuadratureConfig& cfg = {});

/// For n deterministic samples eta in H3: checks classify(-eta) == H2 and
/// |p(mu+eta) - p(mu-eta)| <= 1e-12.
bool mirror_pairing_check(const HalfspacePartition& part, const TargetDensity& p, int n);

}  // namespace symvi
