#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symvi/divergence.hpp"

namespace symvi {

struct SweepConfig {
  double lo = -15.0;
  double hi = 15.0;
  double step = 0.01;         // reference grid: [-15, 15], step 0.01
  double tol_eq = 1e-9;       // relative equality tolerance
  double neighborhood = 0.0;  // classification neighborhood radius; 0 -> one grid step
  QuadratureConfig quad;

  void validate() const;
  int num_points() const;
};

struct SweepResult {
  std::vector<double> nu;
  std::vector<double> value;
  SweepConfig config;
  std::string divergence, family, target;  // identifiers for output
};

/// Evaluates the simplified objective at every grid point. Deterministic and
/// independent of evaluation order (grid points are assembled by index);
/// embarrassingly parallel internally. Quadrature failures abort with the
/// offending nu reported.
SweepResult sweep(const DivergenceSpec& spec, const TargetDensity& p, const LocationFamily& fam,
                  const SweepConfig& cfg);

enum class StationaryKind { UniqueGlobalMin, Plateau, LocalMax, Other };

std::string to_string(StationaryKind k);

struct StationaryClassification {
  StationaryKind kind = StationaryKind::Other;
  double at = 0.0;                       // UniqueGlobalMin / LocalMax location
  double plateau_lo = 0.0, plateau_hi = 0.0;  // Plateau interval (grid-snapped)
  double gradient_at_mean = 0.0;         // central difference on the grid
  std::string note;
};

/// Classifies the stationary point at the target mean from sweep data.
/// Equality comparisons use value-relative thresholds
/// tol_eq * max(|D_a|, |D_b|) (see docs: the sweep-range scale breaks down
/// when the objective spans many orders of magnitude).
StationaryClassification classify_at_mean(const SweepResult& res, double mu, double tol_eq);

/// |obj(mu+h) - obj(mu-h)| / (2h); ~0 for every symmetry-compliant setup.
double stationarity_residual(const DivergenceSpec& spec, const TargetDensity& p,
                             const LocationFamily& fam, double mu, double h,
                             const QuadratureConfig& cfg = {});

/// d-dimensional variant: Euclidean norm of the central-difference gradient.
double stationarity_residual(const DivergenceSpec& spec, const TargetDensity& p,
                             const LocationFamily& fam, const Eigen::VectorXd& mu, double h,
                             const QuadratureConfig& cfg = {});

}  // namespace symvi
