#pragma once

#include <string>
#include <vector>

#include "symvi/divergence.hpp"

namespace symvi {

struct OptimizerConfig {
  double nu0 = 0.0;
  double learning_rate = 0.5;
  int max_iterations = 1000;
  double gradient_step = 1e-4;   // central-difference h
  double gradient_tol = 1e-7;    // convergence on |gradient|
  double divergence_bound = 15.0;  // |nu| beyond this counts as diverged
  QuadratureConfig quad;

  void validate() const;
};

enum class Termination { Converged, MaxIter, Diverged };

std::string to_string(Termination t);

struct TrajectoryPoint {
  int iteration = 0;
  double nu = 0.0;
  double value = 0.0;
  double gradient = 0.0;
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  Termination termination = Termination::MaxIter;
  std::string warning;  // e.g. converged on a plateau

  double final_nu() const { return points.empty() ? 0.0 : points.back().nu; }
};

/// Plain gradient descent on the simplified objective with central-difference
/// gradients. The artifact demonstrates landscape geometry, not optimizer
/// sophistication.
Trajectory optimize_location(const DivergenceSpec& spec, const TargetDensity& p,
                             const LocationFamily& fam, const OptimizerConfig& cfg);

}  // namespace symvi
