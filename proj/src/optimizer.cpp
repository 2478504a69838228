#include "symvi/optimizer.hpp"

#include <cmath>
#include <stdexcept>

namespace symvi {

void OptimizerConfig::validate() const {
  if (!(learning_rate > 0.0)) throw std::invalid_argument("learning rate must be positive");
  if (!(gradient_step > 0.0)) throw std::invalid_argument("gradient step must be positive");
  if (max_iterations < 1) throw std::invalid_argument("max iterations must be >= 1");
  quad.validate();
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::Converged: return "converged";
    case Termination::MaxIter: return "max_iter";
    case Termination::Diverged: return "diverged";
  }
  return "?";
}

Trajectory optimize_location(const DivergenceSpec& spec, const TargetDensity& p,
                             const LocationFamily& fam, const OptimizerConfig& cfg) {
  cfg.validate();
  Trajectory traj;
  double nu = cfg.nu0;
  const double h = cfg.gradient_step;
  auto obj = [&](double x) { return objective_simplified1(spec, p, fam, x, cfg.quad); };

  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    const double value = obj(nu);
    const double grad = (obj(nu + h) - obj(nu - h)) / (2.0 * h);
    traj.points.push_back({iter, nu, value, grad});
    if (std::abs(grad) <= cfg.gradient_tol) {
      traj.termination = Termination::Converged;
      // flat neighborhood? then the stop point is one of many, not a minimum
      const double probe = 16.0 * h;
      const double spread =
          std::max(std::abs(obj(nu + probe) - value), std::abs(obj(nu - probe) - value));
      if (spread <= 1e-9 * std::max(1.0, std::abs(value))) {
        traj.warning =
            "gradient vanished on a locally flat region; the landscape classification "
            "for this setup may be Plateau";
      }
      return traj;
    }
    const double next = nu - cfg.learning_rate * grad;
    if (std::abs(next) > cfg.divergence_bound) {
      traj.points.push_back({iter + 1, next, obj(next), 0.0});
      traj.termination = Termination::Diverged;
      return traj;
    }
    nu = next;
  }
  traj.termination = Termination::MaxIter;
  return traj;
}

}  // namespace symvi
