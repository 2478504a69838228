#pragma once

#include <optional>
#include <string>

#include "symvi/cases.hpp"
#include "symvi/divergence.hpp"
#include "symvi/landscape.hpp"
#include "symvi/location_family.hpp"
#include "symvi/target_density.hpp"

namespace symvi {

/// A full experiment description in flat key-value form.
///
/// Keys: target, divergence, alpha, family, family_param, student_dof,
///       range_lo, range_hi, step, tol_eq, quad_rel, quad_abs, out_csv,
///       out_json.
/// Target syntax: p1 | p2 | std_normal | unif(a,b)
///                | mix(w*unif(a,b) + w*unif(a,b) + ...)
/// Unknown keys are rejected with their line number.
struct ExperimentConfig {
  std::string target = "p1";
  std::string divergence = "fkl";  // fkl | rkl | alpha
  std::optional<double> alpha;
  std::string family = "gaussian";  // gaussian | laplace | student_t | cauchy
  double family_param = 4.0;        // gaussian: variance; others: scale
  std::optional<double> student_dof;
  double range_lo = -15.0;
  double range_hi = 15.0;
  double step = 0.01;
  double tol_eq = 1e-9;
  double quad_rel = 1e-10;  // quadrature relative tolerance
  double quad_abs = 1e-12;  // quadrature absolute tolerance
  std::optional<std::string> out_csv;
  std::optional<std::string> out_json;

  bool operator==(const ExperimentConfig&) const = default;
};

/// Throws ConfigError with line information on bad syntax, unknown keys,
/// duplicate keys, or invalid values.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// serialize + parse round-trips to an identical config.
std::string serialize_config(const ExperimentConfig& cfg);

/// Materialize the run pieces described by a config.
TargetDensity make_target(const std::string& spec_text);
LocationFamily make_family(const ExperimentConfig& cfg);
DivergenceSpec make_divergence(const ExperimentConfig& cfg);
SweepConfig make_sweep_config(const ExperimentConfig& cfg);

/// Config equivalent of a built-in case id ("1.1" .. "4.2").
ExperimentConfig case_config(const std::string& case_id);

}  // namespace symvi
