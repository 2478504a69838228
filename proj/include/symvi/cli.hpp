#pragma once

#include <string>
#include <vector>

#include "symvi/config.hpp"
#include "symvi/optimizer.hpp"

namespace symvi::cli {

/// Exit codes: 0 ok, 2 config error, 3 numerical failure.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

/// Sweep the divergence landscape; writes <name>_sweep.csv (header
/// "nu,divergence", 12 significant digits) and <name>_classification.json.
int cmd_sweep(const ExperimentConfig& cfg, const std::string& out_dir);

/// Emit the GuaranteeVerdict as <name>_verdict.json.
int cmd_check(const ExperimentConfig& cfg, const std::string& out_dir);

/// Gradient-descent trajectory; writes <name>_trajectory.csv with header
/// "iter,nu,divergence,gradient".
int cmd_optimize(const ExperimentConfig& cfg, const OptimizerConfig& opt,
                 const std::string& out_dir);

struct PartitionOptions {
  double nu_prime_x = 1.53;
  double nu_prime_y = -0.94;
  double scale = 1.0;  // isotropic S = scale * I
  int grid = 200;
  double box_lo = -6.0;
  double box_hi = 6.0;
  std::string target = "bimodal_2d";
};

/// Point-classification CSV "x,y,region,target_pdf" over the tau-grid.
int cmd_partition(const PartitionOptions& opt, const std::string& out_dir);

/// which: fig2 | fig5 | fig6 | partition-figure | all. Emits every sweep CSV,
/// convexity-report JSON, and partition CSV needed to regenerate the figure;
/// byte-identical across runs on one platform.
int cmd_reproduce(const std::string& which, const std::string& out_dir);

/// Full argv-level entry point (subcommands: sweep, check, optimize,
/// partition, reproduce).
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);

}  // namespace symvi::cli
