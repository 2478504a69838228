#include "symvi/cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "symvi/cases.hpp"
#include "symvi/conditions.hpp"
#include "symvi/errors.hpp"
#include "symvi/geometry.hpp"
#include "symvi/io_util.hpp"
#include "symvi/landscape.hpp"

namespace symvi::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string slugify(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (!out.empty() && out.back() != '_') {
      out += '_';
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

std::string run_slug(const ExperimentConfig& cfg) {
  std::string s = cfg.divergence;
  if (cfg.alpha) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", *cfg.alpha);
    s += std::string("_") + buf;
  }
  s += "_" + cfg.target + "_" + cfg.family;
  return slugify(s);
}

std::string sweep_csv(const SweepResult& res) {
  std::ostringstream out;
  out << "nu,divergence\n";
  for (std::size_t i = 0; i < res.nu.size(); ++i) {
    out << format_g12(res.nu[i]) << "," << format_g12(res.value[i]) << "\n";
  }
  return out.str();
}

ordered_json grid_json(const ConvexityGrid& g) {
  return ordered_json{{"lo", g.lo}, {"hi", g.hi}, {"n", g.n}, {"log_domain", g.log_domain}};
}

ordered_json convexity_json(const ConvexityReport& rep) {
  ordered_json j;
  j["verdict"] = to_string(rep.verdict);
  j["grid"] = grid_json(rep.grid);
  j["min_second_diff"] = rep.min_second_diff;
  j["max_second_diff"] = rep.max_second_diff;
  if (rep.witness) {
    j["witness"] = ordered_json{
        {"a", rep.witness->a}, {"b", rep.witness->b}, {"violation", rep.witness->violation}};
  }
  if (rep.flat) {
    j["flat_segment"] = ordered_json{{"lo", rep.flat->lo}, {"hi", rep.flat->hi}};
  }
  return j;
}

ordered_json classification_json(const StationaryClassification& cls) {
  ordered_json j;
  j["kind"] = to_string(cls.kind);
  switch (cls.kind) {
    case StationaryKind::UniqueGlobalMin:
    case StationaryKind::LocalMax:
      j["at"] = cls.at;
      break;
    case StationaryKind::Plateau:
      j["interval"] = ordered_json::array({cls.plateau_lo, cls.plateau_hi});
      break;
    case StationaryKind::Other:
      break;
  }
  j["gradient_at_mean"] = cls.gradient_at_mean;
  if (!cls.note.empty()) j["note"] = cls.note;
  return j;
}

ordered_json header_json(const ExperimentConfig& cfg) {
  ordered_json j;
  j["divergence"] = cfg.divergence;
  if (cfg.alpha) j["alpha"] = *cfg.alpha;
  j["family"] = cfg.family;
  j["family_param"] = cfg.family_param;
  if (cfg.student_dof) j["student_dof"] = *cfg.student_dof;
  j["target"] = cfg.target;
  return j;
}

struct RunPieces {
  DivergenceSpec spec;
  TargetDensity target;
  LocationFamily family;
};

RunPieces materialize(const ExperimentConfig& cfg) {
  return {make_divergence(cfg), make_target(cfg.target), make_family(cfg)};
}

int run_sweep(const ExperimentConfig& cfg, const std::string& out_dir, std::ostream& err) {
  try {
    const RunPieces run = materialize(cfg);
    SweepConfig sc = make_sweep_config(cfg);
    const SweepResult res = sweep(run.spec, run.target, run.family, sc);
    const StationaryClassification cls =
        classify_at_mean(res, run.target.mean1(), sc.tol_eq);

    const std::string slug = run_slug(cfg);
    const std::string csv_path =
        cfg.out_csv ? *cfg.out_csv : out_dir + "/" + slug + "_sweep.csv";
    const std::string json_path =
        cfg.out_json ? *cfg.out_json : out_dir + "/" + slug + "_classification.json";
    write_file_atomic(csv_path, sweep_csv(res));

    ordered_json j = header_json(cfg);
    j["grid"] = ordered_json{{"lo", sc.lo}, {"hi", sc.hi}, {"step", sc.step}};
    j["classification"] = classification_json(cls);
    write_file_atomic(json_path, j.dump(2) + "\n");
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

int run_check(const ExperimentConfig& cfg, const std::string& out_dir, std::ostream& err) {
  try {
    const RunPieces run = materialize(cfg);
    const GuaranteeVerdict v = verdict(run.spec, run.family, run.target);

    ordered_json j = header_json(cfg);
    j["verdict"] = to_string(v.result);
    if (v.theorem) j["theorem"] = to_string(*v.theorem);
    if (!v.reason.empty()) j["reason"] = v.reason;
    ordered_json sub;
    if (v.convexity) sub["convexity"] = convexity_json(*v.convexity);
    if (v.radially_increasing) sub["radially_increasing"] = *v.radially_increasing;
    if (v.support_around_mean) sub["support_around_mean"] = *v.support_around_mean;
    sub["symmetry"] = v.symmetry_ok;
    sub["finiteness"] = v.finiteness_ok;
    j["sub_reports"] = sub;

    const std::string path = cfg.out_json ? *cfg.out_json
                                          : out_dir + "/" + run_slug(cfg) + "_verdict.json";
    write_file_atomic(path, j.dump(2) + "\n");
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

int run_optimize(const ExperimentConfig& cfg, const OptimizerConfig& opt,
                 const std::string& out_dir, std::ostream& err) {
  try {
    const RunPieces run = materialize(cfg);
    const Trajectory traj = optimize_location(run.spec, run.target, run.family, opt);
    std::ostringstream csv;
    csv << "iter,nu,divergence,gradient\n";
    for (const TrajectoryPoint& pt : traj.points) {
      csv << pt.iteration << "," << format_g12(pt.nu) << "," << format_g12(pt.value) << ","
          << format_g12(pt.gradient) << "\n";
    }
    const std::string slug = run_slug(cfg);
    write_file_atomic(out_dir + "/" + slug + "_trajectory.csv", csv.str());

    ordered_json j = header_json(cfg);
    j["termination"] = to_string(traj.termination);
    j["final_nu"] = traj.final_nu();
    j["iterations"] = traj.points.empty() ? 0 : traj.points.back().iteration;
    if (!traj.warning.empty()) j["warning"] = traj.warning;
    write_file_atomic(out_dir + "/" + slug + "_optimize.json", j.dump(2) + "\n");
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

int run_partition(const PartitionOptions& opt, const std::string& out_dir, std::ostream& err) {
  try {
    const TargetDensity target = make_target(opt.target);
    if (target.dim() != 2) throw ConfigError("partition target must be 2-D");
    if (!(opt.scale > 0.0)) throw ConfigError("partition scale must be positive");
    Eigen::VectorXd nu_prime(2);
    nu_prime << opt.nu_prime_x, opt.nu_prime_y;
    const HalfspacePartition part(nu_prime, ScaleMatrix::isotropic(2, opt.scale));
    const Eigen::VectorXd mu = target.mean();

    std::ostringstream csv;
    csv << "x,y,region,target_pdf\n";
    const int n = opt.grid;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Eigen::VectorXd tau(2);
        tau << opt.box_lo + (opt.box_hi - opt.box_lo) * i / (n - 1),
            opt.box_lo + (opt.box_hi - opt.box_lo) * j / (n - 1);
        csv << format_g12(tau(0)) << "," << format_g12(tau(1)) << ","
            << to_string(part.classify(tau)) << "," << format_g12(target.pdf(mu + tau)) << "\n";
      }
    }
    write_file_atomic(out_dir + "/partition.csv", csv.str());
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

std::string alpha_tag(double a) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%.1f", a);
  std::string s = buf;
  for (char& c : s) {
    if (c == '.') c = '_';
  }
  return s;
}

int run_reproduce(const std::string& which, const std::string& out_dir, std::ostream& err) {
  const bool all = which == "all";
  if (!all && which != "fig2" && which != "fig5" && which != "fig6" &&
      which != "partition-figure") {
    err << "config error: unknown reproduction target '" << which
        << "' (expected fig2 | fig5 | fig6 | partition-figure | all)\n";
    return kExitConfig;
  }
  try {
    if (all || which == "fig2") {
      for (const std::string& id : case_ids()) {
        ExperimentConfig cfg = case_config(id);
        std::string tag = "case_" + id;
        for (char& c : tag) {
          if (c == '.') c = '_';
        }
        cfg.out_csv = out_dir + "/fig2_" + tag + "_sweep.csv";
        cfg.out_json = out_dir + "/fig2_" + tag + "_classification.json";
        if (const int rc = run_sweep(cfg, out_dir, err); rc != kExitOk) return rc;
      }
    }
    if (all || which == "fig5") {
      for (double a : {1.1, 1.2, 1.3, 1.4, 1.5, 1.6, 1.7, 1.8}) {
        ExperimentConfig cfg = case_config("3.1");
        cfg.alpha = a;
        cfg.out_csv = out_dir + "/fig5_case3_1_alpha_" + alpha_tag(a) + "_sweep.csv";
        cfg.out_json =
            out_dir + "/fig5_case3_1_alpha_" + alpha_tag(a) + "_classification.json";
        if (const int rc = run_sweep(cfg, out_dir, err); rc != kExitOk) return rc;
      }
      for (double a : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8}) {
        ExperimentConfig cfg = case_config("3.2");
        cfg.alpha = a;
        cfg.out_csv = out_dir + "/fig5_case3_2_alpha_" + alpha_tag(a) + "_sweep.csv";
        cfg.out_json =
            out_dir + "/fig5_case3_2_alpha_" + alpha_tag(a) + "_classification.json";
        if (const int rc = run_sweep(cfg, out_dir, err); rc != kExitOk) return rc;
      }
    }
    if (all || which == "fig6") {
      const std::vector<std::pair<std::string, BaseDensity>> bases = {
          {"gaussian", BaseDensity::gaussian()},
          {"laplace", BaseDensity::laplace()},
          {"cauchy", BaseDensity::cauchy()},
          {"student_t5", BaseDensity::student_t(5.0)},
      };
      for (const auto& [name, base] : bases) {
        for (double a : {0.1, 0.5, 0.9, 1.1, 2.0}) {
          const WeightFunction w(DivergenceSpec::alpha_div(a), base);
          const ConvexityReport rep = check_convexity(w);
          ordered_json j;
          j["base"] = name;
          j["alpha"] = a;
          j["report"] = convexity_json(rep);
          write_file_atomic(
              out_dir + "/fig6_" + name + "_alpha_" + alpha_tag(a) + "_convexity.json",
              j.dump(2) + "\n");
        }
      }
    }
    if (all || which == "partition-figure") {
      if (const int rc = run_partition(PartitionOptions{}, out_dir, err); rc != kExitOk) {
        return rc;
      }
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

/// Assemble the experiment config from --case / --config plus flag overrides.
ExperimentConfig resolve_config(const std::string& case_id, const std::string& config_path,
                                const std::optional<double>& alpha,
                                const std::optional<std::string>& range,
                                const std::optional<double>& step,
                                const std::optional<double>& tol,
                                const std::optional<double>& quad_rel,
                                const std::optional<double>& quad_abs) {
  ExperimentConfig cfg;
  if (!case_id.empty() && !config_path.empty()) {
    throw ConfigError("--case and --config are mutually exclusive");
  }
  if (!case_id.empty()) {
    if (!is_case_id(case_id)) {
      throw ConfigError("unknown case '" + case_id + "' (expected 1.1 .. 4.2)");
    }
    cfg = case_config(case_id);
  } else if (!config_path.empty()) {
    cfg = load_config(config_path);
  }
  if (alpha) {
    cfg.divergence = "alpha";
    cfg.alpha = *alpha;
  }
  if (range) {
    const std::size_t colon = range->find(':');
    if (colon == std::string::npos) {
      throw ConfigError("--range expects LO:HI");
    }
    try {
      cfg.range_lo = std::stod(range->substr(0, colon));
      cfg.range_hi = std::stod(range->substr(colon + 1));
    } catch (const std::exception&) {
      throw ConfigError("--range expects numeric LO:HI");
    }
  }
  if (step) cfg.step = *step;
  if (tol) cfg.tol_eq = *tol;
  if (quad_rel) cfg.quad_rel = *quad_rel;
  if (quad_abs) cfg.quad_abs = *quad_abs;
  return cfg;
}

}  // namespace

int cmd_sweep(const ExperimentConfig& cfg, const std::string& out_dir) {
  return run_sweep(cfg, out_dir, std::cerr);
}

int cmd_check(const ExperimentConfig& cfg, const std::string& out_dir) {
  return run_check(cfg, out_dir, std::cerr);
}

int cmd_optimize(const ExperimentConfig& cfg, const OptimizerConfig& opt,
                 const std::string& out_dir) {
  return run_optimize(cfg, opt, out_dir, std::cerr);
}

int cmd_partition(const PartitionOptions& opt, const std::string& out_dir) {
  return run_partition(opt, out_dir, std::cerr);
}

int cmd_reproduce(const std::string& which, const std::string& out_dir) {
  return run_reproduce(which, out_dir, std::cerr);
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("symvi");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

int run(int argc, const char* const* argv) {
  CLI::App app{"divergence landscapes and mean-recovery certificates for location families"};
  app.require_subcommand(1);

  std::string case_id, config_path, out_dir = ".";
  std::optional<double> alpha, step, tol, quad_rel, quad_abs;
  std::optional<std::string> range;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--case", case_id, "built-in case id (1.1 .. 4.2)");
    sub->add_option("--config", config_path, "experiment config file");
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--alpha", alpha, "alpha-divergence parameter (forces divergence=alpha)");
    sub->add_option("--range", range, "sweep range LO:HI");
    sub->add_option("--step", step, "sweep step");
    sub->add_option("--tol", tol, "relative equality tolerance");
    sub->add_option("--quad-rel", quad_rel, "quadrature relative tolerance");
    sub->add_option("--quad-abs", quad_abs, "quadrature absolute tolerance");
  };

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep the divergence over nu");
  add_common(sweep_cmd);
  CLI::App* check_cmd = app.add_subcommand("check", "emit the guarantee verdict");
  add_common(check_cmd);

  CLI::App* opt_cmd = app.add_subcommand("optimize", "gradient descent on the objective");
  add_common(opt_cmd);
  OptimizerConfig opt;
  opt_cmd->add_option("--nu0", opt.nu0, "initial location");
  opt_cmd->add_option("--lr", opt.learning_rate, "learning rate");
  opt_cmd->add_option("--max-iter", opt.max_iterations, "iteration cap");
  opt_cmd->add_option("--grad-step", opt.gradient_step, "central-difference step");
  opt_cmd->add_option("--grad-tol", opt.gradient_tol, "gradient convergence tolerance");

  CLI::App* part_cmd = app.add_subcommand("partition", "halfspace partition figure data");
  PartitionOptions popt;
  std::string nu_prime_arg, box_arg;
  part_cmd->add_option("--nu-prime", nu_prime_arg, "shift vector X,Y (default 1.53,-0.94)");
  part_cmd->add_option("--scale", popt.scale, "isotropic scale S = scale * I");
  part_cmd->add_option("--grid", popt.grid, "grid points per axis");
  part_cmd->add_option("--box", box_arg, "tau box LO:HI (default -6:6)");
  part_cmd->add_option("--target", popt.target, "2-D target name");
  part_cmd->add_option("--out", out_dir, "output directory");

  CLI::App* rep_cmd = app.add_subcommand(
      "reproduce", "emit figure data: fig2 | fig5 | fig6 | partition-figure | all");
  std::string which = "all";
  rep_cmd->add_option("which", which, "what to reproduce")->required();
  rep_cmd->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return kExitOk;
    }
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (sweep_cmd->parsed()) {
      return cmd_sweep(resolve_config(case_id, config_path, alpha, range, step, tol, quad_rel, quad_abs), out_dir);
    }
    if (check_cmd->parsed()) {
      return cmd_check(resolve_config(case_id, config_path, alpha, range, step, tol, quad_rel, quad_abs), out_dir);
    }
    if (opt_cmd->parsed()) {
      return cmd_optimize(resolve_config(case_id, config_path, alpha, range, step, tol, quad_rel, quad_abs), opt,
                          out_dir);
    }
    if (part_cmd->parsed()) {
      if (!nu_prime_arg.empty()) {
        const std::size_t comma = nu_prime_arg.find(',');
        if (comma == std::string::npos) throw ConfigError("--nu-prime expects X,Y");
        popt.nu_prime_x = std::stod(nu_prime_arg.substr(0, comma));
        popt.nu_prime_y = std::stod(nu_prime_arg.substr(comma + 1));
      }
      if (!box_arg.empty()) {
        const std::size_t colon = box_arg.find(':');
        if (colon == std::string::npos) throw ConfigError("--box expects LO:HI");
        popt.box_lo = std::stod(box_arg.substr(0, colon));
        popt.box_hi = std::stod(box_arg.substr(colon + 1));
      }
      return cmd_partition(popt, out_dir);
    }
    if (rep_cmd->parsed()) {
      return cmd_reproduce(which, out_dir);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitConfig;
}

}  // namespace symvi::cli
