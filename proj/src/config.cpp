#include "symvi/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "symvi/errors.hpp"
#include "symvi/io_util.hpp"

namespace symvi {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& value, int line) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("line " + std::to_string(line) + ": expected a number, got '" + value +
                      "'");
  }
}

std::string format_exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  std::map<std::string, int> seen;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    if (const std::size_t hash = s.find('#'); hash != std::string::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const std::size_t eq = s.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line) + ": expected 'key = value'");
    }
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("line " + std::to_string(line) + ": empty key or value");
    }
    if (auto [it, inserted] = seen.emplace(key, line); !inserted) {
      throw ConfigError("line " + std::to_string(line) + ": duplicate key '" + key +
                        "' (first on line " + std::to_string(it->second) + ")");
    }
    if (key == "target") cfg.target = value;
    else if (key == "divergence") cfg.divergence = value;
    else if (key == "alpha") cfg.alpha = parse_double(value, line);
    else if (key == "family") cfg.family = value;
    else if (key == "family_param") cfg.family_param = parse_double(value, line);
    else if (key == "student_dof") cfg.student_dof = parse_double(value, line);
    else if (key == "range_lo") cfg.range_lo = parse_double(value, line);
    else if (key == "range_hi") cfg.range_hi = parse_double(value, line);
    else if (key == "step") cfg.step = parse_double(value, line);
    else if (key == "tol_eq") cfg.tol_eq = parse_double(value, line);
    else if (key == "quad_rel") cfg.quad_rel = parse_double(value, line);
    else if (key == "quad_abs") cfg.quad_abs = parse_double(value, line);
    else if (key == "out_csv") cfg.out_csv = value;
    else if (key == "out_json") cfg.out_json = value;
    else {
      throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) { return parse_config(read_file(path)); }

std::string serialize_config(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "target = " << cfg.target << "\n";
  out << "divergence = " << cfg.divergence << "\n";
  if (cfg.alpha) out << "alpha = " << format_exact(*cfg.alpha) << "\n";
  out << "family = " << cfg.family << "\n";
  out << "family_param = " << format_exact(cfg.family_param) << "\n";
  if (cfg.student_dof) out << "student_dof = " << format_exact(*cfg.student_dof) << "\n";
  out << "range_lo = " << format_exact(cfg.range_lo) << "\n";
  out << "range_hi = " << format_exact(cfg.range_hi) << "\n";
  out << "step = " << format_exact(cfg.step) << "\n";
  out << "tol_eq = " << format_exact(cfg.tol_eq) << "\n";
  out << "quad_rel = " << format_exact(cfg.quad_rel) << "\n";
  out << "quad_abs = " << format_exact(cfg.quad_abs) << "\n";
  if (cfg.out_csv) out << "out_csv = " << *cfg.out_csv << "\n";
  if (cfg.out_json) out << "out_json = " << *cfg.out_json << "\n";
  return out.str();
}

namespace {

// "unif(a,b)" -> component; used standalone and inside mix(...)
UniformComponent parse_unif_term(const std::string& term, double weight) {
  const std::string t = trim(term);
  if (t.rfind("unif(", 0) != 0 || t.back() != ')') {
    throw ConfigError("bad uniform term '" + term + "': expected unif(a,b)");
  }
  const std::string inner = t.substr(5, t.size() - 6);
  const std::size_t comma = inner.find(',');
  if (comma == std::string::npos) {
    throw ConfigError("bad uniform term '" + term + "': expected two endpoints");
  }
  UniformComponent c;
  c.weight = weight;
  try {
    c.lo = std::stod(trim(inner.substr(0, comma)));
    c.hi = std::stod(trim(inner.substr(comma + 1)));
  } catch (const std::exception&) {
    throw ConfigError("bad uniform endpoints in '" + term + "'");
  }
  return c;
}

}  // namespace

TargetDensity make_target(const std::string& spec_text) {
  const std::string s = trim(spec_text);
  if (s == "p1") return TargetDensity::p1();
  if (s == "p2") return TargetDensity::p2();
  if (s == "std_normal") return TargetDensity::std_normal();
  if (s == "bimodal_2d") return TargetDensity::bimodal_2d();
  if (s.rfind("unif(", 0) == 0) {
    const UniformComponent c = parse_unif_term(s, 1.0);
    return TargetDensity::uniform(c.lo, c.hi);
  }
  if (s.rfind("mix(", 0) == 0 && s.back() == ')') {
    const std::string inner = s.substr(4, s.size() - 5);
    std::vector<UniformComponent> comps;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= inner.size(); ++i) {
      if (i < inner.size() && inner[i] == '(') ++depth;
      if (i < inner.size() && inner[i] == ')') --depth;
      if (i == inner.size() || (inner[i] == '+' && depth == 0)) {
        const std::string term = trim(inner.substr(start, i - start));
        const std::size_t star = term.find('*');
        if (star == std::string::npos) {
          throw ConfigError("bad mixture term '" + term + "': expected w*unif(a,b)");
        }
        double weight = 0.0;
        try {
          weight = std::stod(trim(term.substr(0, star)));
        } catch (const std::exception&) {
          throw ConfigError("bad mixture weight in '" + term + "'");
        }
        comps.push_back(parse_unif_term(term.substr(star + 1), weight));
        start = i + 1;
      }
    }
    try {
      return TargetDensity::uniform_mixture(std::move(comps), s);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("bad mixture: ") + e.what());
    }
  }
  throw ConfigError("unknown target '" + s + "'");
}

LocationFamily make_family(const ExperimentConfig& cfg) {
  if (cfg.family == "gaussian") return LocationFamily::gaussian(cfg.family_param);
  if (cfg.family == "laplace") return LocationFamily::laplace(cfg.family_param);
  if (cfg.family == "cauchy") return LocationFamily::cauchy(cfg.family_param);
  if (cfg.family == "student_t") {
    if (!cfg.student_dof) {
      throw ConfigError("family = student_t requires student_dof");
    }
    return LocationFamily::student_t(*cfg.student_dof, cfg.family_param);
  }
  throw ConfigError("unknown family '" + cfg.family +
                    "' (expected gaussian | laplace | student_t | cauchy)");
}

DivergenceSpec make_divergence(const ExperimentConfig& cfg) {
  if (cfg.divergence == "fkl") return DivergenceSpec::fkl();
  if (cfg.divergence == "rkl") return DivergenceSpec::rkl();
  if (cfg.divergence == "alpha") {
    if (!cfg.alpha) throw ConfigError("divergence = alpha requires an alpha value");
    try {
      return DivergenceSpec::alpha_div(*cfg.alpha);
    } catch (const InvalidAlpha& e) {
      throw ConfigError(e.what());
    }
  }
  throw ConfigError("unknown divergence '" + cfg.divergence +
                    "' (expected fkl | rkl | alpha)");
}

SweepConfig make_sweep_config(const ExperimentConfig& cfg) {
  SweepConfig sc;
  sc.lo = cfg.range_lo;
  sc.hi = cfg.range_hi;
  sc.step = cfg.step;
  sc.tol_eq = cfg.tol_eq;
  sc.quad.rel_tol = cfg.quad_rel;
  sc.quad.abs_tol = cfg.quad_abs;
  return sc;
}

ExperimentConfig case_config(const std::string& case_id) {
  const CaseDefinition def = make_case(case_id);
  ExperimentConfig cfg;
  cfg.target = def.target.name();
  switch (def.divergence.kind) {
    case DivergenceSpec::Kind::FKL: cfg.divergence = "fkl"; break;
    case DivergenceSpec::Kind::RKL: cfg.divergence = "rkl"; break;
    case DivergenceSpec::Kind::Alpha:
      cfg.divergence = "alpha";
      cfg.alpha = def.divergence.alpha;
      break;
  }
  switch (def.family.base().kind()) {
    case BaseKind::Gaussian: cfg.family = "gaussian"; break;
    case BaseKind::Laplace: cfg.family = "laplace"; break;
    case BaseKind::StudentT:
      cfg.family = "student_t";
      cfg.student_dof = def.family.base().dof();
      break;
    case BaseKind::Cauchy: cfg.family = "cauchy"; break;
  }
  cfg.family_param = def.family.param().value;
  return cfg;
}

}  // namespace symvi
