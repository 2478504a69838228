#include "symvi/divergence.hpp"

#include <cmath>
#include <limits>

#include "symvi/errors.hpp"

namespace symvi {

DivergenceSpec DivergenceSpec::alpha_div(double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0) {
    throw InvalidAlpha("alpha-divergence requires alpha > 0 and alpha != 1, got " +
                       std::to_string(alpha));
  }
  return {Kind::Alpha, alpha};
}

std::string DivergenceSpec::name() const {
  switch (kind) {
    case Kind::RKL: return "rkl";
    case Kind::FKL: return "fkl";
    case Kind::Alpha: return "alpha(" + std::to_string(alpha) + ")";
  }
  return "?";
}

WeightFunction::WeightFunction(DivergenceSpec spec, BaseDensity base)
    : spec_(spec), base_(std::move(base)) {
  switch (spec_.kind) {
    case DivergenceSpec::Kind::RKL:
      throw UnsupportedSpec("the RKL has no location-simplified weight form");
    case DivergenceSpec::Kind::FKL:
      break;
    case DivergenceSpec::Kind::Alpha: {
      const double a = spec_.alpha;
      if (!(a > 0.0) || a == 1.0) throw InvalidAlpha("invalid alpha in weight function");
      const double coeff = a * (a - 1.0);
      sign_ = coeff > 0.0 ? 1.0 : -1.0;
      log_coeff_ = -std::log(std::abs(coeff));
      break;
    }
  }
}

double WeightFunction::operator()(double z) const {
  if (spec_.kind == DivergenceSpec::Kind::FKL) return -base_.log_pdf(z);
  return sign_ * std::exp(log_abs(z));
}

double WeightFunction::operator()(const Eigen::VectorXd& z) const {
  if (spec_.kind == DivergenceSpec::Kind::FKL) return -base_.log_pdf(z);
  return sign_ * std::exp((1.0 - spec_.alpha) * base_.log_pdf(z) + log_coeff_);
}

double WeightFunction::log_abs(double z) const {
  if (spec_.kind == DivergenceSpec::Kind::FKL) {
    return std::log(std::abs(base_.log_pdf(z)));
  }
  return (1.0 - spec_.alpha) * base_.log_pdf(z) + log_coeff_;
}

std::string WeightFunction::name() const { return spec_.name() + " weight on " + base_.name(); }

WeightFunction weight_function(const DivergenceSpec& spec, const BaseDensity& base) {
  return {spec, base};
}

namespace {

/// Support pieces cut at the integrand's interior kinks: the weight's
/// gradient kinks (mapped to x-space) and any mixture component edge that
/// falls inside a merged support piece.
std::vector<Interval> integration_pieces(const TargetDensity& p, const LocationFamily& fam,
                                         double nu) {
  std::vector<double> cuts = fam.pdf_kinks(nu);
  if (const auto& comps = p.uniform_components()) {
    for (const UniformComponent& c : *comps) {
      cuts.push_back(c.lo);
      cuts.push_back(c.hi);
    }
  }
  return split_intervals(p.support().pieces(), std::move(cuts));
}

double objective_1d(const DivergenceSpec& spec, const TargetDensity& p,
                    const LocationFamily& fam, double nu, const QuadratureConfig& cfg) {
  const WeightFunction w(spec, fam.base());
  const double sih = fam.scale().inv_sqrt1();
  const bool is_alpha = spec.kind == DivergenceSpec::Kind::Alpha;
  const double alpha = spec.alpha;
  auto integrand = [&](double x) {
    const double px = p.pdf1(x);
    const double weight_term = w(sih * (x - nu));
    if (!is_alpha) return weight_term * px;
    return px > 0.0 ? weight_term * std::pow(px, alpha) : 0.0;
  };
  if (!p.support().is_full()) {
    return integrate_pieces(integrand, integration_pieces(p, fam, nu), cfg);
  }
  const RealLineMap map{p.mean1(), std::max(1.0, fam.scale().sqrt1())};
  return integrate_1d(integrand, SupportSpec::full_space(1), cfg, map);
}

double objective_2d(const DivergenceSpec& spec, const TargetDensity& p,
                    const LocationFamily& fam, const Eigen::VectorXd& nu,
                    const QuadratureConfig& cfg) {
  const WeightFunction w(spec, fam.base());
  const bool is_alpha = spec.kind == DivergenceSpec::Kind::Alpha;
  const double alpha = spec.alpha;
  const Box box = p.effective_box(cfg.tail_mass);
  Eigen::VectorXd x(2);
  auto integrand = [&](double x0, double x1) {
    Eigen::VectorXd pt(2);
    pt << x0, x1;
    const double px = p.pdf(pt);
    const double weight_term = w(fam.scale().whiten(pt - nu));
    if (!is_alpha) return weight_term * px;
    return px > 0.0 ? weight_term * std::pow(px, alpha) : 0.0;
  };
  return integrate_2d(integrand, {box.lo(0), box.hi(0), box.lo(1), box.hi(1)}, cfg);
}

}  // namespace

double objective_simplified1(const DivergenceSpec& spec, const TargetDensity& p,
                             const LocationFamily& fam, double nu,
                             const QuadratureConfig& cfg) {
  if (spec.kind == DivergenceSpec::Kind::RKL) {
    throw UnsupportedSpec("objective_simplified is undefined for the RKL");
  }
  if (p.dim() != 1 || fam.dim() != 1) throw DimensionMismatch("expected 1-D target and family");
  return objective_1d(spec, p, fam, nu, cfg);
}

double objective_simplified(const DivergenceSpec& spec, const TargetDensity& p,
                            const LocationFamily& fam, const Eigen::VectorXd& nu,
                            const QuadratureConfig& cfg) {
  if (spec.kind == DivergenceSpec::Kind::RKL) {
    throw UnsupportedSpec("objective_simplified is undefined for the RKL");
  }
  if (p.dim() != fam.dim() || nu.size() != p.dim()) {
    throw DimensionMismatch("target/family/location dimensions disagree");
  }
  if (p.dim() == 1) return objective_1d(spec, p, fam, nu(0), cfg);
  return objective_2d(spec, p, fam, nu, cfg);
}

namespace {

DivergenceValue fkl_full(const TargetDensity& p, const LocationFamily& fam,
                         const Eigen::VectorXd& nu, const QuadratureConfig& cfg) {
  if (p.dim() == 1) {
    auto integrand = [&](double x) {
      const double px = p.pdf1(x);
      if (px <= 0.0) return 0.0;  // u log u -> 0
      return px * (std::log(px) - fam.log_pdf1(nu(0), x));
    };
    if (!p.support().is_full()) {
      return {integrate_pieces(integrand, integration_pieces(p, fam, nu(0)), cfg), ""};
    }
    const RealLineMap map{p.mean1(), std::max(1.0, fam.scale().sqrt1())};
    return {integrate_1d(integrand, SupportSpec::full_space(1), cfg, map), ""};
  }
  const Box box = p.effective_box(cfg.tail_mass);
  auto integrand = [&](double x0, double x1) {
    Eigen::VectorXd pt(2);
    pt << x0, x1;
    const double px = p.pdf(pt);
    if (px <= 0.0) return 0.0;
    return px * (std::log(px) - fam.log_pdf(nu, pt));
  };
  return {integrate_2d(integrand, {box.lo(0), box.hi(0), box.lo(1), box.hi(1)}, cfg), ""};
}

DivergenceValue alpha_full(const DivergenceSpec& spec, const TargetDensity& p,
                           const LocationFamily& fam, const Eigen::VectorXd& nu,
                           const QuadratureConfig& cfg) {
  const double a = spec.alpha;
  // D = (B - 1) / (a (a-1)) with B = integral of p^a q^{1-a} over supp(p)
  double b = 0.0;
  if (p.dim() == 1) {
    auto integrand = [&](double x) {
      const double px = p.pdf1(x);
      if (px <= 0.0) return 0.0;
      return std::exp(a * std::log(px) + (1.0 - a) * fam.log_pdf1(nu(0), x));
    };
    if (!p.support().is_full()) {
      b = integrate_pieces(integrand, integration_pieces(p, fam, nu(0)), cfg);
    } else {
      const RealLineMap map{p.mean1(), std::max(1.0, fam.scale().sqrt1())};
      b = integrate_1d(integrand, SupportSpec::full_space(1), cfg, map);
    }
  } else {
    const Box box = p.effective_box(cfg.tail_mass);
    auto integrand = [&](double x0, double x1) {
      Eigen::VectorXd pt(2);
      pt << x0, x1;
      const double px = p.pdf(pt);
      if (px <= 0.0) return 0.0;
      return std::exp(a * std::log(px) + (1.0 - a) * fam.log_pdf(nu, pt));
    };
    b = integrate_2d(integrand, {box.lo(0), box.hi(0), box.lo(1), box.hi(1)}, cfg);
  }
  return {(b - 1.0) / (a * (a - 1.0)), ""};
}

DivergenceValue rkl_full(const TargetDensity& p, const LocationFamily& fam,
                         const Eigen::VectorXd& nu, const QuadratureConfig& cfg) {
  if (!p.support().is_full()) {
    // Every family member has full support, so q_nu carries positive mass
    // where p = 0 and the integrand is +inf there.
    return {std::numeric_limits<double>::infinity(),
            "supp(q_nu) is not contained in supp(p): q_nu has positive mass on the "
            "target's support gaps, so the RKL integral diverges"};
  }
  if (p.dim() == 1) {
    auto integrand = [&](double x) {
      const double lq = fam.log_pdf1(nu(0), x);
      const double q = std::exp(lq);
      if (q <= 0.0) return 0.0;
      const double px = p.pdf1(x);
      return q * (lq - std::log(px));
    };
    const RealLineMap map{nu(0), std::max(1.0, fam.scale().sqrt1())};
    return {integrate_1d(integrand, SupportSpec::full_space(1), cfg, map), ""};
  }
  // hull of the target's effective box and a generous ball around nu
  Box box = p.effective_box(cfg.tail_mass);
  const double r = 10.0 * std::sqrt(fam.scale().matrix().diagonal().maxCoeff());
  for (int i = 0; i < 2; ++i) {
    box.lo(i) = std::min(box.lo(i), nu(i) - r);
    box.hi(i) = std::max(box.hi(i), nu(i) + r);
  }
  auto integrand = [&](double x0, double x1) {
    Eigen::VectorXd pt(2);
    pt << x0, x1;
    const double lq = fam.log_pdf(nu, pt);
    const double q = std::exp(lq);
    if (q <= 0.0) return 0.0;
    return q * (lq - std::log(p.pdf(pt)));
  };
  return {integrate_2d(integrand, {box.lo(0), box.hi(0), box.lo(1), box.hi(1)}, cfg), ""};
}

}  // namespace

DivergenceValue divergence_full(const DivergenceSpec& spec, const TargetDensity& p,
                                const LocationFamily& fam, const Eigen::VectorXd& nu,
                                const QuadratureConfig& cfg) {
  if (p.dim() != fam.dim() || nu.size() != p.dim()) {
    throw DimensionMismatch("target/family/location dimensions disagree");
  }
  switch (spec.kind) {
    case DivergenceSpec::Kind::FKL: return fkl_full(p, fam, nu, cfg);
    case DivergenceSpec::Kind::Alpha: return alpha_full(spec, p, fam, nu, cfg);
    case DivergenceSpec::Kind::RKL: return rkl_full(p, fam, nu, cfg);
  }
  throw std::logic_error("unreachable");
}

DivergenceValue divergence_full1(const DivergenceSpec& spec, const TargetDensity& p,
                                 const LocationFamily& fam, double nu,
                                 const QuadratureConfig& cfg) {
  return divergence_full(spec, p, fam, Eigen::VectorXd::Constant(1, nu), cfg);
}

bool check_full_vs_simplified(const DivergenceSpec& spec, const TargetDensity& p,
                              const LocationFamily& fam, double nu1, double nu2,
                              const QuadratureConfig& cfg, double tol) {
  if (spec.kind == DivergenceSpec::Kind::RKL) {
    throw UnsupportedSpec("no full-vs-simplified relation for the RKL");
  }
  const DivergenceValue d1 = divergence_full1(spec, p, fam, nu1, cfg);
  const DivergenceValue d2 = divergence_full1(spec, p, fam, nu2, cfg);
  if (!d1.finite() || !d2.finite()) return false;
  const double o1 = objective_simplified1(spec, p, fam, nu1, cfg);
  const double o2 = objective_simplified1(spec, p, fam, nu2, cfg);
  if (spec.kind == DivergenceSpec::Kind::FKL) {
    const double lhs = d1.value - d2.value;
    const double rhs = o1 - o2;
    return std::abs(lhs - rhs) <= tol * std::max(1.0, std::abs(lhs));
  }
  const double a = spec.alpha;
  const double det_factor = std::pow(fam.scale().inv_sqrt_det(), 1.0 - a);
  const double shift = 1.0 / (a * (a - 1.0));
  const double r1 = det_factor * o1 - shift;
  const double r2 = det_factor * o2 - shift;
  return std::abs(d1.value - r1) <= tol * std::max(1.0, std::abs(d1.value)) &&
         std::abs(d2.value - r2) <= tol * std::max(1.0, std::abs(d2.value));
}

}  // namespace symvi
