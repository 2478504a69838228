#pragma once

#include <string>
#include <vector>

#include "symvi/divergence.hpp"
#include "symvi/location_family.hpp"
#include "symvi/target_density.hpp"

namespace symvi {

/// Built-in experimental case: one (divergence, family, target) triple.
struct CaseDefinition {
  std::string id;
  DivergenceSpec divergence;
  LocationFamily family;
  TargetDensity target;
};

/// The eight cases of the experiments section:
///   1.1 FKL, p1, Gaussian variance 4     1.2 FKL, p1, Laplace b=4
///   2.1 FKL, p2, Laplace b=4             2.2 FKL, p2, Student-t(5) scale 1
///   3.1 alpha=1.1, p1, Gaussian var 4    3.2 alpha=0.3, p1, Gaussian var 4
///   4.1 alpha=1.1, p2, Laplace b=4       4.2 alpha=0.7, p2, Laplace b=4
const std::vector<std::string>& case_ids();
bool is_case_id(const std::string& id);
CaseDefinition make_case(const std::string& id);

}  // namespace symvi
