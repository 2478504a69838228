#include "symvi/cases.hpp"

#include <algorithm>
#include <stdexcept>

namespace symvi {

const std::vector<std::string>& case_ids() {
  static const std::vector<std::string> ids = {"1.1", "1.2", "2.1", "2.2",
                                               "3.1", "3.2", "4.1", "4.2"};
  return ids;
}

bool is_case_id(const std::string& id) {
  const auto& ids = case_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

CaseDefinition make_case(const std::string& id) {
  if (id == "1.1")
    return {id, DivergenceSpec::fkl(), LocationFamily::gaussian(4.0), TargetDensity::p1()};
  if (id == "1.2")
    return {id, DivergenceSpec::fkl(), LocationFamily::laplace(4.0), TargetDensity::p1()};
  if (id == "2.1")
    return {id, DivergenceSpec::fkl(), LocationFamily::laplace(4.0), TargetDensity::p2()};
  if (id == "2.2")
    return {id, DivergenceSpec::fkl(), LocationFamily::student_t(5.0, 1.0),
            TargetDensity::p2()};
  if (id == "3.1")
    return {id, DivergenceSpec::alpha_div(1.1), LocationFamily::gaussian(4.0),
            TargetDensity::p1()};
  if (id == "3.2")
    return {id, DivergenceSpec::alpha_div(0.3), LocationFamily::gaussian(4.0),
            TargetDensity::p1()};
  if (id == "4.1")
    return {id, DivergenceSpec::alpha_div(1.1), LocationFamily::laplace(4.0),
            TargetDensity::p2()};
  if (id == "4.2")
    return {id, DivergenceSpec::alpha_div(0.7), LocationFamily::laplace(4.0),
            TargetDensity::p2()};
  throw std::invalid_argument("unknown case id '" + id + "' (expected 1.1 .. 4.2)");
}

}  // namespace symvi
