#include "symvi/support.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace symvi {

SupportSpec SupportSpec::full_space(int dim) {
  if (dim < 1 || dim > 2) throw std::invalid_argument("support dimension must be 1 or 2");
  SupportSpec s;
  s.full_ = true;
  s.dim_ = dim;
  return s;
}

SupportSpec SupportSpec::intervals(std::vector<Interval> pieces) {
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (const Interval& iv : pieces) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || iv.hi < iv.lo) {
      throw std::invalid_argument("malformed support interval");
    }
  }
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i].lo < pieces[i - 1].hi) {
      throw std::invalid_argument("support intervals must be pairwise disjoint");
    }
  }
  SupportSpec s;
  s.full_ = false;
  s.dim_ = 1;
  s.pieces_ = std::move(pieces);
  return s;
}

bool SupportSpec::contains(double x) const {
  if (full_) return true;
  for (const Interval& iv : pieces_) {
    if (iv.contains(x)) return true;
  }
  return false;
}

double SupportSpec::total_length() const {
  double sum = 0.0;
  for (const Interval& iv : pieces_) sum += iv.length();
  return sum;
}

SupportSpec SupportSpec::clip(double lo, double hi) const {
  if (full_) throw std::logic_error("clip is defined for interval supports only");
  std::vector<Interval> out;
  for (const Interval& iv : pieces_) {
    const double a = std::max(iv.lo, lo);
    const double b = std::min(iv.hi, hi);
    if (b > a) out.push_back({a, b});
  }
  SupportSpec s;
  s.full_ = false;
  s.dim_ = 1;
  s.pieces_ = std::move(out);
  return s;
}

std::vector<Interval> split_intervals(const std::vector<Interval>& pieces,
                                      std::vector<double> cuts) {
  std::sort(cuts.begin(), cuts.end());
  std::vector<Interval> out;
  for (const Interval& iv : pieces) {
    double lo = iv.lo;
    for (double c : cuts) {
      if (c > lo && c < iv.hi) {
        out.push_back({lo, c});
        lo = c;
      }
    }
    out.push_back({lo, iv.hi});
  }
  return out;
}

}  // namespace symvi
