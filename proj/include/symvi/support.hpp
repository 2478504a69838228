#pragma once

#include <optional>
#include <vector>

namespace symvi {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x <= hi; }
};

/// Domain of a density: all of R^d, or (d=1) a finite union of disjoint
/// closed intervals.
class SupportSpec {
 public:
  static SupportSpec full_space(int dim);

  /// Intervals are sorted and validated pairwise disjoint.
  static SupportSpec intervals(std::vector<Interval> pieces);

  bool is_full() const { return full_; }
  int dim() const { return dim_; }
  const std::vector<Interval>& pieces() const { return pieces_; }

  /// Point membership (interval union only; full space contains everything).
  bool contains(double x) const;

  double total_length() const;

  /// Intersection with a clip window [lo, hi]; empty result has no pieces.
  /// Only valid for interval-union supports.
  SupportSpec clip(double lo, double hi) const;

 private:
  SupportSpec() = default;
  bool full_ = false;
  int dim_ = 1;
  std::vector<Interval> pieces_;
};

/// Subdivides intervals at every cut point that falls strictly inside one.
/// Used to keep integrand kinks on panel boundaries.
std::vector<Interval> split_intervals(const std::vector<Interval>& pieces,
                                      std::vector<double> cuts);

}  // namespace symvi
