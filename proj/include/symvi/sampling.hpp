#pragma once

#include <Eigen/Dense>
#include <vector>

#include "symvi/target_density.hpp"

namespace symvi {

/// Radical-inverse (van der Corput) value of index i in the given base.
double radical_inverse(unsigned i, unsigned base);

/// Deterministic Halton points inside a box (bases 2, 3 for the first two
/// coordinates). Index starts at 1 so the first point is interior.
std::vector<Eigen::VectorXd> halton_box(const Box& box, int n);

}  // namespace symvi
