#include "symvi/sampling.hpp"

namespace symvi {

double radical_inverse(unsigned i, unsigned base) {
  double inv = 1.0 / base, f = inv, v = 0.0;
  while (i > 0) {
    v += f * (i % base);
    i /= base;
    f *= inv;
  }
  return v;
}

std::vector<Eigen::VectorXd> halton_box(const Box& box, int n) {
  const int d = static_cast<int>(box.lo.size());
  const unsigned bases[2] = {2, 3};
  std::vector<Eigen::VectorXd> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Eigen::VectorXd x(d);
    for (int k = 0; k < d; ++k) {
      const double u = radical_inverse(static_cast<unsigned>(i), bases[k]);
      x(k) = box.lo(k) + u * (box.hi(k) - box.lo(k));
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace symvi
