#include "pwl/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace pwl {

Mat2 jacobian(Branch br, const ModelParams& p) {
  if (br == Branch::L || br == Branch::R) return {1.0 + p.b - p.c, -p.b, 1.0, 0.0};
  return {1.0 + p.b, -p.b, 1.0, 0.0};
}

EigenPair eigen(const Mat2& m) {
  const double tr = m.trace();
  const double det = m.det();
  const double disc = tr * tr - 4.0 * det;
  EigenPair e;
  if (disc < 0.0) {
    e.complex_pair = true;
    e.re1 = e.re2 = 0.5 * tr;
    e.im1 = 0.5 * std::sqrt(-disc);
    e.im2 = -e.im1;
    e.spectral_radius = std::hypot(e.re1, e.im1);
  } else {
    const double root = std::sqrt(disc);
    e.re1 = 0.5 * (tr + root);
    e.re2 = 0.5 * (tr - root);
    e.spectral_radius = std::max(std::abs(e.re1), std::abs(e.re2));
  }
  return e;
}

}  // namespace pwl
