#pragma once

#include "pwl/params.hpp"
#include "pwl/state.hpp"

namespace pwl {

struct Mat2 {
  double a11 = 0.0, a12 = 0.0;
  double a21 = 0.0, a22 = 0.0;

  double trace() const { return a11 + a22; }
  double det() const { return a11 * a22 - a12 * a21; }

  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a11 * r.a11 + l.a12 * r.a21, l.a11 * r.a12 + l.a12 * r.a22,
            l.a21 * r.a11 + l.a22 * r.a21, l.a21 * r.a12 + l.a22 * r.a22};
  }

  State apply(const State& s) const {
    return {a11 * s.x + a12 * s.y, a21 * s.x + a22 * s.y};
  }

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

/// Eigenvalues of a 2x2 real matrix via the characteristic quadratic.
/// Real pair: (re1, re2), im parts zero. Complex pair: re1 == re2 = real
/// part, im1 = -im2 = imaginary part (im1 > 0).
struct EigenPair {
  bool complex_pair = false;
  double re1 = 0.0, im1 = 0.0;
  double re2 = 0.0, im2 = 0.0;
  double spectral_radius = 0.0;
};

/// Jacobian of the selected branch: the outer branches share
/// [[1+b-c, -b], [1, 0]], the middle one is [[1+b, -b], [1, 0]].
/// Branch::None maps to the middle-branch matrix.
Mat2 jacobian(Branch br, const ModelParams& p);

EigenPair eigen(const Mat2& m);

}  // namespace pwl
