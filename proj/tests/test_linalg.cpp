#include <doctest.h>

#include <cmath>

#include "pwl/linalg.hpp"
#include "pwl/rng.hpp"

using namespace pwl;

TEST_CASE("branch Jacobians") {
  const ModelParams p{0.8, 2.5, 0.05};
  const Mat2 jo = jacobian(Branch::R, p);
  CHECK(jo.a11 == 1.0 + p.b - p.c);
  CHECK(jo.a12 == -p.b);
  CHECK(jo.a21 == 1.0);
  CHECK(jo.a22 == 0.0);
  const Mat2 jl = jacobian(Branch::L, p);
  CHECK(jl.a11 == jo.a11);
  const Mat2 jm = jacobian(Branch::M, p);
  CHECK(jm.a11 == 1.0 + p.b);

  // determinant is b exactly, for every branch
  SplitMix64 rng(29);
  for (int i = 0; i < 500; ++i) {
    const ModelParams q{rng.uniform(0.05, 1.2), rng.uniform(0.05, 4.0), 0.05};
    CHECK(jacobian(Branch::L, q).det() == q.b);
    CHECK(jacobian(Branch::M, q).det() == q.b);
    CHECK(jacobian(Branch::R, q).det() == q.b);
  }
}

TEST_CASE("eigenvalues of the middle branch are 1 and b") {
  const EigenPair e = eigen(jacobian(Branch::M, ModelParams{0.8, 2.5, 0.05}));
  CHECK_FALSE(e.complex_pair);
  CHECK(e.re1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.re2 == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(e.spectral_radius == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigenvalue character fixtures") {
  // damped oscillation case: complex pair
  const EigenPair s1 = eigen(jacobian(Branch::R, ModelParams{0.8, 1.35, 0.05}));
  CHECK(s1.complex_pair);
  CHECK(s1.im1 > 0.0);
  CHECK(s1.im2 == -s1.im1);

  // monotone case: real positive pair {0.5, 0.4}
  const EigenPair s3 = eigen(jacobian(Branch::R, ModelParams{0.2, 0.3, 0.05}));
  CHECK_FALSE(s3.complex_pair);
  CHECK(s3.re1 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s3.re2 == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("eigen pair satisfies trace and determinant identities") {
  SplitMix64 rng(31);
  for (int i = 0; i < 2000; ++i) {
    const Mat2 m{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                 rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    const EigenPair e = eigen(m);
    const double disc = m.trace() * m.trace() - 4.0 * m.det();
    CHECK(e.complex_pair == (disc < 0.0));
    const double sum = e.re1 + e.re2;
    CHECK(std::abs(sum - m.trace()) <= 1e-12 * std::max(1.0, std::abs(m.trace())));
    const double prod = e.complex_pair ? e.re1 * e.re1 + e.im1 * e.im1
                                       : e.re1 * e.re2;
    CHECK(std::abs(prod - m.det()) <= 1e-11 * std::max(1.0, std::abs(m.det())));
  }
}

TEST_CASE("matrix product and apply") {
  const Mat2 a{1.0, 2.0, 3.0, 4.0};
  const Mat2 b{0.0, 1.0, -1.0, 2.0};
  const Mat2 ab = a * b;
  CHECK(ab.a11 == -2.0);
  CHECK(ab.a12 == 5.0);
  CHECK(ab.a21 == -4.0);
  CHECK(ab.a22 == 11.0);
  const State v = a.apply({1.0, -1.0});
  CHECK(v.x == -1.0);
  CHECK(v.y == -1.0);
}
