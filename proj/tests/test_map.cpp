#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "pwl/map.hpp"
#include "pwl/rng.hpp"

using namespace pwl;

namespace {
const ModelParams kP{0.8, 2.5, 0.05};

// independent evaluation of the published branch rules, used as the oracle
// for the production form
State oracle_step_m(const State& s, const ModelParams& p) {
  const double x1 = (s.x > p.h || s.x < -p.h)
                        ? (1.0 + p.b - p.c) * s.x - p.b * s.y
                        : (1.0 + p.b) * s.x - p.b * s.y;
  return {x1, s.x};
}
}  // namespace

TEST_CASE("branch assignment: outer strict, boundaries to the middle") {
  CHECK(branch_of({0.13, 0.0}, kP) == Branch::R);
  CHECK(branch_of({0.05, 0.2}, kP) == Branch::M);
  CHECK(branch_of({-0.05, 0.2}, kP) == Branch::M);
  CHECK(branch_of({-0.06, 0.0}, kP) == Branch::L);
}

TEST_CASE("one step of the three-branch map") {
  const State s1 = step_m({0.13, 0.00}, kP);  // right branch: (1+b-c)*0.13
  CHECK(s1.x == doctest::Approx(-0.091).epsilon(1e-12));
  CHECK(s1.y == 0.13);

  const State s2 = step_m({0.0, 0.0}, kP);
  CHECK(s2.x == 0.0);
  CHECK(s2.y == 0.0);

  const State s3 = step_m({-0.13, 0.00}, kP);  // odd symmetry
  CHECK(s3.x == doctest::Approx(0.091).epsilon(1e-12));
  CHECK(s3.y == -0.13);
}

TEST_CASE("limit maps") {
  const ModelParams p1{0.8, 1.0, 0.05};
  const State c = step_c({-0.13, -0.17}, p1);
  CHECK(c.x == doctest::Approx(-0.098).epsilon(1e-12));
  CHECK(c.y == -0.13);

  const ModelParams p2{0.2, 0.3, 0.05};
  const State f0 = step_f({0.0, 0.0}, p2);
  CHECK(f0.x == 0.0);
  const State f = step_f({1.0, 1.0}, p2);
  CHECK(f.x == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(f.y == 1.0);
}

TEST_CASE("production form agrees with the published branch rules") {
  SplitMix64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const ModelParams p{rng.uniform(0.05, 1.2), rng.uniform(0.05, 4.0),
                        rng.uniform(0.01, 0.5)};
    const State s{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const State got = step_m(s, p);
    const State want = oracle_step_m(s, p);
    CHECK(got.x == doctest::Approx(want.x).epsilon(1e-13));
    CHECK(got.y == want.y);
  }
}

TEST_CASE("odd symmetry holds bit for bit") {
  SplitMix64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const ModelParams p{rng.uniform(0.05, 1.2), rng.uniform(0.05, 4.0),
                        rng.uniform(0.01, 0.5)};
    const State s{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const State a = step_m({-s.x, -s.y}, p);
    const State b = step_m(s, p);
    CHECK(a.x == -b.x);
    CHECK(a.y == -b.y);
  }
}

TEST_CASE("jump across the discontinuity equals c*h") {
  // dyadic parameters: every intermediate is exact, so the jump is exact
  const ModelParams dyadic{0.75, 2.5, 0.0625};
  for (const double y : {-0.25, -0.125, 0.0, 0.0625, 0.5}) {
    const double jump = middle_rule(dyadic.h, y, dyadic.b) -
                        outer_rule(dyadic.h, y, dyadic.b, dyadic.c);
    CHECK(jump == dyadic.c * dyadic.h);
  }
  // generic parameters: exact up to round-off of the two evaluations
  SplitMix64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const ModelParams p{rng.uniform(0.05, 1.2), rng.uniform(0.05, 4.0),
                        rng.uniform(0.01, 0.5)};
    const double y = rng.uniform(-4.0 * p.h, 4.0 * p.h);
    const double jump =
        middle_rule(p.h, y, p.b) - outer_rule(p.h, y, p.b, p.c);
    CHECK(jump == doctest::Approx(p.c * p.h).epsilon(1e-12));
  }
}

TEST_CASE("fixed-point segment is exactly invariant") {
  SplitMix64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const ModelParams p{rng.uniform(0.05, 1.2), rng.uniform(0.05, 4.0),
                        rng.uniform(0.01, 0.5)};
    const double u = rng.uniform(-p.h, p.h);
    const State s = step_m({u, u}, p);
    CHECK(s.x == u);
    CHECK(s.y == u);
  }
}

TEST_CASE("iterate records states and branches") {
  const Orbit zero = iterate(MapKind::M, {0.0, 0.0}, 10, kP);
  REQUIRE(zero.points.size() == 11);
  for (const auto& pt : zero.points) {
    CHECK(pt.s.x == 0.0);
    CHECK(pt.s.y == 0.0);
    CHECK(pt.branch == Branch::M);
  }
  CHECK_FALSE(zero.overflowed);

  const Orbit c = iterate(MapKind::C, {-0.13, -0.17}, 200, ModelParams{0.8, 1.0, 0.05});
  REQUIRE(c.points.size() == 201);
  CHECK(c.points.front().branch == Branch::None);
  CHECK(std::abs(c.points.back().s.x - 0.03) < 1e-9);
  CHECK(std::abs(c.points.back().s.y - 0.03) < 1e-9);

  const Orbit m = iterate(MapKind::M, {-0.12, -0.16}, 100, kP);
  const State tail = m.points.back().s;
  CHECK(std::abs(tail.x - tail.y) < 1e-9);  // settled onto the segment
  CHECK(std::abs(tail.x) <= kP.h);
}

TEST_CASE("iterate stops at non-finite states and flags the orbit") {
  const ModelParams div{1.05, 1.35, 0.05};
  const Orbit orbit = iterate(MapKind::M, {0.1, 0.0}, 60000, div);
  CHECK(orbit.overflowed);
  CHECK(orbit.points.size() < 60001);
  for (const auto& pt : orbit.points) CHECK(finite(pt.s));
}

TEST_CASE("outer-branch inverse") {
  const ModelParams p{0.4, 2.85, 0.05};
  const State a = inverse_outer(-p.h, -p.h, p);
  CHECK(a.x == -0.05);
  CHECK(a.y == doctest::Approx(0.30625).epsilon(1e-12));
  CHECK(a.y == doctest::Approx(p.h * (p.c - p.b) / p.b).epsilon(1e-14));

  // forward-then-inverse identity, independent of admissibility
  SplitMix64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    const ModelParams q{rng.uniform(0.05, 1.2), rng.uniform(0.05, 4.0),
                        rng.uniform(0.01, 0.5)};
    const double u = rng.uniform(-1.0, 1.0);
    const double v = rng.uniform(-1.0, 1.0);
    const State pre = inverse_outer(u, v, q);
    const double fwd_x = outer_rule(pre.x, pre.y, q.b, q.c);
    CHECK(fwd_x == doctest::Approx(u).epsilon(1e-12));
    CHECK(pre.x == v);
  }
}

TEST_CASE("chartist-only closed form") {
  CHECK(c_limit({-0.13, -0.17}, 0.8) == doctest::Approx(0.03).epsilon(1e-12));
  CHECK(c_limit({-0.10, -0.17}, 0.8) == doctest::Approx(0.18).epsilon(1e-12));
  CHECK(c_limit({0.02, 0.02}, 0.8) == doctest::Approx(0.02).epsilon(1e-12));

  const State fixed = c_closed_form({0.02, 0.02}, 0.8, 37);
  CHECK(fixed.x == doctest::Approx(0.02).epsilon(1e-13));
  CHECK(fixed.y == doctest::Approx(0.02).epsilon(1e-13));

  CHECK_THROWS_AS(c_limit({0.1, 0.2}, 1.0), std::domain_error);
  CHECK_THROWS_AS(c_closed_form({0.1, 0.2}, 1.0, 3), std::domain_error);
}

TEST_CASE("closed form matches iteration") {
  SplitMix64 rng(17);
  for (int i = 0; i < 500; ++i) {
    const double b = rng.uniform(0.05, 0.95);
    const ModelParams p{b, 1.0, 0.05};
    const State s0{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const Orbit orbit = iterate(MapKind::C, s0, 50, p);
    for (const long t : {1L, 5L, 50L}) {
      const State got = orbit.points[static_cast<std::size_t>(t)].s;
      const State want = c_closed_form(s0, b, t);
      const double scale = std::max(1.0, std::abs(want.x));
      CHECK(std::abs(got.x - want.x) <= 1e-10 * scale);
      CHECK(std::abs(got.y - want.y) <= 1e-10 * std::max(1.0, std::abs(want.y)));
    }
  }
}

TEST_CASE("h only sets the scale") {
  const ModelParams p{0.8, 2.5, 0.05};
  const ModelParams unit{0.8, 2.5, 1.0};
  SplitMix64 rng(23);
  for (int i = 0; i < 200; ++i) {
    State s{rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2)};
    State scaled{s.x / p.h, s.y / p.h};
    for (int t = 0; t < 100; ++t) {
      s = step_m(s, p);
      scaled = step_m(scaled, unit);
      const double ref = std::max(p.h, std::abs(s.x));
      CHECK(std::abs(s.x - p.h * scaled.x) <= 1e-12 * ref);
    }
  }
}

TEST_CASE("price-level law") {
  const RawParams rp{1.0, 0.8, 2.5, 0.5, 0.025};
  const ModelParams agg = aggregate(rp);
  CHECK(agg.b == 0.8);
  CHECK(agg.c == 2.5);
  CHECK(agg.h == 0.05);  // rho/theta

  // flat market: no signals, fundamentalists inactive
  CHECK(price_space_step(100.0, 100.0, 100.0, rp) == 100.0);

  // deviation form and level form stay together with a frozen fundamental
  const double F = 10.0;
  double P = F + 0.13, Pm = F + 0.00;
  State s{0.13, 0.00};
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const double Pn = price_space_step(P, Pm, F, rp);
    s = step_m(s, agg);
    Pm = P;
    P = Pn;
    worst = std::max(worst, std::abs((P - F) - s.x));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(validate(ModelParams{0.0, 1.0, 0.05}), std::invalid_argument);
  CHECK_THROWS_AS(validate(ModelParams{0.5, 0.0, 0.05}), std::invalid_argument);
  CHECK_THROWS_AS(validate(ModelParams{0.5, 1.0, 0.0}), std::invalid_argument);
  CHECK_NOTHROW(validate(ModelParams{0.5, 1.0, 0.05}));
  CHECK_THROWS_AS(aggregate(RawParams{1.0, 1.0, 1.0, 1.5, 0.1}),
                  std::invalid_argument);  // theta outside (0,1)
  CHECK_THROWS_AS(aggregate(RawParams{1.0, 1.0, 1.0, 0.5, -0.1}),
                  std::invalid_argument);
}
