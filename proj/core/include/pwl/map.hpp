#pragma once

#include <vector>

#include "pwl/params.hpp"
#include "pwl/state.hpp"

namespace pwl {

inline Branch branch_of(const State& s, const ModelParams& p) {
  if (s.x > p.h) return Branch::R;
  if (s.x < -p.h) return Branch::L;
  return Branch::M;  // boundaries x = +-h belong to the middle branch
}

// The branch maps are evaluated as x + b*(x - y) [- c*x] rather than the
// expanded (1+b[-c])*x - b*y. Both are the same polynomial, but this form
// keeps the diagonal exactly invariant (x == y gives x' == x bit for bit)
// and makes the jump across x = +-h exactly c*h.
inline double middle_rule(double x, double y, double b) { return x + b * (x - y); }
inline double outer_rule(double x, double y, double b, double c) {
  return x + b * (x - y) - c * x;
}

/// One iteration of the full three-branch map.
inline State step_m(const State& s, const ModelParams& p) {
  const double x1 = (s.x > p.h || s.x < -p.h) ? outer_rule(s.x, s.y, p.b, p.c)
                                              : middle_rule(s.x, s.y, p.b);
  return {x1, s.x};
}

/// Limit map with both speculator types always active (h = 0).
inline State step_f(const State& s, const ModelParams& p) {
  return {outer_rule(s.x, s.y, p.b, p.c), s.x};
}

/// Limit map with chartists alone (h = infinity).
inline State step_c(const State& s, const ModelParams& p) {
  return {middle_rule(s.x, s.y, p.b), s.x};
}

inline State step(MapKind k, const State& s, const ModelParams& p) {
  switch (k) {
    case MapKind::F: return step_f(s, p);
    case MapKind::C: return step_c(s, p);
    default: return step_m(s, p);
  }
}

struct OrbitPoint {
  State s;
  Branch branch;  // partition label of s for kind M, None for F/C
};

struct Orbit {
  MapKind kind = MapKind::M;
  std::vector<OrbitPoint> points;  // length n+1 unless truncated
  bool overflowed = false;         // hit a non-finite state before n steps
};

/// Iterates n steps from s0, recording every visited state. A non-finite
/// iterate stops the orbit early and sets `overflowed`; the offending state
/// is not appended.
Orbit iterate(MapKind kind, const State& s0, long n, const ModelParams& p);

/// Unique preimage of (u, v) under the outer linear rule,
/// (v, ((1+b-c)v - u)/b). Admissibility (the preimage actually lying in the
/// L or R partition) is the caller's concern.
State inverse_outer(double u, double v, const ModelParams& p);

/// Exact t-th iterate of the chartist-only map from s0 (valid for b != 1):
///   x_t = u - K*b^t,  y_t = u - K*b^(t-1),
/// with u = (b*y0 - x0)/(b-1) and K = b*(y0 - x0)/(b-1).
State c_closed_form(const State& s0, double b, long t);

/// Limit coordinate u of the chartist-only dynamics; the orbit converges to
/// (u, u) when 0 < b < 1. Throws std::domain_error for b == 1.
double c_limit(const State& s0, double b);

/// One step of the price-level law: the market maker moves the price by
/// alpha times speculative excess demand, with fundamentalists inactive
/// while |P_t - F_t| <= rho/theta.
double price_space_step(double P_t, double P_tm1, double F_t, const RawParams& rp);

}  // namespace pwl
