#include "pwl/map.hpp"

#include <cmath>
#include <stdexcept>

namespace pwl {

Orbit iterate(MapKind kind, const State& s0, long n, const ModelParams& p) {
  if (n < 0) throw std::invalid_argument("iterate: n must be >= 0");
  Orbit orbit;
  orbit.kind = kind;
  orbit.points.reserve(static_cast<std::size_t>(n) + 1);
  State s = s0;
  for (long t = 0; t <= n; ++t) {
    if (!finite(s)) {
      orbit.overflowed = true;
      break;
    }
    const Branch br = (kind == MapKind::M) ? branch_of(s, p) : Branch::None;
    orbit.points.push_back({s, br});
    if (t < n) s = step(kind, s, p);
  }
  return orbit;
}

State inverse_outer(double u, double v, const ModelParams& p) {
  return {v, ((1.0 + p.b - p.c) * v - u) / p.b};
}

State c_closed_form(const State& s0, double b, long t) {
  if (b == 1.0) throw std::domain_error("c_closed_form: b = 1 is degenerate");
  const double u = (b * s0.y - s0.x) / (b - 1.0);
  const double k = b * (s0.y - s0.x) / (b - 1.0);
  const double bt = std::pow(b, static_cast<double>(t));
  const double btm1 = std::pow(b, static_cast<double>(t - 1));
  return {u - k * bt, u - k * btm1};
}

double c_limit(const State& s0, double b) {
  if (b == 1.0) throw std::domain_error("c_limit: b = 1 is degenerate");
  return (b * s0.y - s0.x) / (b - 1.0);
}

double price_space_step(double P_t, double P_tm1, double F_t, const RawParams& rp) {
  const double h = rp.rho / rp.theta;
  const double mispricing = P_t - F_t;
  const double chartist = rp.beta * (P_t - P_tm1);
  const double fundamentalist =
      (mispricing > h || mispricing < -h) ? rp.gamma * (F_t - P_t) : 0.0;
  return P_t + rp.alpha * (chartist + fundamentalist);
}

}  // namespace pwl
