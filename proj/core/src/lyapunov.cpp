#include "pwl/lyapunov.hpp"

#include <cmath>
#include <stdexcept>

#include "pwl/linalg.hpp"
#include "pwl/map.hpp"

namespace pwl {

LyapunovResult lyapunov_max(const State& s0, const ModelParams& p, long n,
                            long transient) {
  if (n <= transient || transient < 0)
    throw std::invalid_argument("lyapunov_max: requires n > transient >= 0");
  const double rdiv = 1e6 * std::max(p.h, 1.0);

  LyapunovResult res;
  State s = s0;
  double vx = 1.0, vy = 0.0;
  double log_sum = 0.0;

  for (long t = 0; t < n; ++t) {
    if (!finite(s) || std::max(std::abs(s.x), std::abs(s.y)) > rdiv)
      throw std::runtime_error("lyapunov_max: orbit diverged");
    const Branch br = branch_of(s, p);
    ++res.branch_visits[static_cast<int>(br)];
    const Mat2 j = jacobian(br, p);
    const double wx = j.a11 * vx + j.a12 * vy;
    const double wy = j.a21 * vx + j.a22 * vy;
    const double norm = std::hypot(wx, wy);
    if (norm == 0.0) throw std::runtime_error("lyapunov_max: tangent collapsed");
    vx = wx / norm;
    vy = wy / norm;
    if (t >= transient) {
      log_sum += std::log(norm);
      ++res.steps_used;
    }
    s = step_m(s, p);
  }
  res.lambda_max = log_sum / static_cast<double>(res.steps_used);
  return res;
}

}  // namespace pwl
