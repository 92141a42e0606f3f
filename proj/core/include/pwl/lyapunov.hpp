#pragma once

#include <array>

#include "pwl/params.hpp"
#include "pwl/state.hpp"

namespace pwl {

struct LyapunovResult {
  double lambda_max = 0.0;             // largest exponent estimate
  std::array<long, 3> branch_visits{}; // L, M, R occupation over the orbit
  long steps_used = 0;                 // steps contributing to the estimate
};

/// Largest Lyapunov exponent along the orbit of the three-branch map:
/// a tangent vector is pushed through the branch Jacobians with per-step
/// renormalization; the first `transient` steps warm up the vector without
/// contributing. Throws std::runtime_error if the orbit leaves the
/// divergence radius 1e6*max(h,1) or turns non-finite.
LyapunovResult lyapunov_max(const State& s0, const ModelParams& p, long n,
                            long transient);

}  // namespace pwl
