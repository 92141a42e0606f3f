#pragma once

#include <array>
#include <vector>

#include "pwl/params.hpp"
#include "pwl/state.hpp"

namespace pwl {

enum class ClassKind {
  FundamentalFP,     // converged to the origin (efficient market)
  NonfundamentalFP,  // converged to (u, u), 0 < |u| <= h (constant mispricing)
  WQA,               // bounded, aperiodic, nonchaotic oscillation
  Divergent,
  Undecided,
  PeriodicAnomaly,   // near-recurrence found at the budget; should not occur
};

struct ClassLabel {
  ClassKind kind = ClassKind::Undecided;
  double u = 0.0;   // limit coordinate for the fixed-point kinds
  int period = 0;   // recurrence period for PeriodicAnomaly
};

struct ClassifierConfig {
  long t_max = 100000;    // iteration budget
  double r_div = 0.0;     // divergence radius; 0 = auto (1e6 * max(h, 1))
  double eps_fix = 1e-10; // fixed-point tolerance
  int w_tail = 4096;      // tail window scanned for recurrence
  int p_max = 64;         // largest recurrence period scanned
  double eps_rec = 1e-9;  // recurrence tolerance (sup norm over the window)
  long transient = 2000;  // iterations discarded before attractor sampling
  int sample_cap = 256;   // max attractor samples kept (0 disables sampling)
  // When false the basin parallelogram is never consulted and convergence to
  // the segment is detected purely from the orbit; used to validate the
  // analytic early exit against plain simulation.
  bool basin_exit = true;

  double divergence_radius(const ModelParams& p) const;
};

struct ClassifyDiagnostics {
  long iterations = 0;                    // steps taken until the decision
  std::array<long, 3> branch_visits{};    // L, M, R occupation counts
  std::vector<State> samples;             // post-transient orbit samples
  bool via_basin_exit = false;
};

struct Classification {
  ClassLabel label;
  ClassifyDiagnostics diag;
};

/// Iterates the three-branch map from s0 and decides the orbit's fate:
/// entry into the immediate basin resolves to a fixed-point kind with the
/// exact limit, leaving the divergence radius (or a non-finite iterate)
/// resolves to Divergent, and an orbit that survives the full budget is
/// scanned for near-recurrence in its tail — a hit is a PeriodicAnomaly,
/// otherwise the orbit is a weird quasiperiodic one. Undecided only when
/// the recorded tail is too short to scan (t_max < 2*p_max).
Classification classify_trajectory(const State& s0, const ModelParams& p,
                                   const ClassifierConfig& cfg);

const char* to_string(ClassKind k);

}  // namespace pwl
