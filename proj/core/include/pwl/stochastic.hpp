#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pwl/grid.hpp"
#include "pwl/params.hpp"
#include "pwl/state.hpp"

namespace pwl {

/// Shock configuration for the random-walk fundamental value. Exactly one
/// of sigma_delta (level-shock std) and sigma_d (deviation-shock std) must
/// be set (>= 0); the other is derived through sigma_d =
/// sigma_delta*sqrt(1+b^2). Negative means "not given".
struct ShockConfig {
  double sigma_delta = -1.0;
  double sigma_d = -1.0;
  std::uint64_t seed = 0;
  long t_max = 10000;
  double F0 = 100.0;  // initial fundamental level
  double x0 = 0.0;    // initial deviation
  double y0 = 0.0;    // previous deviation (P_{-1} - F0)
};

enum class Regime { FixedPointBasin, WqaBasin, DivergentBasin, Outside, Unlabeled };

/// Row t of a run: the shock delta drawn at t (F_{t+1} = F_t + delta_t),
/// the deviation shock d_t = -delta_t - b*delta_{t-1} applied in the step
/// to x_{t+1}, the levels F_t and P_t = x_t + F_t, the deviation x_t, and
/// the regime label (filled by regime_labels).
struct StochStep {
  double delta = 0.0;
  double d = 0.0;
  double F = 0.0;
  double P = 0.0;
  double x = 0.0;
  Regime regime = Regime::Unlabeled;
};

struct StochasticRun {
  ModelParams params;
  ShockConfig shocks;
  double sigma_delta = 0.0;  // resolved pair
  double sigma_d = 0.0;
  std::vector<StochStep> steps;  // rows t = 0..t_max (shorter if truncated)
  bool diverged = false;

  State state_at(long t) const {  // (x_t, x_{t-1})
    return {steps[static_cast<std::size_t>(t)].x,
            t == 0 ? shocks.y0 : steps[static_cast<std::size_t>(t) - 1].x};
  }
};

/// Iterates the shocked deviation law branch-by-branch while carrying the
/// fundamental level alongside; with both sigmas zero the deviation path
/// reproduces the deterministic orbit bit for bit. A non-finite state
/// truncates the run and sets `diverged`.
StochasticRun simulate_stochastic(const ModelParams& p, const ShockConfig& sc);

/// Labels every step by the deterministic basin the state falls into:
/// membership in the immediate basin wins outright, otherwise the covering
/// grid cell decides; states outside the grid window are Outside. The grid
/// must have been computed for the same (b, c, h).
void regime_labels(StochasticRun& run, const BasinGrid& basin);

struct RegimeStats {
  std::array<double, 5> occupancy{};     // fraction per Regime
  std::array<long, 5> sojourn_count{};   // maximal runs per Regime
  std::array<double, 5> sojourn_mean{};  // mean run length
  std::array<long, 5> sojourn_max{};     // longest run
  long switches = 0;                     // label changes
  long steps_counted = 0;

  double occ(Regime r) const { return occupancy[static_cast<int>(r)]; }
};

/// Statistics over the labeled steps with index >= transient.
RegimeStats regime_stats(const StochasticRun& run, long transient = 0);

const char* to_string(Regime r);

}  // namespace pwl
