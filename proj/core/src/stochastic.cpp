#include "pwl/stochastic.hpp"

#include <cmath>
#include <stdexcept>

#include "pwl/geometry.hpp"
#include "pwl/map.hpp"
#include "pwl/rng.hpp"

namespace pwl {

namespace {

std::pair<double, double> resolve_sigmas(const ShockConfig& sc, double b) {
  const bool have_delta = sc.sigma_delta >= 0.0;
  const bool have_d = sc.sigma_d >= 0.0;
  if (have_delta == have_d)
    throw std::invalid_argument(
        "shock config: exactly one of sigma_delta / sigma_d must be given");
  const double scale = std::sqrt(1.0 + b * b);
  if (have_delta) return {sc.sigma_delta, sc.sigma_delta * scale};
  return {sc.sigma_d / scale, sc.sigma_d};
}

Regime regime_of_cell(const ClassLabel& l) {
  switch (l.kind) {
    case ClassKind::FundamentalFP:
    case ClassKind::NonfundamentalFP: return Regime::FixedPointBasin;
    case ClassKind::WQA: return Regime::WqaBasin;
    case ClassKind::Divergent: return Regime::DivergentBasin;
    default: return Regime::Outside;
  }
}

}  // namespace

StochasticRun simulate_stochastic(const ModelParams& p, const ShockConfig& sc) {
  validate(p);
  if (sc.t_max < 0) throw std::invalid_argument("shock config: t_max must be >= 0");
  StochasticRun run;
  run.params = p;
  run.shocks = sc;
  auto [sigma_delta, sigma_d] = resolve_sigmas(sc, p.b);
  run.sigma_delta = sigma_delta;
  run.sigma_d = sigma_d;
  run.steps.reserve(static_cast<std::size_t>(sc.t_max) + 1);

  NormalStream noise(sc.seed);
  double x = sc.x0, y = sc.y0, F = sc.F0;
  double delta_prev = 0.0;
  const auto norm0 = [](double v) { return v == 0.0 ? 0.0 : v; };  // no -0 rows
  for (long t = 0; t <= sc.t_max; ++t) {
    const double delta = norm0(sigma_delta * noise.next());
    const double d = norm0(-delta - p.b * delta_prev);
    run.steps.push_back({delta, d, F, x + F, x, Regime::Unlabeled});
    if (t == sc.t_max) break;
    const State next = step_m({x, y}, p);
    const double x1 = next.x + d;
    const double F1 = F + delta;
    if (!std::isfinite(x1) || !std::isfinite(F1)) {
      run.diverged = true;
      break;
    }
    y = x;
    x = x1;
    F = F1;
    delta_prev = delta;
  }
  return run;
}

void regime_labels(StochasticRun& run, const BasinGrid& basin) {
  const ModelParams& p = run.params;
  if (basin.params.b != p.b || basin.params.c != p.c || basin.params.h != p.h)
    throw std::invalid_argument("regime_labels: basin grid parameters differ");
  const GridSpec2D& spec = basin.spec;
  const double wx = (spec.x_max - spec.x_min) / spec.nx;
  const double wy = (spec.y_max - spec.y_min) / spec.ny;
  const bool contracting = p.b > 0.0 && p.b < 1.0;

  for (long t = 0; t < static_cast<long>(run.steps.size()); ++t) {
    const State s = run.state_at(t);
    Regime r = Regime::Outside;
    if (contracting && in_immediate_basin(s, p)) {
      r = Regime::FixedPointBasin;
    } else if (s.x >= spec.x_min && s.x <= spec.x_max && s.y >= spec.y_min &&
               s.y <= spec.y_max) {
      const int i = std::min(spec.nx - 1,
                             static_cast<int>((s.x - spec.x_min) / wx));
      const int j = std::min(spec.ny - 1,
                             static_cast<int>((s.y - spec.y_min) / wy));
      r = regime_of_cell(basin.at(i, j));
    }
    run.steps[static_cast<std::size_t>(t)].regime = r;
  }
}

RegimeStats regime_stats(const StochasticRun& run, long transient) {
  RegimeStats st;
  const long n = static_cast<long>(run.steps.size());
  if (transient >= n) return st;

  Regime prev = Regime::Unlabeled;
  long run_len = 0;
  auto close_sojourn = [&](Regime r, long len) {
    if (len == 0) return;
    const int idx = static_cast<int>(r);
    ++st.sojourn_count[idx];
    st.sojourn_mean[idx] += static_cast<double>(len);
    st.sojourn_max[idx] = std::max(st.sojourn_max[idx], len);
  };
  for (long t = transient; t < n; ++t) {
    const Regime r = run.steps[static_cast<std::size_t>(t)].regime;
    ++st.occupancy[static_cast<int>(r)];
    ++st.steps_counted;
    if (t > transient && r != prev) {
      ++st.switches;
      close_sojourn(prev, run_len);
      run_len = 0;
    }
    prev = r;
    ++run_len;
  }
  close_sojourn(prev, run_len);
  for (int i = 0; i < 5; ++i) {
    if (st.sojourn_count[i]) st.sojourn_mean[i] /= static_cast<double>(st.sojourn_count[i]);
    st.occupancy[i] /= static_cast<double>(st.steps_counted);
  }
  return st;
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::FixedPointBasin: return "fixed_point_basin";
    case Regime::WqaBasin: return "wqa_basin";
    case Regime::DivergentBasin: return "divergent_basin";
    case Regime::Outside: return "outside";
    default: return "unlabeled";
  }
}

}  // namespace pwl
