#include "pwl/classify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pwl/geometry.hpp"
#include "pwl/map.hpp"

namespace pwl {

double ClassifierConfig::divergence_radius(const ModelParams& p) const {
  return r_div > 0.0 ? r_div : 1e6 * std::max(p.h, 1.0);
}

namespace {

void check_config(const ClassifierConfig& cfg) {
  if (cfg.t_max < 1 || cfg.w_tail < 1 || cfg.p_max < 1 || cfg.eps_fix <= 0.0 ||
      cfg.eps_rec <= 0.0 || cfg.transient < 0 || cfg.sample_cap < 0)
    throw std::invalid_argument("classifier config: field out of range");
  if (cfg.p_max >= cfg.w_tail)
    throw std::invalid_argument("classifier config: requires p_max < w_tail");
}

ClassLabel fixed_point_label(double u, double eps_fix) {
  if (std::abs(u) <= eps_fix) return {ClassKind::FundamentalFP, 0.0, 0};
  return {ClassKind::NonfundamentalFP, u, 0};
}

// Smallest period p <= p_max that recurs over the whole window within
// eps_rec (sup norm), or 0 when none does.
int scan_recurrence(const std::vector<State>& tail, int p_max, double eps_rec) {
  const int n = static_cast<int>(tail.size());
  for (int p = 1; p <= p_max; ++p) {
    bool recurrent = true;
    for (int i = 0; i + p < n; ++i) {
      if (std::abs(tail[i].x - tail[i + p].x) > eps_rec ||
          std::abs(tail[i].y - tail[i + p].y) > eps_rec) {
        recurrent = false;
        break;
      }
    }
    if (recurrent) return p;
  }
  return 0;
}

}  // namespace

Classification classify_trajectory(const State& s0, const ModelParams& p,
                                   const ClassifierConfig& cfg) {
  check_config(cfg);
  Classification out;
  ClassifyDiagnostics& diag = out.diag;

  const double rdiv = cfg.divergence_radius(p);
  const bool contracting = p.b > 0.0 && p.b < 1.0;
  // Plain-simulation mode reports u = x once the in-strip step difference
  // has contracted far enough that |x - u| = |x-y| * b/(1-b) <= eps_fix.
  const double conv_tol =
      contracting ? cfg.eps_fix * std::min(1.0, (1.0 - p.b) / p.b) : 0.0;

  const int w = cfg.w_tail;
  std::vector<State> ring(static_cast<std::size_t>(w));
  long recorded = 0;

  const long sample_span = cfg.t_max + 1 - cfg.transient;
  const long stride =
      (cfg.sample_cap > 0 && sample_span > 0)
          ? std::max<long>(1, sample_span / cfg.sample_cap)
          : 0;

  State s = s0;
  for (long t = 0;; ++t) {
    if (!finite(s)) {
      out.label = {ClassKind::Divergent, 0.0, 0};
      diag.iterations = t;
      return out;
    }
    if (std::max(std::abs(s.x), std::abs(s.y)) > rdiv) {
      out.label = {ClassKind::Divergent, 0.0, 0};
      diag.iterations = t;
      return out;
    }
    if (s.x == s.y && std::abs(s.x) <= p.h) {
      // exactly on the fixed-point segment; holds for every b
      out.label = fixed_point_label(s.x, cfg.eps_fix);
      diag.iterations = t;
      return out;
    }
    const Branch br = branch_of(s, p);
    if (contracting && cfg.basin_exit && br == Branch::M &&
        in_immediate_basin(s, p)) {
      out.label = fixed_point_label(c_limit(s, p.b), cfg.eps_fix);
      diag.iterations = t;
      diag.via_basin_exit = true;
      return out;
    }
    if (contracting && !cfg.basin_exit && br == Branch::M &&
        std::abs(s.x - s.y) <= conv_tol) {
      out.label = fixed_point_label(s.x, cfg.eps_fix);
      diag.iterations = t;
      return out;
    }

    ring[static_cast<std::size_t>(recorded % w)] = s;
    ++recorded;
    ++diag.branch_visits[static_cast<int>(br)];
    if (stride > 0 && t >= cfg.transient &&
        (t - cfg.transient) % stride == 0 &&
        diag.samples.size() < static_cast<std::size_t>(cfg.sample_cap))
      diag.samples.push_back(s);

    if (t == cfg.t_max) break;
    s = step_m(s, p);
  }

  diag.iterations = cfg.t_max;
  const long len = std::min<long>(recorded, w);
  if (len < 2L * cfg.p_max) {
    out.label = {ClassKind::Undecided, 0.0, 0};
    return out;
  }
  // unroll the ring into chronological order
  std::vector<State> tail(static_cast<std::size_t>(len));
  for (long i = 0; i < len; ++i)
    tail[static_cast<std::size_t>(i)] =
        ring[static_cast<std::size_t>((recorded - len + i) % w)];
  if (const int period = scan_recurrence(tail, cfg.p_max, cfg.eps_rec))
    out.label = {ClassKind::PeriodicAnomaly, 0.0, period};
  else
    out.label = {ClassKind::WQA, 0.0, 0};
  return out;
}

const char* to_string(ClassKind k) {
  switch (k) {
    case ClassKind::FundamentalFP: return "FundamentalFP";
    case ClassKind::NonfundamentalFP: return "NonfundamentalFP";
    case ClassKind::WQA: return "WQA";
    case ClassKind::Divergent: return "Divergent";
    case ClassKind::Undecided: return "Undecided";
    default: return "PeriodicAnomaly";
  }
}

}  // namespace pwl
