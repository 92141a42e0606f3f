#include "pwl/attractor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pwl {

namespace {

double directed_hausdorff(std::span<const State> a, std::span<const State> b) {
  double worst = 0.0;
  for (const State& pa : a) {
    double best = std::numeric_limits<double>::infinity();
    for (const State& pb : b) {
      const double dx = pa.x - pb.x, dy = pa.y - pb.y;
      best = std::min(best, dx * dx + dy * dy);
      if (best <= worst) break;  // cannot raise the running maximum
    }
    worst = std::max(worst, best);
  }
  return std::sqrt(worst);
}

std::vector<State> reflected(std::span<const State> pts) {
  std::vector<State> out;
  out.reserve(pts.size());
  for (const State& s : pts) out.push_back({-s.x, -s.y});
  return out;
}

double bbox_diagonal(std::span<const State> pts) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const State& s : pts) {
    xmin = std::min(xmin, s.x);
    xmax = std::max(xmax, s.x);
    ymin = std::min(ymin, s.y);
    ymax = std::max(ymax, s.y);
  }
  return std::hypot(xmax - xmin, ymax - ymin);
}

}  // namespace

double hausdorff_distance(std::span<const State> a, std::span<const State> b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("hausdorff_distance: empty set");
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

PairCheckResult attractor_pair_check(const ModelParams& p,
                                     const ClassifierConfig& cfg,
                                     std::span<const State> probes,
                                     double rel_tol) {
  if (probes.empty())
    throw std::invalid_argument("attractor_pair_check: no probes");

  std::vector<std::vector<State>> orbits;
  for (const State& probe : probes) {
    Classification c = classify_trajectory(probe, p, cfg);
    if (c.label.kind == ClassKind::WQA && !c.diag.samples.empty())
      orbits.push_back(std::move(c.diag.samples));
  }
  if (orbits.empty()) return {PairKind::None, 0.0, 0};

  std::vector<State> all;
  for (const auto& o : orbits) all.insert(all.end(), o.begin(), o.end());
  const double tol = rel_tol * bbox_diagonal(all);

  // greedy clustering of probe orbits by Hausdorff distance
  std::vector<std::vector<State>> clusters;
  for (const auto& o : orbits) {
    bool merged = false;
    for (auto& cl : clusters) {
      if (hausdorff_distance(o, cl) <= tol) {
        cl.insert(cl.end(), o.begin(), o.end());
        merged = true;
        break;
      }
    }
    if (!merged) clusters.push_back(o);
  }

  PairCheckResult res;
  res.clusters = static_cast<int>(clusters.size());
  if (clusters.size() >= 2) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        const auto mirror = reflected(clusters[j]);
        best = std::min(best, hausdorff_distance(clusters[i], mirror));
      }
    }
    if (best <= tol) return {PairKind::CoexistingPair, best, res.clusters};
  }
  const double self_sym = hausdorff_distance(all, reflected(all));
  if (clusters.size() == 1 && self_sym <= tol)
    return {PairKind::SymmetricSingle, self_sym, res.clusters};
  // asymmetric attractor: its reflection is a second, unvisited attractor
  return {PairKind::CoexistingPair, self_sym, res.clusters};
}

}  // namespace pwl
