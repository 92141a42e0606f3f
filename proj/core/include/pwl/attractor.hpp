#pragma once

#include <span>
#include <vector>

#include "pwl/classify.hpp"
#include "pwl/params.hpp"
#include "pwl/state.hpp"

namespace pwl {

enum class PairKind { None, SymmetricSingle, CoexistingPair };

struct PairCheckResult {
  PairKind kind = PairKind::None;
  double hausdorff = 0.0;  // pair: distance between one attractor and the
                           // other's reflection; single: set vs own reflection
  int clusters = 0;        // distinct attractors seen among the probes
};

/// Symmetric Hausdorff distance between two finite point sets (Euclidean).
double hausdorff_distance(std::span<const State> a, std::span<const State> b);

/// Probes the phase plane for coexisting quasiperiodic attractors: each
/// probe is classified, post-transient samples of the quasiperiodic ones are
/// clustered by Hausdorff distance (tolerance rel_tol times the bounding-box
/// diagonal of all samples), and clusters are matched against their point
/// reflections. Two mutually reflected clusters mean a coexisting pair; a
/// single self-symmetric cluster means one symmetric attractor. A single
/// asymmetric cluster also reports a pair (the mirror attractor exists by
/// the map's symmetry even if no probe reached it).
PairCheckResult attractor_pair_check(const ModelParams& p,
                                     const ClassifierConfig& cfg,
                                     std::span<const State> probes,
                                     double rel_tol = 0.05);

}  // namespace pwl
