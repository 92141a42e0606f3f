#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pwl/classify.hpp"
#include "pwl/params.hpp"
#include "pwl/regions.hpp"
#include "pwl/state.hpp"

namespace pwl {

/// Rectangular sampling window; samples sit at the centers of nx-by-ny
/// equal cells tiling [x_min,x_max] x [y_min,y_max].
struct GridSpec2D {
  double x_min = -0.2, x_max = 0.2;
  double y_min = -0.2, y_max = 0.2;
  int nx = 250, ny = 250;

  double sample_x(int i) const {
    return x_min + (i + 0.5) * (x_max - x_min) / nx;
  }
  double sample_y(int j) const {
    return y_min + (j + 0.5) * (y_max - y_min) / ny;
  }
};

/// Initial-condition sweep at fixed parameters. Cells are row-major,
/// index j*nx + i. The overlay pools post-transient samples from the
/// quasiperiodic cells (deterministic reservoir, at most kOverlayCap
/// points); overlay_cluster / wqa_cluster carry 0/1 ids when two mutually
/// reflected attractors are present.
struct BasinGrid {
  GridSpec2D spec;
  ModelParams params;
  std::vector<ClassLabel> cells;
  std::vector<std::uint8_t> wqa_cluster;
  std::vector<State> overlay;
  std::vector<std::uint8_t> overlay_cluster;
  bool pair_split = false;

  const ClassLabel& at(int i, int j) const {
    return cells[static_cast<std::size_t>(j) * nx() + i];
  }
  int nx() const { return spec.nx; }
  int ny() const { return spec.ny; }
};

/// Parameter sweep over (b, c) from one fixed initial condition and h.
struct BifurcationSpec {
  double b_min = 0.0, b_max = 1.1;
  double c_min = 0.0, c_max = 4.4;
  int nb = 250, nc = 250;
  double h = 0.05;
  State ic{0.06, 0.06};

  double sample_b(int i) const {
    return b_min + (i + 0.5) * (b_max - b_min) / nb;
  }
  double sample_c(int j) const {
    return c_min + (j + 0.5) * (c_max - c_min) / nc;
  }
};

struct BifurcationGrid {
  BifurcationSpec spec;
  std::vector<ClassLabel> cells;       // row-major, j*nb + i
  std::vector<ParamRegion> regions;    // classify_region per cell

  const ClassLabel& at(int i, int j) const {
    return cells[static_cast<std::size_t>(j) * spec.nb + i];
  }
};

inline constexpr int kOverlayCap = 2000;      // pooled attractor points per grid
inline constexpr int kCellSampleCap = 32;     // per-cell orbit samples kept

/// Classifies every cell center. Rows are distributed over `threads`
/// workers writing disjoint slots, so the result is bit-identical for any
/// worker count. `cfg.sample_cap` is overridden internally (kCellSampleCap).
BasinGrid compute_basin_grid(const ModelParams& p, const GridSpec2D& spec,
                             const ClassifierConfig& cfg, int threads = 1);

BifurcationGrid compute_bifurcation_grid(const BifurcationSpec& spec,
                                         const ClassifierConfig& cfg,
                                         int threads = 1);

struct GridStats {
  std::array<long, 6> counts{};  // indexed by ClassKind
  long total = 0;
  // bifurcation grids: counts per (ParamRegion, ClassKind)
  std::array<std::array<long, 6>, 5> region_kind{};

  long count(ClassKind k) const { return counts[static_cast<int>(k)]; }
  double fraction(ClassKind k) const {
    return total ? static_cast<double>(count(k)) / static_cast<double>(total) : 0.0;
  }
};

GridStats grid_stats(const BasinGrid& g);
GridStats grid_stats(const BifurcationGrid& g);

}  // namespace pwl
