#include "pwl/grid.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "pwl/attractor.hpp"
#include "pwl/rng.hpp"

namespace pwl {

namespace {

constexpr std::uint64_t kReservoirSeed = 0x70776C6D6B7467ULL;

void check_spec(const GridSpec2D& s) {
  if (!(s.x_min < s.x_max && s.y_min < s.y_max) || s.nx < 2 || s.ny < 2)
    throw std::invalid_argument("grid spec: requires min < max and nx, ny >= 2");
}

void check_spec(const BifurcationSpec& s) {
  if (!(s.b_min < s.b_max && s.c_min < s.c_max) || s.nb < 2 || s.nc < 2)
    throw std::invalid_argument("bifurcation spec: requires min < max and nb, nc >= 2");
  if (s.b_min < 0.0 || s.c_min < 0.0 || s.h <= 0.0)
    throw std::invalid_argument("bifurcation spec: b, c ranges must be >= 0 and h > 0");
}

template <typename RowFn>
void parallel_rows(int rows, int threads, RowFn&& fn) {
  threads = std::max(1, threads);
  if (threads == 1) {
    for (int j = 0; j < rows; ++j) fn(j);
    return;
  }
  std::atomic<int> next{0};
  auto work = [&] {
    for (int j; (j = next.fetch_add(1)) < rows;) fn(j);
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads - 1));
  for (int t = 0; t < threads - 1; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
}

double mean_min_dist(const std::vector<State>& from, const std::vector<State>& to,
                     bool reflect_to) {
  double sum = 0.0;
  for (const State& a : from) {
    double best = std::numeric_limits<double>::infinity();
    for (const State& b : to) {
      const double bx = reflect_to ? -b.x : b.x;
      const double by = reflect_to ? -b.y : b.y;
      const double dx = a.x - bx, dy = a.y - by;
      best = std::min(best, dx * dx + dy * dy);
    }
    sum += std::sqrt(best);
  }
  return sum / static_cast<double>(from.size());
}

std::vector<State> decimate(const std::vector<State>& pts, std::size_t cap) {
  if (pts.size() <= cap) return pts;
  std::vector<State> out;
  out.reserve(cap);
  const double step = static_cast<double>(pts.size()) / static_cast<double>(cap);
  for (std::size_t k = 0; k < cap; ++k)
    out.push_back(pts[static_cast<std::size_t>(static_cast<double>(k) * step)]);
  return out;
}

// Splits the quasiperiodic cells between two mutually reflected attractors.
// Each cell's orbit is compared against the first cell's orbit and its
// reflection; the split stands only when the two resulting pools are far
// apart yet mutual reflections (a symmetric single attractor produces
// overlapping pools and is left unsplit).
void split_wqa_clusters(BasinGrid& grid,
                        const std::vector<std::vector<State>>& cell_samples) {
  std::vector<std::size_t> wqa_cells;
  for (std::size_t idx = 0; idx < grid.cells.size(); ++idx)
    if (grid.cells[idx].kind == ClassKind::WQA && !cell_samples[idx].empty())
      wqa_cells.push_back(idx);
  if (wqa_cells.size() < 2) return;

  const std::vector<State> seed = decimate(cell_samples[wqa_cells.front()], 512);
  std::vector<State> pool0, pool1;
  for (const std::size_t idx : wqa_cells) {
    const double d0 = mean_min_dist(cell_samples[idx], seed, false);
    const double d1 = mean_min_dist(cell_samples[idx], seed, true);
    grid.wqa_cluster[idx] = d1 < d0 ? 1 : 0;
    auto& dst = grid.wqa_cluster[idx] ? pool1 : pool0;
    dst.insert(dst.end(), cell_samples[idx].begin(), cell_samples[idx].end());
  }
  if (pool0.empty() || pool1.empty()) {
    for (const std::size_t idx : wqa_cells) grid.wqa_cluster[idx] = 0;
    return;
  }
  pool0 = decimate(pool0, 512);
  pool1 = decimate(pool1, 512);

  std::vector<State> all = pool0;
  all.insert(all.end(), pool1.begin(), pool1.end());
  double xmin = all[0].x, xmax = xmin, ymin = all[0].y, ymax = ymin;
  for (const State& s : all) {
    xmin = std::min(xmin, s.x);
    xmax = std::max(xmax, s.x);
    ymin = std::min(ymin, s.y);
    ymax = std::max(ymax, s.y);
  }
  const double tol = 0.05 * std::hypot(xmax - xmin, ymax - ymin);
  std::vector<State> mirror1;
  mirror1.reserve(pool1.size());
  for (const State& s : pool1) mirror1.push_back({-s.x, -s.y});
  const bool distinct = hausdorff_distance(pool0, pool1) > tol;
  const bool mirrored = hausdorff_distance(pool0, mirror1) <= tol;
  if (distinct && mirrored) {
    grid.pair_split = true;
    // refine against the split pools
    for (const std::size_t idx : wqa_cells) {
      const double d0 = mean_min_dist(cell_samples[idx], pool0, false);
      const double d1 = mean_min_dist(cell_samples[idx], pool1, false);
      grid.wqa_cluster[idx] = d1 < d0 ? 1 : 0;
    }
  } else {
    for (const std::size_t idx : wqa_cells) grid.wqa_cluster[idx] = 0;
  }
}

// Deterministic reservoir over the per-cell samples in row-major cell order.
void build_overlay(BasinGrid& grid,
                   const std::vector<std::vector<State>>& cell_samples) {
  SplitMix64 rng(kReservoirSeed);
  long seen = 0;
  for (std::size_t idx = 0; idx < grid.cells.size(); ++idx) {
    if (grid.cells[idx].kind != ClassKind::WQA) continue;
    const std::uint8_t cluster = grid.wqa_cluster[idx];
    for (const State& s : cell_samples[idx]) {
      ++seen;
      if (grid.overlay.size() < kOverlayCap) {
        grid.overlay.push_back(s);
        grid.overlay_cluster.push_back(cluster);
      } else {
        const auto slot = static_cast<std::size_t>(
            rng.next() % static_cast<std::uint64_t>(seen));
        if (slot < kOverlayCap) {
          grid.overlay[slot] = s;
          grid.overlay_cluster[slot] = cluster;
        }
      }
    }
  }
}

}  // namespace

BasinGrid compute_basin_grid(const ModelParams& p, const GridSpec2D& spec,
                             const ClassifierConfig& cfg, int threads) {
  validate(p);
  check_spec(spec);
  ClassifierConfig cell_cfg = cfg;
  cell_cfg.sample_cap = kCellSampleCap;

  BasinGrid grid;
  grid.spec = spec;
  grid.params = p;
  const std::size_t n = static_cast<std::size_t>(spec.nx) * spec.ny;
  grid.cells.resize(n);
  grid.wqa_cluster.assign(n, 0);
  std::vector<std::vector<State>> cell_samples(n);

  parallel_rows(spec.ny, threads, [&](int j) {
    const double y = spec.sample_y(j);
    for (int i = 0; i < spec.nx; ++i) {
      const std::size_t idx = static_cast<std::size_t>(j) * spec.nx + i;
      Classification c = classify_trajectory({spec.sample_x(i), y}, p, cell_cfg);
      grid.cells[idx] = c.label;
      if (c.label.kind == ClassKind::WQA)
        cell_samples[idx] = std::move(c.diag.samples);
    }
  });

  split_wqa_clusters(grid, cell_samples);
  build_overlay(grid, cell_samples);
  return grid;
}

BifurcationGrid compute_bifurcation_grid(const BifurcationSpec& spec,
                                         const ClassifierConfig& cfg,
                                         int threads) {
  check_spec(spec);
  ClassifierConfig cell_cfg = cfg;
  cell_cfg.sample_cap = 0;  // no attractor overlay on parameter sweeps

  BifurcationGrid grid;
  grid.spec = spec;
  const std::size_t n = static_cast<std::size_t>(spec.nb) * spec.nc;
  grid.cells.resize(n);
  grid.regions.resize(n);

  parallel_rows(spec.nc, threads, [&](int j) {
    const double c = spec.sample_c(j);
    for (int i = 0; i < spec.nb; ++i) {
      const std::size_t idx = static_cast<std::size_t>(j) * spec.nb + i;
      const ModelParams p{spec.sample_b(i), c, spec.h};
      grid.cells[idx] = classify_trajectory(spec.ic, p, cell_cfg).label;
      grid.regions[idx] = classify_region(p);
    }
  });
  return grid;
}

namespace {
template <typename Cells>
void tally(GridStats& st, const Cells& cells) {
  for (const ClassLabel& l : cells) ++st.counts[static_cast<int>(l.kind)];
  st.total = static_cast<long>(cells.size());
}
}  // namespace

GridStats grid_stats(const BasinGrid& g) {
  GridStats st;
  tally(st, g.cells);
  return st;
}

GridStats grid_stats(const BifurcationGrid& g) {
  GridStats st;
  tally(st, g.cells);
  for (std::size_t i = 0; i < g.cells.size(); ++i)
    ++st.region_kind[static_cast<int>(g.regions[i])]
                    [static_cast<int>(g.cells[i].kind)];
  return st;
}

}  // namespace pwl
