#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "pwl/geometry.hpp"
#include "pwl/grid.hpp"

using namespace pwl;

namespace {
ClassifierConfig quick_cfg() {
  ClassifierConfig cfg;
  cfg.t_max = 30000;
  return cfg;
}

GridSpec2D square(double half, int n) { return {-half, half, -half, half, n, n}; }

bool fixed_kind(ClassKind k) {
  return k == ClassKind::FundamentalFP || k == ClassKind::NonfundamentalFP;
}
}  // namespace

TEST_CASE("coexistence window shows both basins") {
  const auto grid = compute_basin_grid({0.8, 2.5, 0.05}, square(0.2, 50),
                                       quick_cfg(), 1);
  const auto st = grid_stats(grid);
  CHECK(st.count(ClassKind::NonfundamentalFP) > 0);
  CHECK(st.count(ClassKind::WQA) > 0);
  CHECK(st.count(ClassKind::Divergent) == 0);
  CHECK_FALSE(grid.overlay.empty());
  CHECK(grid.overlay.size() <= kOverlayCap);
  // pooled attractor points are bounded orbit samples
  const double rdiv = quick_cfg().divergence_radius(grid.params);
  for (const State& s : grid.overlay)
    CHECK(std::max(std::abs(s.x), std::abs(s.y)) < rdiv);
}

TEST_CASE("global attraction of the segment leaves one basin") {
  const auto grid = compute_basin_grid({0.8, 0.25, 0.05}, square(0.2, 50),
                                       quick_cfg(), 1);
  const auto st = grid_stats(grid);
  CHECK(st.count(ClassKind::WQA) == 0);
  CHECK(st.count(ClassKind::Divergent) == 0);
  CHECK(st.count(ClassKind::Undecided) == 0);
  CHECK(grid.overlay.empty());
  // fractions sum to one
  double sum = 0.0;
  for (int k = 0; k < 6; ++k) sum += st.fraction(static_cast<ClassKind>(k));
  CHECK(std::abs(sum - 1.0) <= 1e-12);
}

TEST_CASE("strong fundamentalists produce divergent cells alongside fixed points") {
  const auto grid = compute_basin_grid({0.4, 2.85, 0.05}, square(0.25, 50),
                                       quick_cfg(), 1);
  const auto st = grid_stats(grid);
  CHECK(st.count(ClassKind::Divergent) > 0);
  CHECK(st.count(ClassKind::NonfundamentalFP) > 0);
  CHECK(st.count(ClassKind::WQA) == 0);
}

TEST_CASE("parallel execution is bit-identical to serial") {
  const ModelParams p{0.8, 2.5, 0.05};
  const auto serial = compute_basin_grid(p, square(0.2, 40), quick_cfg(), 1);
  const auto par4 = compute_basin_grid(p, square(0.2, 40), quick_cfg(), 4);
  const auto par7 = compute_basin_grid(p, square(0.2, 40), quick_cfg(), 7);
  REQUIRE(par4.cells.size() == serial.cells.size());
  for (std::size_t i = 0; i < serial.cells.size(); ++i) {
    CHECK(par4.cells[i].kind == serial.cells[i].kind);
    CHECK(par4.cells[i].u == serial.cells[i].u);
    CHECK(par7.cells[i].kind == serial.cells[i].kind);
  }
  REQUIRE(par4.overlay.size() == serial.overlay.size());
  for (std::size_t i = 0; i < serial.overlay.size(); ++i) {
    CHECK(par4.overlay[i].x == serial.overlay[i].x);
    CHECK(par4.overlay[i].y == serial.overlay[i].y);
  }
}

TEST_CASE("cells inside the immediate basin are fixed-point cells") {
  const ModelParams p{0.8, 1.0, 0.05};
  const auto grid = compute_basin_grid(p, square(0.2, 60), quick_cfg(), 1);
  for (int j = 0; j < 60; ++j)
    for (int i = 0; i < 60; ++i)
      if (in_immediate_basin({grid.spec.sample_x(i), grid.spec.sample_y(j)}, p))
        CHECK(fixed_kind(grid.at(i, j).kind));
}

TEST_CASE("the scale parameter only rescales the picture") {
  const auto small = compute_basin_grid({0.8, 1.0, 0.05}, square(0.2, 50),
                                        quick_cfg(), 1);
  const auto large = compute_basin_grid({0.8, 1.0, 0.10}, square(0.4, 50),
                                        quick_cfg(), 1);
  for (std::size_t i = 0; i < small.cells.size(); ++i)
    CHECK(small.cells[i].kind == large.cells[i].kind);
}

TEST_CASE("mirrored attractor pair splits the oscillatory basin") {
  const auto grid = compute_basin_grid({0.4, 2.10, 0.05}, square(0.4, 60),
                                       quick_cfg(), 1);
  CHECK(grid.pair_split);
  long c0 = 0, c1 = 0;
  for (std::size_t i = 0; i < grid.cells.size(); ++i)
    if (grid.cells[i].kind == ClassKind::WQA)
      (grid.wqa_cluster[i] ? c1 : c0)++;
  CHECK(c0 > 0);
  CHECK(c1 > 0);
  // mirror cells carry opposite ids
  const int n = grid.nx();
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const int mi = n - 1 - i, mj = n - 1 - j;
      if (grid.at(i, j).kind == ClassKind::WQA &&
          grid.at(mi, mj).kind == ClassKind::WQA)
        CHECK(grid.wqa_cluster[static_cast<std::size_t>(j) * n + i] !=
              grid.wqa_cluster[static_cast<std::size_t>(mj) * n + mi]);
    }

  const auto merged = compute_basin_grid({0.4, 2.15, 0.05}, square(0.4, 60),
                                         quick_cfg(), 1);
  CHECK_FALSE(merged.pair_split);
}

TEST_CASE("parameter sweep from a diagonal start") {
  BifurcationSpec spec;
  spec.nb = 44;
  spec.nc = 44;
  spec.ic = {0.06, 0.06};
  const auto grid = compute_bifurcation_grid(spec, quick_cfg(), 2);
  const auto st = grid_stats(grid);
  CHECK(st.count(ClassKind::FundamentalFP) == 0);
  CHECK(st.count(ClassKind::WQA) > 0);
  CHECK(st.count(ClassKind::Divergent) > 0);
  CHECK(st.count(ClassKind::NonfundamentalFP) > 0);

  // region/outcome consistency on annotated cells
  for (std::size_t i = 0; i < grid.cells.size(); ++i) {
    const ClassKind k = grid.cells[i].kind;
    switch (grid.regions[i]) {
      case ParamRegion::R1:
        CHECK(k != ClassKind::WQA);
        CHECK(k != ClassKind::Divergent);
        break;
      case ParamRegion::R3:
        CHECK(k != ClassKind::WQA);
        break;
      case ParamRegion::R4:
        CHECK(k == ClassKind::Divergent);  // the start is off the segment
        break;
      default:
        break;
    }
  }
  // cross-tabulation totals agree with the flat counts
  long total = 0;
  for (const auto& row : st.region_kind)
    for (const long v : row) total += v;
  CHECK(total == st.total);
}

TEST_CASE("a start below the band turns low-b divergence into fixed points") {
  BifurcationSpec spec;
  spec.nb = 44;
  spec.nc = 44;
  spec.ic = {0.06, 0.06};
  const auto left = compute_bifurcation_grid(spec, quick_cfg(), 1);
  spec.ic = {0.04, 0.00};
  const auto right = compute_bifurcation_grid(spec, quick_cfg(), 1);
  long flipped = 0;
  for (std::size_t i = 0; i < left.cells.size(); ++i)
    if (left.cells[i].kind == ClassKind::Divergent &&
        fixed_kind(right.cells[i].kind))
      ++flipped;
  CHECK(flipped > 0);
}

TEST_CASE("a start on the segment is a fixed point everywhere") {
  BifurcationSpec spec;
  spec.nb = 20;
  spec.nc = 20;
  spec.ic = {0.03, 0.03};
  const auto grid = compute_bifurcation_grid(spec, quick_cfg(), 1);
  for (const auto& cell : grid.cells)
    CHECK(cell.kind == ClassKind::NonfundamentalFP);
}

TEST_CASE("grid specs are validated") {
  CHECK_THROWS_AS(compute_basin_grid({0.8, 2.5, 0.05},
                                     {0.2, -0.2, -0.2, 0.2, 10, 10},
                                     quick_cfg(), 1),
                  std::invalid_argument);
  BifurcationSpec bad;
  bad.b_min = -0.5;
  CHECK_THROWS_AS(compute_bifurcation_grid(bad, quick_cfg(), 1),
                  std::invalid_argument);
}
