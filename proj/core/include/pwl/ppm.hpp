#pragma once

#include <cstdint>
#include <string>

#include "pwl/grid.hpp"
#include "pwl/map.hpp"
#include "pwl/stochastic.hpp"

namespace pwl {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  friend constexpr bool operator==(const Rgb&, const Rgb&) = default;
};

/// Fixed color assignment used by every raster; byte-exact on purpose so
/// that identical runs produce identical files.
struct Palette {
  Rgb fundamental_fp{0, 160, 0};
  Rgb nonfundamental_basin{170, 210, 255};
  Rgb nonfundamental_attractor{0, 0, 255};
  Rgb wqa_basin{255, 190, 190};
  Rgb wqa_attractor{255, 0, 0};
  Rgb wqa_basin_second{210, 180, 140};
  Rgb divergent{128, 128, 128};
  Rgb undecided{0, 0, 0};
  Rgb basin_outline{255, 220, 0};
  // extensions beyond the core roles
  Rgb periodic_anomaly{255, 0, 255};
  Rgb stochastic_path{128, 0, 128};
  Rgb background{255, 255, 255};
};

// Binary PPM (P6), one pixel per grid cell, maxval 255. Row 0 of the file
// is the maximum-y (or maximum-c) row. Writers throw std::runtime_error on
// I/O failure.

/// Basin raster: cells by label (second-cluster quasiperiodic cells in the
/// light-brown tone), converged fixed points and pooled attractor samples
/// composited on top, optional immediate-basin outline.
void write_basin_ppm(const std::string& path, const BasinGrid& grid,
                     const Palette& pal = {}, bool outline = false);

void write_bifurcation_ppm(const std::string& path, const BifurcationGrid& grid,
                           const Palette& pal = {});

/// State-space scatter of an orbit over the given window (points in the
/// strong attractor blue on white).
void write_trajectory_ppm(const std::string& path, const Orbit& orbit,
                          const GridSpec2D& window, const Palette& pal = {});

/// Basin raster with the stochastic (x_t, x_{t-1}) path composited in purple.
void write_stochastic_ppm(const std::string& path, const StochasticRun& run,
                          const BasinGrid& basin, const Palette& pal = {});

}  // namespace pwl
