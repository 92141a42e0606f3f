#include "pwl/ppm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "pwl/geometry.hpp"

namespace pwl {

namespace {

class Raster {
 public:
  Raster(int nx, int ny, Rgb fill)
      : nx_(nx), ny_(ny), bytes_(static_cast<std::size_t>(nx) * ny * 3) {
    for (std::size_t k = 0; k < bytes_.size(); k += 3) {
      bytes_[k] = fill.r;
      bytes_[k + 1] = fill.g;
      bytes_[k + 2] = fill.b;
    }
  }

  // (i, j) in grid coordinates, j = 0 at minimum y; flipped on output
  void set(int i, int j, Rgb c) {
    if (i < 0 || i >= nx_ || j < 0 || j >= ny_) return;
    const std::size_t k =
        (static_cast<std::size_t>(ny_ - 1 - j) * nx_ + i) * 3;
    bytes_[k] = c.r;
    bytes_[k + 1] = c.g;
    bytes_[k + 2] = c.b;
  }

  void write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "P6\n" << nx_ << ' ' << ny_ << "\n255\n";
    out.write(reinterpret_cast<const char*>(bytes_.data()),
              static_cast<std::streamsize>(bytes_.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
  }

 private:
  int nx_, ny_;
  std::vector<std::uint8_t> bytes_;
};

struct CellMap {
  const GridSpec2D& spec;

  bool to_cell(double x, double y, int& i, int& j) const {
    if (x < spec.x_min || x > spec.x_max || y < spec.y_min || y > spec.y_max)
      return false;
    const double wx = (spec.x_max - spec.x_min) / spec.nx;
    const double wy = (spec.y_max - spec.y_min) / spec.ny;
    i = std::min(spec.nx - 1, static_cast<int>((x - spec.x_min) / wx));
    j = std::min(spec.ny - 1, static_cast<int>((y - spec.y_min) / wy));
    return true;
  }

  void plot(Raster& img, double x, double y, Rgb c) const {
    int i, j;
    if (to_cell(x, y, i, j)) img.set(i, j, c);
  }

  void line(Raster& img, State a, State b, Rgb c) const {
    const int n = 2 * std::max(spec.nx, spec.ny);
    for (int k = 0; k <= n; ++k) {
      const double t = static_cast<double>(k) / n;
      plot(img, a.x + t * (b.x - a.x), a.y + t * (b.y - a.y), c);
    }
  }
};

Rgb basin_cell_color(const ClassLabel& l, std::uint8_t cluster,
                     const Palette& pal) {
  switch (l.kind) {
    case ClassKind::FundamentalFP: return pal.fundamental_fp;
    case ClassKind::NonfundamentalFP: return pal.nonfundamental_basin;
    case ClassKind::WQA:
      return cluster ? pal.wqa_basin_second : pal.wqa_basin;
    case ClassKind::Divergent: return pal.divergent;
    case ClassKind::PeriodicAnomaly: return pal.periodic_anomaly;
    default: return pal.undecided;
  }
}

Raster render_basin(const BasinGrid& grid, const Palette& pal, bool outline) {
  Raster img(grid.nx(), grid.ny(), pal.undecided);
  const CellMap map{grid.spec};
  for (int j = 0; j < grid.ny(); ++j)
    for (int i = 0; i < grid.nx(); ++i) {
      const std::size_t idx = static_cast<std::size_t>(j) * grid.nx() + i;
      img.set(i, j, basin_cell_color(grid.cells[idx], grid.wqa_cluster[idx], pal));
    }
  // attained fixed points along the diagonal segment
  for (const ClassLabel& l : grid.cells)
    if (l.kind == ClassKind::NonfundamentalFP ||
        l.kind == ClassKind::FundamentalFP)
      map.plot(img, l.u, l.u, pal.nonfundamental_attractor);
  for (const State& s : grid.overlay) map.plot(img, s.x, s.y, pal.wqa_attractor);
  if (outline && grid.params.b > 0.0 && grid.params.b < 1.0) {
    const Parallelogram para = immediate_basin(grid.params);
    for (int e = 0; e < 4; ++e)
      map.line(img, para.v[static_cast<std::size_t>(e)],
               para.v[static_cast<std::size_t>((e + 1) % 4)], pal.basin_outline);
  }
  return img;
}

}  // namespace

void write_basin_ppm(const std::string& path, const BasinGrid& grid,
                     const Palette& pal, bool outline) {
  render_basin(grid, pal, outline).write(path);
}

void write_bifurcation_ppm(const std::string& path, const BifurcationGrid& grid,
                           const Palette& pal) {
  Raster img(grid.spec.nb, grid.spec.nc, pal.undecided);
  for (int j = 0; j < grid.spec.nc; ++j)
    for (int i = 0; i < grid.spec.nb; ++i) {
      const ClassLabel& l = grid.at(i, j);
      Rgb c = pal.undecided;
      switch (l.kind) {
        case ClassKind::FundamentalFP: c = pal.fundamental_fp; break;
        case ClassKind::NonfundamentalFP: c = pal.nonfundamental_attractor; break;
        case ClassKind::WQA: c = pal.wqa_attractor; break;
        case ClassKind::Divergent: c = pal.divergent; break;
        case ClassKind::PeriodicAnomaly: c = pal.periodic_anomaly; break;
        default: break;
      }
      img.set(i, j, c);
    }
  img.write(path);
}

void write_trajectory_ppm(const std::string& path, const Orbit& orbit,
                          const GridSpec2D& window, const Palette& pal) {
  Raster img(window.nx, window.ny, pal.background);
  const CellMap map{window};
  for (const OrbitPoint& pt : orbit.points)
    map.plot(img, pt.s.x, pt.s.y, pal.nonfundamental_attractor);
  img.write(path);
}

void write_stochastic_ppm(const std::string& path, const StochasticRun& run,
                          const BasinGrid& basin, const Palette& pal) {
  Raster img = render_basin(basin, pal, false);
  const CellMap map{basin.spec};
  for (long t = 0; t < static_cast<long>(run.steps.size()); ++t) {
    const State s = run.state_at(t);
    map.plot(img, s.x, s.y, pal.stochastic_path);
  }
  img.write(path);
}

}  // namespace pwl
