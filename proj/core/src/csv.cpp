#include "pwl/csv.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace pwl {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw std::invalid_argument("parse_double: bad number '" + s + "'");
  return v;
}

const char* to_string(Branch b) {
  switch (b) {
    case Branch::L: return "L";
    case Branch::M: return "M";
    case Branch::R: return "R";
    default: return "-";
  }
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

void write_trajectory_csv(const std::string& path, const Orbit& orbit) {
  auto out = open_out(path);
  out << "t,x,y,branch\n";
  for (std::size_t t = 0; t < orbit.points.size(); ++t) {
    const OrbitPoint& pt = orbit.points[t];
    out << t << ',' << format_double(pt.s.x) << ',' << format_double(pt.s.y)
        << ',' << to_string(pt.branch) << '\n';
  }
  finish(out, path);
}

void write_basin_csv(const std::string& path, const BasinGrid& grid) {
  auto out = open_out(path);
  out << "i,j,x0,y0,label,limit_u\n";
  for (int j = 0; j < grid.ny(); ++j) {
    const double y = grid.spec.sample_y(j);
    for (int i = 0; i < grid.nx(); ++i) {
      const ClassLabel& l = grid.at(i, j);
      out << i << ',' << j << ',' << format_double(grid.spec.sample_x(i)) << ','
          << format_double(y) << ',' << to_string(l.kind) << ',';
      if (l.kind == ClassKind::FundamentalFP ||
          l.kind == ClassKind::NonfundamentalFP)
        out << format_double(l.u);
      out << '\n';
    }
  }
  finish(out, path);
}

void write_bifurcation_csv(const std::string& path, const BifurcationGrid& grid) {
  auto out = open_out(path);
  out << "i,j,b,c,label,region\n";
  for (int j = 0; j < grid.spec.nc; ++j) {
    const double c = grid.spec.sample_c(j);
    for (int i = 0; i < grid.spec.nb; ++i) {
      const std::size_t idx = static_cast<std::size_t>(j) * grid.spec.nb + i;
      out << i << ',' << j << ',' << format_double(grid.spec.sample_b(i)) << ','
          << format_double(c) << ',' << to_string(grid.cells[idx].kind) << ','
          << to_string(grid.regions[idx]) << '\n';
    }
  }
  finish(out, path);
}

void write_cycles_csv(const std::string& path,
                      const std::vector<CycleScanEntry>& entries) {
  auto out = open_out(path);
  out << "sequence,k,eig1_re,eig1_im,eig2_re,eig2_im,unit_eig,admissible\n";
  for (const CycleScanEntry& e : entries) {
    out << e.sequence << ',' << e.k << ',' << format_double(e.eig.re1) << ','
        << format_double(e.eig.im1) << ',' << format_double(e.eig.re2) << ','
        << format_double(e.eig.im2) << ',' << (e.unit_eigenvalue ? 1 : 0) << ','
        << (e.admissible ? 1 : 0) << '\n';
  }
  finish(out, path);
}

void write_stochastic_csv(const std::string& path, const StochasticRun& run) {
  auto out = open_out(path);
  out << "t,delta,d,F,P,x,regime\n";
  for (std::size_t t = 0; t < run.steps.size(); ++t) {
    const StochStep& s = run.steps[t];
    out << t << ',' << format_double(s.delta) << ',' << format_double(s.d)
        << ',' << format_double(s.F) << ',' << format_double(s.P) << ','
        << format_double(s.x) << ',' << to_string(s.regime) << '\n';
  }
  finish(out, path);
}

}  // namespace pwl
