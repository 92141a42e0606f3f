#pragma once

#include <string>

#include "pwl/cycles.hpp"
#include "pwl/grid.hpp"
#include "pwl/map.hpp"
#include "pwl/stochastic.hpp"

namespace pwl {

/// Shortest decimal form that parses back to the identical double
/// (std::to_chars round-trip guarantee); 0.0 prints as "0".
std::string format_double(double v);

/// Inverse of format_double; throws std::invalid_argument on garbage.
double parse_double(const std::string& s);

// All writers emit UTF-8, comma-separated, one header row, '\n' endings,
// and throw std::runtime_error on I/O failure.
// Schemas:
//   trajectory:  t,x,y,branch          (branch "-" for the limit maps)
//   basin:       i,j,x0,y0,label,limit_u   (limit_u empty off fixed points)
//   bifurcation: i,j,b,c,label,region
//   cycles:      sequence,k,eig1_re,eig1_im,eig2_re,eig2_im,unit_eig,admissible
//   stochastic:  t,delta,d,F,P,x,regime
void write_trajectory_csv(const std::string& path, const Orbit& orbit);
void write_basin_csv(const std::string& path, const BasinGrid& grid);
void write_bifurcation_csv(const std::string& path, const BifurcationGrid& grid);
void write_cycles_csv(const std::string& path,
                      const std::vector<CycleScanEntry>& entries);
void write_stochastic_csv(const std::string& path, const StochasticRun& run);

const char* to_string(Branch b);

}  // namespace pwl
