#pragma once

#include <string>
#include <vector>

#include "pwl/run_config.hpp"

namespace pwl {

/// Tallies used for the exit-code policy (Undecided fraction).
struct FigureOutcome {
  long classified = 0;
  long undecided = 0;
};

const std::vector<std::string>& figure_names();
bool is_figure_name(const std::string& name);

/// Runs one published-figure reproduction into base.out_dir. The figure's
/// parameter sets are pinned here; resolution, budgets, seed, threads and
/// output directory come from the resolved configuration. Notes about the
/// pinned sets are echoed back into kv for resolved.json.
FigureOutcome run_figure(const std::string& name, KeyValueConfig& kv,
                         const RunConfig& base);

}  // namespace pwl
