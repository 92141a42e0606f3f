#include "pwl/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "pwl/attractor.hpp"
#include "pwl/csv.hpp"
#include "pwl/cycles.hpp"
#include "pwl/map.hpp"
#include "pwl/ppm.hpp"
#include "pwl/presets.hpp"
#include "pwl/regions.hpp"
#include "pwl/run_config.hpp"

namespace pwl {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;
constexpr int kExitUndecided = 3;

struct CommonOpts {
  std::string config_file;
  std::vector<std::string> sets;
  std::string out_dir;
  int threads = -1;
  std::string seed;  // kept textual to preserve full 64-bit range
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_file, "JSON config file (flat dotted keys)");
  cmd->add_option("--set", opts.sets, "override: key=value (repeatable)")
      ->take_all();
  cmd->add_option("--out", opts.out_dir, "output directory");
  cmd->add_option("--threads", opts.threads, "worker count (0 = auto)");
  cmd->add_option("--seed", opts.seed, "64-bit stream seed");
}

KeyValueConfig gather(const CommonOpts& opts) {
  KeyValueConfig kv;
  if (!opts.config_file.empty()) kv = KeyValueConfig::from_file(opts.config_file);
  for (const std::string& item : opts.sets) kv.set_item(item);
  if (!opts.out_dir.empty())
    kv.set("out", opts.out_dir, KeyValueConfig::Type::Text);
  if (opts.threads >= 0)
    kv.set("threads", std::to_string(opts.threads), KeyValueConfig::Type::Unsigned);
  if (!opts.seed.empty())
    kv.set("seed", opts.seed, KeyValueConfig::Type::Unsigned);
  return kv;
}

std::string join(const std::string& dir, const std::string& file) {
  if (dir.empty()) return file;
  return dir.back() == '/' ? dir + file : dir + "/" + file;
}

void prepare_out_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory: " + dir);
}

void write_resolved(const KeyValueConfig& kv, const std::string& dir) {
  const std::string path = join(dir, "resolved.json");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << kv.to_json();
  if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

int finish(long classified, long undecided, double max_frac) {
  if (classified > 0 &&
      static_cast<double>(undecided) >
          max_frac * static_cast<double>(classified)) {
    std::cerr << "undecided classifications: " << undecided << " of "
              << classified << " (above the allowed fraction " << max_frac
              << ")\n";
    return kExitUndecided;
  }
  return kExitOk;
}

int cmd_region(const KeyValueConfig& kv) {
  const RunConfig rc = resolve_config(kv, true);
  std::cout << to_string(classify_region(rc.params)) << "\n"
            << to_string(f_subregion(rc.params)) << "\n";
  return kExitOk;
}

int cmd_simulate(KeyValueConfig& kv) {
  const RunConfig rc = resolve_config(kv, true);
  prepare_out_dir(rc.out_dir);
  const Orbit orbit = iterate(rc.map, rc.ic, rc.n, rc.params);
  write_trajectory_csv(join(rc.out_dir, "trajectory.csv"), orbit);
  write_resolved(kv, rc.out_dir);
  std::cout << "wrote " << join(rc.out_dir, "trajectory.csv") << " ("
            << orbit.points.size() << " rows"
            << (orbit.overflowed ? ", truncated non-finite" : "") << ")\n";
  return kExitOk;
}

int cmd_classify(const KeyValueConfig& kv) {
  const RunConfig rc = resolve_config(kv, true);
  const Classification c = classify_trajectory(rc.ic, rc.params, rc.classifier);
  json doc;
  doc["variant"] = to_string(c.label.kind);
  if (c.label.kind == ClassKind::FundamentalFP ||
      c.label.kind == ClassKind::NonfundamentalFP)
    doc["u"] = c.label.u;
  if (c.label.kind == ClassKind::PeriodicAnomaly) doc["period"] = c.label.period;
  doc["iterations"] = c.diag.iterations;
  doc["branch_visits"] = {c.diag.branch_visits[0], c.diag.branch_visits[1],
                          c.diag.branch_visits[2]};
  doc["via_basin_exit"] = c.diag.via_basin_exit;
  doc["region"] = to_string(classify_region(rc.params));
  std::cout << doc.dump(2) << "\n";
  return finish(1, c.label.kind == ClassKind::Undecided ? 1 : 0,
                rc.max_undecided_frac);
}

int cmd_basin(KeyValueConfig& kv) {
  const RunConfig rc = resolve_config(kv, true);
  prepare_out_dir(rc.out_dir);
  const BasinGrid grid = compute_basin_grid(
      rc.params, rc.grid, rc.classifier, resolve_thread_count(rc.threads));
  write_basin_csv(join(rc.out_dir, "basin.csv"), grid);
  write_basin_ppm(join(rc.out_dir, "basin.ppm"), grid, {}, rc.grid_outline);
  write_resolved(kv, rc.out_dir);
  const GridStats st = grid_stats(grid);
  for (const ClassKind k :
       {ClassKind::FundamentalFP, ClassKind::NonfundamentalFP, ClassKind::WQA,
        ClassKind::Divergent, ClassKind::Undecided, ClassKind::PeriodicAnomaly})
    if (st.count(k))
      std::cout << to_string(k) << " " << st.count(k) << " ("
                << st.fraction(k) << ")\n";
  return finish(st.total, st.count(ClassKind::Undecided), rc.max_undecided_frac);
}

int cmd_bifurcation(KeyValueConfig& kv) {
  const RunConfig rc = resolve_config(kv, false);
  prepare_out_dir(rc.out_dir);
  const BifurcationGrid grid = compute_bifurcation_grid(
      rc.bifurcation, rc.classifier, resolve_thread_count(rc.threads));
  write_bifurcation_csv(join(rc.out_dir, "bifurcation.csv"), grid);
  write_bifurcation_ppm(join(rc.out_dir, "bifurcation.ppm"), grid);
  write_resolved(kv, rc.out_dir);
  const GridStats st = grid_stats(grid);
  for (const ClassKind k :
       {ClassKind::FundamentalFP, ClassKind::NonfundamentalFP, ClassKind::WQA,
        ClassKind::Divergent, ClassKind::Undecided, ClassKind::PeriodicAnomaly})
    if (st.count(k))
      std::cout << to_string(k) << " " << st.count(k) << " ("
                << st.fraction(k) << ")\n";
  return finish(st.total, st.count(ClassKind::Undecided), rc.max_undecided_frac);
}

int cmd_cycles(KeyValueConfig& kv) {
  const RunConfig rc = resolve_config(kv, true);
  prepare_out_dir(rc.out_dir);
  const auto entries = cycle_scan(rc.params, rc.cycles_k_max, rc.cycles_tol);
  write_cycles_csv(join(rc.out_dir, "cycles.csv"), entries);
  write_resolved(kv, rc.out_dir);
  long unit = 0, admissible = 0, off_segment = 0;
  for (const auto& e : entries) {
    unit += e.unit_eigenvalue;
    admissible += e.admissible;
    if (e.admissible &&
        e.sequence.find_first_not_of('M') != std::string::npos)
      ++off_segment;
  }
  std::cout << entries.size() << " sequences, " << unit
            << " with unit eigenvalue, " << admissible << " admissible, "
            << off_segment << " admissible off the fixed-point segment\n";
  return kExitOk;
}

int cmd_stochastic(KeyValueConfig& kv) {
  const RunConfig rc = resolve_config(kv, true);
  prepare_out_dir(rc.out_dir);
  StochasticRun run;
  try {
    run = simulate_stochastic(rc.params, rc.shocks);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const BasinGrid grid = compute_basin_grid(
      rc.params, rc.grid, rc.classifier, resolve_thread_count(rc.threads));
  regime_labels(run, grid);
  const RegimeStats st = regime_stats(run);
  write_stochastic_csv(join(rc.out_dir, "stochastic.csv"), run);
  json doc;
  for (const Regime r : {Regime::FixedPointBasin, Regime::WqaBasin,
                         Regime::DivergentBasin, Regime::Outside})
    doc["occupancy"][to_string(r)] = st.occ(r);
  doc["switches"] = st.switches;
  doc["diverged"] = run.diverged;
  const std::string stats_path = join(rc.out_dir, "regime_stats.json");
  std::ofstream out(stats_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + stats_path);
  out << doc.dump(2) << "\n";
  if (!out.flush()) throw std::runtime_error("write failed: " + stats_path);
  write_resolved(kv, rc.out_dir);
  std::cout << "switches " << st.switches << ", wqa occupancy "
            << st.occ(Regime::WqaBasin) << "\n";
  const GridStats gs = grid_stats(grid);
  return finish(gs.total, gs.count(ClassKind::Undecided), rc.max_undecided_frac);
}

int cmd_figure(KeyValueConfig& kv, const std::string& name) {
  const RunConfig rc_pre = resolve_config(kv, false);
  RunConfig rc = rc_pre;
  rc.threads = resolve_thread_count(rc_pre.threads);
  prepare_out_dir(rc.out_dir);
  const FigureOutcome outcome = run_figure(name, kv, rc);
  write_resolved(kv, rc.out_dir);
  std::cout << name << ": wrote outputs to " << rc.out_dir << "\n";
  return finish(outcome.classified, outcome.undecided, rc.max_undecided_frac);
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"piecewise-linear chartist-fundamentalist market laboratory"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string figure_name;

  CLI::App* region = app.add_subcommand("region", "print parameter-plane region and stability subregion");
  CLI::App* simulate = app.add_subcommand("simulate", "trajectory CSV for map M, F or C");
  CLI::App* classify = app.add_subcommand("classify", "classify one initial condition (JSON to stdout)");
  CLI::App* basin = app.add_subcommand("basin", "basin-of-attraction grid (CSV + PPM)");
  CLI::App* bifurcation = app.add_subcommand("bifurcation", "two-parameter (b,c) sweep (CSV + PPM)");
  CLI::App* cycles = app.add_subcommand("cycles", "itinerary cycle scan report (CSV)");
  CLI::App* stochastic = app.add_subcommand("stochastic", "shocked run with regime statistics");
  CLI::App* figure = app.add_subcommand("figure", "reproduce a published figure by name");
  figure->add_option("name", figure_name, "one of: fig2..fig12, figA1, figA2, figB1")
      ->required();
  for (CLI::App* cmd : {region, simulate, classify, basin, bifurcation, cycles,
                        stochastic, figure})
    add_common(cmd, opts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    KeyValueConfig kv = gather(opts);
    if (region->parsed()) return cmd_region(kv);
    if (simulate->parsed()) return cmd_simulate(kv);
    if (classify->parsed()) return cmd_classify(kv);
    if (basin->parsed()) return cmd_basin(kv);
    if (bifurcation->parsed()) return cmd_bifurcation(kv);
    if (cycles->parsed()) return cmd_cycles(kv);
    if (stochastic->parsed()) return cmd_stochastic(kv);
    if (figure->parsed()) {
      if (!is_figure_name(figure_name))
        throw ConfigError("unknown figure '" + figure_name + "'");
      return cmd_figure(kv, figure_name);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitConfig;
}

}  // namespace pwl
