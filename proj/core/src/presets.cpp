#include "pwl/presets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "pwl/attractor.hpp"
#include "pwl/csv.hpp"
#include "pwl/map.hpp"
#include "pwl/ppm.hpp"

namespace pwl {

namespace {

using nlohmann::json;

std::string join(const std::string& dir, const std::string& file) {
  if (dir.empty()) return file;
  return dir.back() == '/' ? dir + file : dir + "/" + file;
}

std::string tag(double v) {  // 2.05 -> "205", 0.25 -> "025"
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%03d", static_cast<int>(std::lround(v * 100.0)));
  return buf;
}

GridSpec2D window(double half_x, double half_y, int nx, int ny) {
  return {-half_x, half_x, -half_y, half_y, nx, ny};
}

void tally(FigureOutcome& out, const GridStats& st) {
  out.classified += st.total;
  out.undecided += st.count(ClassKind::Undecided);
}

struct Ctx {
  KeyValueConfig& kv;
  const RunConfig& base;
  FigureOutcome outcome;

  long steps(long preset_default) const {
    return kv.has("n") ? base.n : preset_default;
  }
  GridSpec2D sized(GridSpec2D w) const {
    w.nx = base.grid.nx;
    w.ny = base.grid.ny;
    return w;
  }

  void trajectory(const std::string& stem, MapKind map, ModelParams p, State ic,
                  long n, const GridSpec2D& view) {
    const Orbit orbit = iterate(map, ic, n, p);
    write_trajectory_csv(join(base.out_dir, stem + ".csv"), orbit);
    write_trajectory_ppm(join(base.out_dir, stem + ".ppm"), orbit, view);
  }

  BasinGrid basin(const std::string& stem, ModelParams p, const GridSpec2D& view,
                  bool outline, const ClassifierConfig& cfg) {
    BasinGrid grid = compute_basin_grid(p, view, cfg, base.threads);
    write_basin_csv(join(base.out_dir, stem + ".csv"), grid);
    write_basin_ppm(join(base.out_dir, stem + ".ppm"), grid, {}, outline);
    tally(outcome, grid_stats(grid));
    return grid;
  }
  BasinGrid basin(const std::string& stem, ModelParams p, const GridSpec2D& view,
                  bool outline = false) {
    return basin(stem, p, view, outline, base.classifier);
  }
};

void fig2(Ctx& ctx) {
  const long n = ctx.steps(100);
  const GridSpec2D view = ctx.sized(window(0.25, 0.25, 250, 250));
  ctx.trajectory("fig2_s1", MapKind::F, {0.80, 1.35, 0.05}, {0.15, 0.00}, n, view);
  ctx.trajectory("fig2_s2", MapKind::F, {0.20, 2.30, 0.05}, {0.08, -0.09}, n, view);
  ctx.trajectory("fig2_s3", MapKind::F, {0.20, 0.30, 0.05}, {0.15, 0.19}, n, view);
}

void fig3(Ctx& ctx) {
  const long n = ctx.steps(200);
  const GridSpec2D view = ctx.sized(window(0.25, 0.25, 250, 250));
  const ModelParams p{0.80, 1.0, 0.05};  // c, h unused by the chartist-only map
  ctx.trajectory("fig3_a", MapKind::C, p, {-0.13, -0.17}, n, view);
  ctx.trajectory("fig3_b", MapKind::C, p, {-0.10, -0.17}, n, view);
}

void fig4(Ctx& ctx) {
  ctx.basin("fig4", {0.80, 2.50, 0.05}, ctx.sized(window(0.2, 0.2, 250, 250)));
}

void fig5(Ctx& ctx) {
  const long n = ctx.steps(1000);
  const GridSpec2D view = ctx.sized(window(0.2, 0.2, 250, 250));
  const ModelParams p{0.80, 2.50, 0.05};
  ctx.trajectory("fig5_a", MapKind::M, p, {-0.12, -0.16}, n, view);
  ctx.trajectory("fig5_b", MapKind::M, p, {0.13, 0.00}, n, view);
  ctx.kv.set("preset.note",
             "published caption says c=1.35 but the surrounding text and the "
             "companion basin figure use c=2.50; this preset pins c=2.50",
             KeyValueConfig::Type::Text);
}

void fig6(Ctx& ctx) {
  BifurcationSpec spec;
  spec.nb = ctx.base.grid.nx;
  spec.nc = ctx.base.grid.ny;
  spec.h = 0.05;
  spec.ic = {0.06, 0.06};
  BifurcationGrid left = compute_bifurcation_grid(spec, ctx.base.classifier,
                                                  ctx.base.threads);
  write_bifurcation_csv(join(ctx.base.out_dir, "fig6_left.csv"), left);
  write_bifurcation_ppm(join(ctx.base.out_dir, "fig6_left.ppm"), left);
  tally(ctx.outcome, grid_stats(left));

  spec.ic = {0.04, 0.00};
  BifurcationGrid right = compute_bifurcation_grid(spec, ctx.base.classifier,
                                                   ctx.base.threads);
  write_bifurcation_csv(join(ctx.base.out_dir, "fig6_right.csv"), right);
  write_bifurcation_ppm(join(ctx.base.out_dir, "fig6_right.ppm"), right);
  tally(ctx.outcome, grid_stats(right));
}

void fig7(Ctx& ctx) {
  struct Row {
    const char* stem;
    ModelParams p;
    State wqa_ic;
  };
  const Row rows[] = {
      {"fig7_top", {0.80, 1.00, 0.10}, {0.30, -0.36}},
      {"fig7_middle", {0.80, 1.00, 0.05}, {0.15, -0.18}},
      {"fig7_bottom", {0.60, 1.00, 0.05}, {0.15, -0.18}},
  };
  for (const Row& r : rows) {
    const double half = 4.0 * r.p.h;
    ctx.basin(r.stem, r.p, ctx.sized(window(half, half, 250, 250)), true);
    const Orbit orbit = iterate(MapKind::M, r.wqa_ic, ctx.steps(1000), r.p);
    write_trajectory_csv(join(ctx.base.out_dir, std::string(r.stem) + "_ts.csv"),
                         orbit);
  }
}

void fig8(Ctx& ctx) {
  for (const double c : {0.25, 1.00, 1.70, 2.05, 2.50, 3.61})
    ctx.basin("fig8_c" + tag(c), {0.80, c, 0.05},
              ctx.sized(window(0.2, 0.2, 250, 250)));
}

void fig9(Ctx& ctx) {
  const long n = ctx.steps(1000);
  const GridSpec2D view = ctx.sized(window(0.2, 0.2, 250, 250));
  // initial conditions chosen to land on the characteristic attractor of
  // each panel (fixed point at c=0.25, oscillation in between, divergence
  // at c=3.61)
  const std::pair<double, State> sets[] = {
      {0.25, {0.15, -0.18}}, {1.00, {0.15, -0.18}}, {1.70, {0.15, -0.18}},
      {2.05, {0.10, -0.17}}, {2.50, {0.13, 0.00}},  {3.61, {0.13, 0.00}},
  };
  for (const auto& [c, ic] : sets)
    ctx.trajectory("fig9_c" + tag(c), MapKind::M, {0.80, c, 0.05}, ic, n, view);
}

void fig10(Ctx& ctx) {
  for (const double b : {0.30, 0.40, 0.50, 0.60, 0.80, 1.05})
    ctx.basin("fig10_b" + tag(b), {b, 1.35, 0.05},
              ctx.sized(window(0.2, 0.2, 250, 250)));
}

void fig11(Ctx& ctx) {
  const long n = ctx.steps(1000);
  const GridSpec2D view = ctx.sized(window(0.2, 0.2, 250, 250));
  const std::pair<double, State> sets[] = {
      {0.30, {0.13, 0.00}},  {0.40, {0.13, 0.00}},  {0.50, {0.15, -0.18}},
      {0.60, {0.13, 0.00}},  {0.80, {0.15, -0.18}}, {1.05, {0.13, 0.00}},
  };
  for (const auto& [b, ic] : sets)
    ctx.trajectory("fig11_b" + tag(b), MapKind::M, {b, 1.35, 0.05}, ic, n, view);
}

void write_regime_stats_json(const std::string& path, const RegimeStats& st) {
  json doc;
  for (const Regime r : {Regime::FixedPointBasin, Regime::WqaBasin,
                         Regime::DivergentBasin, Regime::Outside,
                         Regime::Unlabeled}) {
    const int i = static_cast<int>(r);
    doc["occupancy"][to_string(r)] = st.occupancy[static_cast<std::size_t>(i)];
    doc["sojourn_count"][to_string(r)] = st.sojourn_count[static_cast<std::size_t>(i)];
    doc["sojourn_mean"][to_string(r)] = st.sojourn_mean[static_cast<std::size_t>(i)];
    doc["sojourn_max"][to_string(r)] = st.sojourn_max[static_cast<std::size_t>(i)];
  }
  doc["switches"] = st.switches;
  doc["steps_counted"] = st.steps_counted;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << doc.dump(2) << "\n";
  if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

void fig12(Ctx& ctx) {
  ClassifierConfig grid_cfg = ctx.base.classifier;
  grid_cfg.t_max = std::min<long>(grid_cfg.t_max, 20000);
  for (const double c : {0.45, 0.75, 1.10}) {
    const ModelParams p{0.80, c, 0.05};
    const std::string stem = "fig12_c" + tag(c);
    BasinGrid grid = ctx.basin(stem + "_basin", p,
                               ctx.sized(window(0.3, 0.3, 250, 250)), false,
                               grid_cfg);
    ShockConfig sc = ctx.base.shocks;
    sc.sigma_delta = -1.0;
    if (sc.sigma_d < 0.0) sc.sigma_d = 0.005;
    sc.x0 = 0.0;
    sc.y0 = 0.0;
    StochasticRun run = simulate_stochastic(p, sc);
    regime_labels(run, grid);
    write_stochastic_csv(join(ctx.base.out_dir, stem + ".csv"), run);
    write_stochastic_ppm(join(ctx.base.out_dir, stem + "_path.ppm"), run, grid);
    write_regime_stats_json(join(ctx.base.out_dir, stem + "_stats.json"),
                            regime_stats(run));
  }
}

void figA1(Ctx& ctx) {
  GridSpec2D view{-0.25, 0.25, -1.0, 1.0, ctx.base.grid.nx, ctx.base.grid.ny};
  ctx.basin("figA1", {0.40, 2.85, 0.05}, view, true);
}

void figA2(Ctx& ctx) {
  for (const double c : {0.60, 1.20, 1.60})
    ctx.basin("figA2_c" + tag(c), {0.40, c, 0.05},
              ctx.sized(window(0.3, 0.3, 250, 250)), true);
}

void figB1(Ctx& ctx) {
  // probe fan used for the coexistence check; spread so that both mirror
  // basins are reached when two attractors are present
  const State probes[] = {{0.13, 0.00},  {0.00, 0.16},  {-0.14, 0.02},
                          {0.03, -0.17}, {0.18, 0.10},  {-0.17, -0.09},
                          {0.10, -0.14}, {-0.08, 0.15}};
  for (const double c : {2.10, 2.15}) {
    const ModelParams p{0.40, c, 0.05};
    const std::string stem = "figB1_c" + tag(c);
    ctx.basin(stem, p, ctx.sized(window(0.4, 0.4, 250, 250)));

    ClassifierConfig cfg = ctx.base.classifier;
    cfg.sample_cap = 2048;
    const PairCheckResult res = attractor_pair_check(p, cfg, probes);
    ctx.outcome.classified += static_cast<long>(std::size(probes));

    // trajectory outcome of the image of the basin corner under the left
    // branch, reported as a diagnostic for the coexistence boundary
    const State corner_image{outer_rule(-p.h, -p.h, p.b, p.c), -p.h};
    const ClassLabel corner = classify_trajectory(corner_image, p, cfg).label;

    json doc;
    doc["kind"] = res.kind == PairKind::CoexistingPair ? "coexisting-pair"
                  : res.kind == PairKind::SymmetricSingle ? "symmetric-single"
                                                          : "none";
    doc["hausdorff"] = res.hausdorff;
    doc["clusters"] = res.clusters;
    doc["corner_image_outcome"] = to_string(corner.kind);
    const std::string path = join(ctx.base.out_dir, stem + "_pair.json");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << doc.dump(2) << "\n";
    if (!out.flush()) throw std::runtime_error("write failed: " + path);
  }
}

using FigureFn = void (*)(Ctx&);

const std::vector<std::pair<std::string, FigureFn>>& figure_table() {
  static const std::vector<std::pair<std::string, FigureFn>> table = {
      {"fig2", fig2},   {"fig3", fig3},   {"fig4", fig4},   {"fig5", fig5},
      {"fig6", fig6},   {"fig7", fig7},   {"fig8", fig8},   {"fig9", fig9},
      {"fig10", fig10}, {"fig11", fig11}, {"fig12", fig12}, {"figA1", figA1},
      {"figA2", figA2}, {"figB1", figB1},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : figure_table()) n.push_back(name);
    return n;
  }();
  return names;
}

bool is_figure_name(const std::string& name) {
  const auto& t = figure_table();
  return std::any_of(t.begin(), t.end(),
                     [&](const auto& e) { return e.first == name; });
}

FigureOutcome run_figure(const std::string& name, KeyValueConfig& kv,
                         const RunConfig& base) {
  for (const auto& [fig, fn] : figure_table()) {
    if (fig == name) {
      kv.set("preset.name", fig, KeyValueConfig::Type::Text);
      Ctx ctx{kv, base, {}};
      fn(ctx);
      return ctx.outcome;
    }
  }
  throw ConfigError("unknown figure '" + name + "'");
}

}  // namespace pwl
