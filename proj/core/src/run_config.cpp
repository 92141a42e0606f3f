#include "pwl/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pwl/csv.hpp"

namespace pwl {

namespace {

using nlohmann::json;

int line_of_byte(const std::string& text, std::size_t byte) {
  return 1 + static_cast<int>(
                 std::count(text.begin(),
                            text.begin() + static_cast<long>(
                                               std::min(byte, text.size())),
                            '\n'));
}

int line_of_key(const std::string& text, const std::string& key) {
  const auto pos = text.find('"' + key + '"');
  return pos == std::string::npos ? 1 : line_of_byte(text, pos);
}

bool parse_u64(const std::string& s, std::uint64_t& v) {
  if (s.empty()) return false;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

bool parse_num(const std::string& s, double& v) {
  if (s.empty()) return false;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

bool known_key(const std::string& key) {
  if (key.rfind("preset.", 0) == 0) return true;  // informational echoes
  const auto& keys = known_config_keys();
  return std::find(keys.begin(), keys.end(), key) != keys.end();
}

}  // namespace

const std::vector<std::string>& known_config_keys() {
  static const std::vector<std::string> keys = {
      "b", "c", "h",
      "alpha", "beta", "gamma", "theta", "rho",
      "x0", "y0", "n", "map",
      "grid.x_min", "grid.x_max", "grid.y_min", "grid.y_max",
      "grid.nx", "grid.ny", "grid.outline",
      "bif.b_min", "bif.b_max", "bif.c_min", "bif.c_max", "bif.nb", "bif.nc",
      "classifier.t_max", "classifier.r_div", "classifier.eps_fix",
      "classifier.w_tail", "classifier.p_max", "classifier.eps_rec",
      "classifier.transient", "classifier.sample_cap", "classifier.basin_exit",
      "stochastic.sigma_d", "stochastic.sigma_delta", "stochastic.t_max",
      "stochastic.F0",
      "cycles.k_max", "cycles.tol",
      "out", "threads", "seed", "max_undecided_frac",
  };
  return keys;
}

KeyValueConfig KeyValueConfig::from_json_text(const std::string& text,
                                              const std::string& filename) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(filename + ":" + std::to_string(line_of_byte(text, e.byte)) +
                      ": " + e.what());
  }
  if (!doc.is_object())
    throw ConfigError(filename + ":1: config must be a JSON object of scalars");

  KeyValueConfig kv;
  for (const auto& [key, value] : doc.items()) {
    const std::string where =
        filename + ":" + std::to_string(line_of_key(text, key)) + ": ";
    if (!known_key(key)) throw ConfigError(where + "unknown key '" + key + "'");
    if (value.is_number_unsigned()) {
      kv.set(key, std::to_string(value.get<std::uint64_t>()), Type::Unsigned);
    } else if (value.is_number()) {
      kv.set(key, format_double(value.get<double>()), Type::Number);
    } else if (value.is_boolean()) {
      kv.set(key, value.get<bool>() ? "true" : "false", Type::Boolean);
    } else if (value.is_string()) {
      kv.set(key, value.get<std::string>(), Type::Text);
    } else {
      throw ConfigError(where + "key '" + key + "' must be a scalar");
    }
  }
  return kv;
}

KeyValueConfig KeyValueConfig::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ":0: cannot open config file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str(), path);
}

void KeyValueConfig::set_item(const std::string& item) {
  const auto eq = item.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("--set expects key=value, got '" + item + "'");
  const std::string key = item.substr(0, eq);
  const std::string value = item.substr(eq + 1);
  if (!known_key(key)) throw ConfigError("--set: unknown key '" + key + "'");

  std::uint64_t u;
  double d;
  if (parse_u64(value, u)) {
    set(key, value, Type::Unsigned);
  } else if (parse_num(value, d)) {
    set(key, format_double(d), Type::Number);
  } else if (value == "true" || value == "false") {
    set(key, value, Type::Boolean);
  } else {
    set(key, value, Type::Text);
  }
}

void KeyValueConfig::set(const std::string& key, const std::string& value, Type t) {
  const auto it = std::lower_bound(
      items_.begin(), items_.end(), key,
      [](const auto& a, const std::string& k) { return a.first < k; });
  if (it != items_.end() && it->first == key)
    it->second = {value, t};
  else
    items_.insert(it, {key, {value, t}});
}

void KeyValueConfig::merge_defaults(const KeyValueConfig& weaker) {
  for (const auto& [key, entry] : weaker.items_)
    if (!has(key)) set(key, entry.value, entry.type);
}

bool KeyValueConfig::has(const std::string& key) const {
  const auto it = std::lower_bound(
      items_.begin(), items_.end(), key,
      [](const auto& a, const std::string& k) { return a.first < k; });
  return it != items_.end() && it->first == key;
}

namespace {
const KeyValueConfig::Entry* find_entry(
    const std::vector<std::pair<std::string, KeyValueConfig::Entry>>& items,
    const std::string& key) {
  const auto it = std::lower_bound(
      items.begin(), items.end(), key,
      [](const auto& a, const std::string& k) { return a.first < k; });
  return (it != items.end() && it->first == key) ? &it->second : nullptr;
}
}  // namespace

double KeyValueConfig::number(const std::string& key) const {
  const Entry* e = find_entry(items_, key);
  if (!e) throw ConfigError("missing required key '" + key + "'");
  double v;
  if (!parse_num(e->value, v))
    throw ConfigError("key '" + key + "' is not numeric: '" + e->value + "'");
  return v;
}

double KeyValueConfig::number_or(const std::string& key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

long KeyValueConfig::integer_or(const std::string& key, long fallback) const {
  if (!has(key)) return fallback;
  return static_cast<long>(number(key));
}

std::uint64_t KeyValueConfig::unsigned_or(const std::string& key,
                                          std::uint64_t fallback) const {
  const Entry* e = find_entry(items_, key);
  if (!e) return fallback;
  std::uint64_t v;
  if (parse_u64(e->value, v)) return v;
  return static_cast<std::uint64_t>(number(key));
}

bool KeyValueConfig::boolean_or(const std::string& key, bool fallback) const {
  const Entry* e = find_entry(items_, key);
  if (!e) return fallback;
  if (e->value == "true" || e->value == "1") return true;
  if (e->value == "false" || e->value == "0") return false;
  throw ConfigError("key '" + key + "' is not boolean: '" + e->value + "'");
}

std::string KeyValueConfig::text_or(const std::string& key,
                                    const std::string& fallback) const {
  const Entry* e = find_entry(items_, key);
  return e ? e->value : fallback;
}

std::string KeyValueConfig::to_json() const {
  json doc = json::object();
  for (const auto& [key, e] : items_) {
    switch (e.type) {
      case Type::Unsigned: {
        std::uint64_t u = 0;
        parse_u64(e.value, u);
        doc[key] = u;
        break;
      }
      case Type::Number: {
        double d = 0.0;
        parse_num(e.value, d);
        doc[key] = d;
        break;
      }
      case Type::Boolean:
        doc[key] = (e.value == "true");
        break;
      case Type::Text:
        doc[key] = e.value;
        break;
    }
  }
  return doc.dump(2) + "\n";
}

RunConfig resolve_config(const KeyValueConfig& kv, bool require_params) {
  RunConfig rc;

  const bool agg = kv.has("b") || kv.has("c") || kv.has("h");
  const bool raw = kv.has("alpha") || kv.has("beta") || kv.has("gamma") ||
                   kv.has("theta") || kv.has("rho");
  if (agg && raw)
    throw ConfigError(
        "conflicting parameterizations: give b,c,h or alpha,beta,gamma,theta,rho, "
        "not both");
  try {
    if (raw) {
      RawParams rp{kv.number("alpha"), kv.number("beta"), kv.number("gamma"),
                   kv.number("theta"), kv.number("rho")};
      rc.params = aggregate(rp);
      rc.params_given = true;
    } else if (agg) {
      rc.params = {kv.number("b"), kv.number("c"), kv.number("h")};
      validate(rc.params);
      rc.params_given = true;
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid model parameters: ") + e.what());
  }
  if (require_params && !rc.params_given)
    throw ConfigError("model parameters required: set b,c,h (or alpha..rho)");

  rc.ic = {kv.number_or("x0", 0.0), kv.number_or("y0", 0.0)};
  rc.n = kv.integer_or("n", 1000);
  const std::string map = kv.text_or("map", "M");
  if (map == "M") rc.map = MapKind::M;
  else if (map == "F") rc.map = MapKind::F;
  else if (map == "C") rc.map = MapKind::C;
  else throw ConfigError("map must be one of M, F, C");

  rc.grid.x_min = kv.number_or("grid.x_min", -0.2);
  rc.grid.x_max = kv.number_or("grid.x_max", 0.2);
  rc.grid.y_min = kv.number_or("grid.y_min", -0.2);
  rc.grid.y_max = kv.number_or("grid.y_max", 0.2);
  rc.grid.nx = static_cast<int>(kv.integer_or("grid.nx", 250));
  rc.grid.ny = static_cast<int>(kv.integer_or("grid.ny", 250));
  rc.grid_outline = kv.boolean_or("grid.outline", false);

  rc.bifurcation.b_min = kv.number_or("bif.b_min", 0.0);
  rc.bifurcation.b_max = kv.number_or("bif.b_max", 1.1);
  rc.bifurcation.c_min = kv.number_or("bif.c_min", 0.0);
  rc.bifurcation.c_max = kv.number_or("bif.c_max", 4.4);
  rc.bifurcation.nb = static_cast<int>(kv.integer_or("bif.nb", 250));
  rc.bifurcation.nc = static_cast<int>(kv.integer_or("bif.nc", 250));
  rc.bifurcation.h = rc.params_given ? rc.params.h : 0.05;
  rc.bifurcation.ic = rc.ic;

  rc.classifier.t_max = kv.integer_or("classifier.t_max", 100000);
  rc.classifier.r_div = kv.number_or("classifier.r_div", 0.0);
  rc.classifier.eps_fix = kv.number_or("classifier.eps_fix", 1e-10);
  rc.classifier.w_tail = static_cast<int>(kv.integer_or("classifier.w_tail", 4096));
  rc.classifier.p_max = static_cast<int>(kv.integer_or("classifier.p_max", 64));
  rc.classifier.eps_rec = kv.number_or("classifier.eps_rec", 1e-9);
  rc.classifier.transient = kv.integer_or("classifier.transient", 2000);
  rc.classifier.sample_cap =
      static_cast<int>(kv.integer_or("classifier.sample_cap", 256));
  rc.classifier.basin_exit = kv.boolean_or("classifier.basin_exit", true);

  rc.shocks.sigma_d = kv.number_or("stochastic.sigma_d", -1.0);
  rc.shocks.sigma_delta = kv.number_or("stochastic.sigma_delta", -1.0);
  rc.shocks.t_max = kv.integer_or("stochastic.t_max", 10000);
  rc.shocks.F0 = kv.number_or("stochastic.F0", 100.0);
  rc.shocks.seed = kv.unsigned_or("seed", 42);
  rc.shocks.x0 = rc.ic.x;
  rc.shocks.y0 = rc.ic.y;

  rc.cycles_k_max = static_cast<int>(kv.integer_or("cycles.k_max", 10));
  rc.cycles_tol = kv.number_or("cycles.tol", 1e-8);

  rc.out_dir = kv.text_or("out", "out");
  rc.threads = static_cast<int>(kv.integer_or("threads", 0));
  rc.max_undecided_frac = kv.number_or("max_undecided_frac", 0.001);
  return rc;
}

int resolve_thread_count(int configured) {
  if (configured > 0) return configured;
  if (const char* env = std::getenv("PWL_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace pwl
