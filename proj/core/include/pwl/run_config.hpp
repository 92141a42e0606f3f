#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pwl/classify.hpp"
#include "pwl/grid.hpp"
#include "pwl/params.hpp"
#include "pwl/state.hpp"
#include "pwl/stochastic.hpp"

namespace pwl {

/// Configuration error carrying a "file:line: message" style text.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat key-value configuration. Keys are dotted names mirroring the
/// --set syntax (e.g. "classifier.t_max"); values are JSON scalars kept as
/// canonical strings plus a type tag. The same store is what gets echoed
/// to resolved.json.
class KeyValueConfig {
 public:
  enum class Type { Number, Unsigned, Boolean, Text };

  /// Parses a JSON object of scalars; reports unknown keys and non-scalar
  /// values with the config file line number.
  static KeyValueConfig from_json_text(const std::string& text,
                                       const std::string& filename);
  static KeyValueConfig from_file(const std::string& path);

  /// Applies one "key=value" --set item (last writer wins).
  void set_item(const std::string& item);
  void set(const std::string& key, const std::string& value, Type t);
  void merge_defaults(const KeyValueConfig& weaker);  // keeps existing keys

  bool has(const std::string& key) const;
  double number(const std::string& key) const;
  double number_or(const std::string& key, double fallback) const;
  long integer_or(const std::string& key, long fallback) const;
  std::uint64_t unsigned_or(const std::string& key, std::uint64_t fallback) const;
  bool boolean_or(const std::string& key, bool fallback) const;
  std::string text_or(const std::string& key, const std::string& fallback) const;

  /// Serializes the store as a JSON object (sorted keys, typed values).
  std::string to_json() const;

  struct Entry {
    std::string value;
    Type type = Type::Text;
  };
  const std::vector<std::pair<std::string, Entry>>& items() const { return items_; }

 private:
  std::vector<std::pair<std::string, Entry>> items_;  // sorted by key
};

/// Typed view assembled from the key-value store.
struct RunConfig {
  ModelParams params;
  bool params_given = false;
  State ic{0.0, 0.0};
  long n = 1000;
  MapKind map = MapKind::M;
  ClassifierConfig classifier;
  GridSpec2D grid;
  bool grid_outline = false;
  BifurcationSpec bifurcation;
  ShockConfig shocks;
  int cycles_k_max = 10;
  double cycles_tol = 1e-8;
  std::string out_dir = "out";
  int threads = 0;  // 0 = auto (PWL_THREADS or hardware)
  double max_undecided_frac = 0.001;
};

/// Extracts and validates the typed configuration. Rejects mixed aggregate
/// (b,c,h) and behavioral (alpha..rho) parameterizations; when the
/// behavioral one is given it is aggregated. `require_params` demands that
/// one full parameterization is present.
RunConfig resolve_config(const KeyValueConfig& kv, bool require_params);

/// The set of recognized keys (for validation and --help).
const std::vector<std::string>& known_config_keys();

int resolve_thread_count(int configured);

}  // namespace pwl
