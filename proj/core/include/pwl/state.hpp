#pragma once

#include <cmath>

namespace pwl {

/// Phase-space point: x is the current price deviation from the fundamental
/// value, y the previous one (y_t = x_{t-1}).
struct State {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const State&, const State&) = default;
};

inline bool finite(const State& s) { return std::isfinite(s.x) && std::isfinite(s.y); }

/// Partition label of the map: L (x < -h), M (-h <= x <= h), R (x > h).
/// None is the sentinel recorded when iterating the unpartitioned limit maps.
enum class Branch { L, M, R, None };

enum class MapKind { M, F, C };

}  // namespace pwl
