#pragma once

#include <cstdint>
#include <vector>

namespace pwl {

/// SplitMix64: the 64-bit state-mixing generator (Steele, Lea, Flood 2014).
/// state += 0x9E3779B97F4A7C15; the output is the state put through two
/// xor-shift-multiply rounds. Fixed here as the project-wide stream so other
/// implementations can replicate runs from the seed alone.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0,1): top 53 bits scaled by 2^-53.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform on (0,1]: as above, shifted one step up; safe under log().
  double uniform_pos() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

/// Standard normal deviates from SplitMix64 via the trigonometric
/// Box-Muller transform: each draw of (u1, u2) with u1 in (0,1], u2 in
/// [0,1) yields the pair r*cos(2*pi*u2), r*sin(2*pi*u2), r = sqrt(-2 ln u1),
/// emitted in that order.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : gen_(seed) {}

  double next();

 private:
  SplitMix64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// First n deviates of NormalStream(seed).
std::vector<double> normal_stream(std::uint64_t seed, std::size_t n);

}  // namespace pwl
