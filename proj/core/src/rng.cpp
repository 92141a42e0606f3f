#include "pwl/rng.hpp"

#include <cmath>
#include <numbers>

namespace pwl {

double NormalStream::next() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = gen_.uniform_pos();
  const double u2 = gen_.uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  have_spare_ = true;
  return r * std::cos(phi);
}

std::vector<double> normal_stream(std::uint64_t seed, std::size_t n) {
  NormalStream stream(seed);
  std::vector<double> out(n);
  for (auto& v : out) v = stream.next();
  return out;
}

}  // namespace pwl
