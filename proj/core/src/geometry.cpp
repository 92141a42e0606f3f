#include "pwl/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "pwl/map.hpp"

namespace pwl {

namespace {
void require_contracting(double b, const char* who) {
  if (!(b > 0.0 && b < 1.0))
    throw std::domain_error(std::string(who) + ": requires 0 < b < 1");
}
}  // namespace

Parallelogram immediate_basin(const ModelParams& p) {
  require_contracting(p.b, "immediate_basin");
  const double h = p.h, b = p.b;
  return {{State{-h, -h}, State{h, -h + 2.0 * h / b}, State{h, h},
           State{-h, h - 2.0 * h / b}}};
}

bool in_immediate_basin(const State& s, const ModelParams& p) {
  const double h = p.h, b = p.b;
  if (!(b > 0.0 && b < 1.0)) return false;
  if (s.x < -h || s.x > h) return false;
  return s.y <= -h + (s.x + h) / b && s.y >= h + (s.x - h) / b;
}

std::pair<Triangle, Triangle> preimage_triangles(const ModelParams& p) {
  require_contracting(p.b, "preimage_triangles");
  const double h = p.h, b = p.b;
  // Corners of the basin slab below y = -h, pulled back through the left
  // branch. The lower edge y = h + (x-h)/b meets y = -h at x = h(1-2b).
  const State a = inverse_outer(-h, -h, p);
  const State bb = inverse_outer(-h, h - 2.0 * h / b, p);
  const State c = inverse_outer(h * (1.0 - 2.0 * b), -h, p);
  Triangle left{{a, bb, c}, Triangle::Side::Left};
  Triangle right{{State{-a.x, -a.y}, State{-bb.x, -bb.y}, State{-c.x, -c.y}},
                 Triangle::Side::Right};
  return {left, right};
}

bool fundamental_line_check(const State& s, const ModelParams& p, double tol) {
  if (!(p.b > 0.0 && p.b < 1.0)) return false;
  if (std::abs(s.x) > p.h) return false;
  return std::abs(s.y - s.x / p.b) <= tol;
}

}  // namespace pwl
