#pragma once

#include <array>
#include <utility>

#include "pwl/params.hpp"
#include "pwl/state.hpp"

namespace pwl {

/// Immediate basin of the fixed-point segment, for 0 < b < 1: the closed
/// parallelogram with vertices (-h,-h), (h,-h+2h/b), (h,h), (-h,h-2h/b).
/// Its slanted edges lie on the contracting eigenlines y = -h + (x+h)/b
/// and y = h + (x-h)/b through the segment's endpoints.
struct Parallelogram {
  std::array<State, 4> v{};
};

/// Throws std::domain_error unless 0 < b < 1.
Parallelogram immediate_basin(const ModelParams& p);

/// Closed-set membership: -h <= x <= h, y <= -h+(x+h)/b, y >= h+(x-h)/b.
bool in_immediate_basin(const State& s, const ModelParams& p);

/// Rank-1 preimage of the immediate basin under one outer branch: a
/// triangle with one edge on the discontinuity line x = -h (left) or
/// x = h (right).
struct Triangle {
  enum class Side { Left, Right };
  std::array<State, 3> v{};  // order: A, B, C (left); point-reflected for right
  Side side = Side::Left;
};

/// Left triangle vertices are the outer-branch preimages of the basin
/// vertices (-h,-h), (-h,h-2h/b) and of the point (h(1-2b),-h) where the
/// basin's lower edge crosses y = -h; the right triangle is the point
/// reflection through the origin. Throws std::domain_error unless 0 < b < 1.
std::pair<Triangle, Triangle> preimage_triangles(const ModelParams& p);

/// True when s lies within tol of the line y = x/b with |x| <= h — the
/// measure-zero set whose forward orbit converges to the origin.
bool fundamental_line_check(const State& s, const ModelParams& p, double tol = 1e-12);

}  // namespace pwl
