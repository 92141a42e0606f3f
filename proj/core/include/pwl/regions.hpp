#pragma once

#include "pwl/params.hpp"

namespace pwl {

/// Parameter-plane regions of the (b, c) quadrant:
///   R1: 0 < b < 1, c < 2(1-b)   -- the fixed-point segment attracts globally
///   R2: 0 < b < 1, 2(1-b) < c < 2(1+b) -- quasiperiodic attractors may coexist
///   R3: 0 < b < 1, c > 2(1+b)   -- fixed points or divergence
///   R4: b > 1                   -- divergence off the fixed-point segment
/// Points within tau_b of any boundary (including b = 1) are BoundaryCase.
enum class ParamRegion { R1, R2, R3, R4, BoundaryCase };

ParamRegion classify_region(const ModelParams& p, double tau_b = 1e-9);

/// Eigenvalue character of the jointly-active map inside its stability box
/// 0 < c < 2+2b, 0 < b < 1: S1 complex conjugate, S2 real negative,
/// S3 real positive; Unstable outside the box.
enum class FSubregion { S1, S2, S3, Unstable };

FSubregion f_subregion(const ModelParams& p);

/// Schur-Cohn stability margins of the jointly-active map's Jacobian
/// (trace 1+b-c, determinant b), arranged so the zero crossings sit exactly
/// on the box edges: {(2+2b)-c, c, 1-b}. All three positive <=> stable.
struct StabilityMargins {
  double one_plus_tr_plus_det = 0.0;   // (2+2b) - c
  double one_minus_tr_plus_det = 0.0;  // c
  double one_minus_det = 0.0;          // 1 - b
};

StabilityMargins f_stability_margins(const ModelParams& p);

const char* to_string(ParamRegion r);
const char* to_string(FSubregion s);

}  // namespace pwl
