#include "pwl/regions.hpp"

#include <cmath>

#include "pwl/linalg.hpp"

namespace pwl {

ParamRegion classify_region(const ModelParams& p, double tau_b) {
  if (std::abs(p.b - 1.0) <= tau_b) return ParamRegion::BoundaryCase;
  if (p.b > 1.0) return ParamRegion::R4;
  const double lower = 2.0 * (1.0 - p.b);
  const double upper = 2.0 * (1.0 + p.b);
  if (std::abs(p.c - lower) <= tau_b || std::abs(p.c - upper) <= tau_b)
    return ParamRegion::BoundaryCase;
  if (p.c < lower) return ParamRegion::R1;
  if (p.c < upper) return ParamRegion::R2;
  return ParamRegion::R3;
}

FSubregion f_subregion(const ModelParams& p) {
  if (!(p.b > 0.0 && p.b < 1.0 && p.c > 0.0 && p.c < 2.0 + 2.0 * p.b))
    return FSubregion::Unstable;
  const EigenPair e = eigen(jacobian(Branch::R, p));
  if (e.complex_pair) return FSubregion::S1;
  return (1.0 + p.b - p.c) < 0.0 ? FSubregion::S2 : FSubregion::S3;
}

StabilityMargins f_stability_margins(const ModelParams& p) {
  return {(2.0 + 2.0 * p.b) - p.c, p.c, 1.0 - p.b};
}

const char* to_string(ParamRegion r) {
  switch (r) {
    case ParamRegion::R1: return "R1";
    case ParamRegion::R2: return "R2";
    case ParamRegion::R3: return "R3";
    case ParamRegion::R4: return "R4";
    default: return "boundary";
  }
}

const char* to_string(FSubregion s) {
  switch (s) {
    case FSubregion::S1: return "S1";
    case FSubregion::S2: return "S2";
    case FSubregion::S3: return "S3";
    default: return "unstable";
  }
}

}  // namespace pwl
