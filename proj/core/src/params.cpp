#include "pwl/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pwl {

namespace {
void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}
}  // namespace

void validate(const ModelParams& p) {
  require(std::isfinite(p.b) && p.b > 0.0, "model parameter b must be finite and > 0");
  require(std::isfinite(p.c) && p.c > 0.0, "model parameter c must be finite and > 0");
  require(std::isfinite(p.h) && p.h > 0.0, "model parameter h must be finite and > 0");
}

void validate(const RawParams& rp) {
  require(std::isfinite(rp.alpha) && rp.alpha > 0.0, "alpha must be finite and > 0");
  require(std::isfinite(rp.beta) && rp.beta > 0.0, "beta must be finite and > 0");
  require(std::isfinite(rp.gamma) && rp.gamma > 0.0, "gamma must be finite and > 0");
  require(std::isfinite(rp.theta) && rp.theta > 0.0 && rp.theta < 1.0,
          "theta must lie in (0,1)");
  require(std::isfinite(rp.rho) && rp.rho > 0.0, "rho must be finite and > 0");
}

ModelParams aggregate(const RawParams& rp) {
  validate(rp);
  ModelParams p{rp.alpha * rp.beta, rp.alpha * rp.gamma, rp.rho / rp.theta};
  validate(p);
  return p;
}

}  // namespace pwl
