#pragma once

namespace pwl {

/// Aggregate parameters of the piecewise-linear market map:
/// b = alpha*beta (chartist impact), c = alpha*gamma (fundamentalist impact),
/// h = rho/theta (half-width of the fundamentalists' inactivity band).
/// All three must be positive and finite.
struct ModelParams {
  double b = 0.0;
  double c = 0.0;
  double h = 0.0;
};

/// Behavioral parameters of the price-level model. alpha is the market
/// maker's adjustment speed, beta/gamma the chartist/fundamentalist
/// reaction strengths, theta in (0,1) the expectation parameter and
/// rho > 0 the risk-compensation preference.
struct RawParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double theta = 0.0;
  double rho = 0.0;
};

/// Throws std::invalid_argument when a parameter violates its range.
void validate(const ModelParams& p);
void validate(const RawParams& rp);

/// b = alpha*beta, c = alpha*gamma, h = rho/theta. Validates both ends.
ModelParams aggregate(const RawParams& rp);

}  // namespace pwl
