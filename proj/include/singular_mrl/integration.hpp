#pragma once

#include "singular_mrl/detail/descent.hpp"
#include "singular_mrl/params.hpp"

namespace singular_mrl {

/// J(x) = int_0^x F_p(u) du with an absolute error bound.
struct IntegralValue {
  double value = 0.0;
  double error_bound = 0.0;
};

/// I1 = int_0^{1/3} F_p = (p+2) / (6 (p+1) (2p+1)).
inline double i1_closed_form(const PSingularParams& params) { return detail::i1(params.p()); }

/// E[X_p] = 3p / (2 (2p+1)).
inline double mean(const PSingularParams& params) { return detail::mean(params.p()); }

/// J(x) through the self-similar recursion
///   x <= 1/3:        J(x) = J(3x) / (3(p+1))
///   1/3 <= x <= 2/3: J(x) = I1 + (x - 1/3)/(p+1)
///   x >= 2/3:        J(x) = (1-p) I1 + 1/(3(p+1)) + (x - 2/3) + p J(1-x)
/// anchored on the closed form of I1.
inline IntegralValue cdf_integral(const PSingularParams& params, double x,
                                  const EvalConfig& config = {}) {
  require_unit_interval(x, "x");
  config.validate();
  detail::DescentRequest req;
  req.integral_tolerance = config.tolerance;
  req.max_depth = config.max_depth;
  const Estimate e = detail::evaluate(params, x, req).integral;
  return {e.value, e.error_bound};
}

/// 1 - J(1), the route to E[X_p] that goes through the integral recursion.
inline double mean_from_integral(const PSingularParams& params, const EvalConfig& config = {}) {
  return 1.0 - cdf_integral(params, 1.0, config).value;
}

}  // namespace singular_mrl
