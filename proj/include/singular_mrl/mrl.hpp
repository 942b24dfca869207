#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "singular_mrl/detail/descent.hpp"
#include "singular_mrl/errors.hpp"
#include "singular_mrl/integration.hpp"
#include "singular_mrl/params.hpp"

namespace singular_mrl {

/// m_p(x) = E[X - x | X > x], zero at x = 1.
struct MrlValue {
  double value = 0.0;
  double error_bound = 0.0;
  double x = 0.0;
  double p = 1.0;
};

/// m_p(1/3) = (5p+4) / (6(2p+1)).
inline double mrl_at_one_third(const PSingularParams& params) {
  const double p = params.p();
  return (5.0 * p + 4.0) / (6.0 * (2.0 * p + 1.0));
}

namespace detail {

/// S(x) = int_x^1 (1 - F) and 1 - F(x), each to absolute accuracy `tol`.
struct ResidualParts {
  Estimate tail_integral;
  Estimate survival;
  bool depth_capped = false;
};

inline ResidualParts residual_parts(const PSingularParams& params, double x, double tol,
                                    int max_depth) {
  const double p = params.p();
  ResidualParts out;
  if (x == 1.0) return out;
  DescentRequest req;
  req.max_depth = max_depth;
  if (x >= 0.5) {
    // 1 - x is exact here. Reflecting through F(1-v) = 1 - p F(v), v <= 2/3:
    //   S(x) = p J(1-x),  1 - F(x) = p F(1-x)
    const double y = 1.0 - x;
    req.cdf_tolerance = tol / std::max(1.0, p);
    req.integral_tolerance = tol / std::max(1.0, p);
    const DescentOutput d = evaluate(params, y, req);
    out.tail_integral = {p * d.integral.value, p * d.integral.error_bound, d.integral.depth};
    out.survival = {p * d.cdf.value, p * d.cdf.error_bound, d.cdf.depth};
    out.depth_capped = d.truncated && d.cdf.depth >= max_depth;
    return out;
  }
  req.cdf_tolerance = tol;
  req.integral_tolerance = tol;
  const DescentOutput d = evaluate(params, x, req);
  const DescentOutput whole = evaluate(params, 1.0, req);
  const double tail = (1.0 - x) - (whole.integral.value - d.integral.value);
  const double round = 4.0 * std::numeric_limits<double>::epsilon();
  out.tail_integral = {tail, d.integral.error_bound + whole.integral.error_bound + round,
                       d.integral.depth};
  out.survival = {1.0 - d.cdf.value, d.cdf.error_bound + round, d.cdf.depth};
  out.depth_capped = d.truncated && d.cdf.depth >= max_depth;
  return out;
}

}  // namespace detail

/// Mean residual life S(x) / (1 - F(x)). The component tolerances are tightened
/// until the quotient meets config.tolerance; if max_depth prevents that, the
/// achieved bound is reported instead.
inline MrlValue mrl(const PSingularParams& params, double x, const EvalConfig& config = {}) {
  require_unit_interval(x, "x");
  config.validate();
  MrlValue out{0.0, 0.0, x, params.p()};
  if (x == 1.0) return out;

  double tol = 0.25 * config.tolerance;
  double best_bound = std::numeric_limits<double>::infinity();
  for (int attempt = 0; attempt < 16; ++attempt) {
    const auto parts = detail::residual_parts(params, x, tol, config.max_depth);
    const double num = parts.tail_integral.value;
    const double den = parts.survival.value;
    const double den_low = den - parts.survival.error_bound;
    if (den_low > 0.0) {
      const double value = num / den;
      const double bound = (parts.tail_integral.error_bound +
                            std::abs(value) * parts.survival.error_bound) / den_low +
                           2.0 * std::numeric_limits<double>::epsilon() * std::abs(value);
      if (bound < best_bound) {
        best_bound = bound;
        out.value = value;
        out.error_bound = bound;
      }
      if (bound <= config.tolerance || parts.depth_capped) break;
      tol = std::min(0.25 * tol, 0.25 * config.tolerance * den_low);
    } else {
      if (parts.depth_capped) break;
      tol *= 1e-6;
    }
  }
  if (!std::isfinite(best_bound)) {
    // Depth cap hit before the survival probability separated from zero.
    out.value = 0.5 * (1.0 - x);
    out.error_bound = 0.5 * (1.0 - x);
  }
  out.value = std::clamp(out.value, 0.0, 1.0 - x);
  return out;
}

/// Generalised mean residual life m(x)/x on (0, 1].
inline Estimate gmrl(const PSingularParams& params, double x, const EvalConfig& config = {}) {
  require_unit_interval(x, "x");
  if (x == 0.0) {
    throw DomainError("generalised mean residual life diverges at x = 0");
  }
  const MrlValue m = mrl(params, x, config.with_tolerance(config.tolerance * std::min(1.0, x)));
  return {m.value / x, m.error_bound / x, 0};
}

/// S(x) = int_x^1 (1 - F_p(u)) du = E(X - x)_+.
inline IntegralValue tail_integral(const PSingularParams& params, double x,
                                   const EvalConfig& config = {}) {
  require_unit_interval(x, "x");
  config.validate();
  const auto parts = detail::residual_parts(params, x, config.tolerance, config.max_depth);
  return {parts.tail_integral.value, parts.tail_integral.error_bound};
}

}  // namespace singular_mrl
