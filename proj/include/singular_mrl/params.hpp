#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "singular_mrl/errors.hpp"

namespace singular_mrl {

/// Parameter of the p-singular Cantor-type family. p = 1 is the classical
/// Cantor distribution. The left third of every Cantor block carries mass
/// share 1/(p+1), the right third p/(p+1).
class PSingularParams {
 public:
  explicit PSingularParams(double p) : p_(p) {
    if (!(p > 0.0) || !std::isfinite(p)) {
      throw ParameterError("p must be a finite positive real, got " + std::to_string(p));
    }
  }

  double p() const noexcept { return p_; }

  /// Mass share of the left branch, 1/(p+1).
  double left_share() const noexcept { return 1.0 / (p_ + 1.0); }
  /// Mass share of the right branch, p/(p+1).
  double right_share() const noexcept { return p_ / (p_ + 1.0); }
  /// Per-level worst-case contraction of the CDF value uncertainty.
  double contraction() const noexcept { return std::max(1.0, p_) / (p_ + 1.0); }

  friend bool operator==(const PSingularParams&, const PSingularParams&) = default;

 private:
  double p_;
};

struct EvalConfig {
  double tolerance = 1e-12;
  int max_depth = 1 << 16;

  void validate() const {
    if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
      throw ParameterError("tolerance must be a finite positive real");
    }
    if (max_depth < 1) {
      throw ParameterError("max_depth must be at least 1");
    }
  }

  EvalConfig with_tolerance(double tol) const {
    EvalConfig c = *this;
    c.tolerance = tol;
    return c;
  }
};

/// Smallest depth d with contraction^d <= tolerance, capped at max_depth.
/// Every evaluator stops no later than this depth.
inline int effective_depth(const PSingularParams& params, const EvalConfig& config) {
  config.validate();
  const double c = params.contraction();
  const double d = std::ceil(std::log(config.tolerance) / std::log(c));
  if (!std::isfinite(d) || d > config.max_depth) return config.max_depth;
  return std::max(1, static_cast<int>(d));
}

/// A value together with a rigorous-up-to-rounding absolute error bound.
struct Estimate {
  double value = 0.0;
  double error_bound = 0.0;
  int depth = 0;
};

inline void require_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(std::string(what) + " must lie in [0, 1], got " + std::to_string(x));
  }
}

}  // namespace singular_mrl
