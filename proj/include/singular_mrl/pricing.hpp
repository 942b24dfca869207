#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "singular_mrl/cantor_gaps.hpp"
#include "singular_mrl/errors.hpp"
#include "singular_mrl/fixedpoint.hpp"
#include "singular_mrl/mrl.hpp"
#include "singular_mrl/params.hpp"

namespace singular_mrl {

struct PayoffPoint {
  double price = 0.0;
  double payoff = 0.0;
};

/// Monopoly pricing against linear demand X - x with X ~ F_p.
struct PricingResult {
  double p = 1.0;
  double optimal_price = 0.0;
  double expected_payoff = 0.0;
  std::optional<std::vector<PayoffPoint>> payoff_curve;
};

/// Pi(x) = x E(X - x)_+ = x int_x^1 (1 - F_p).
inline double expected_payoff(const PSingularParams& params, double price,
                              const EvalConfig& config = {}) {
  require_unit_interval(price, "price");
  if (price == 0.0) return 0.0;
  return price * tail_integral(params, price, config).value;
}

/// Payoff over `curve_points` evenly spaced prices in [0, 1].
inline std::vector<PayoffPoint> payoff_curve(const PSingularParams& params,
                                             std::size_t curve_points,
                                             const EvalConfig& config = {}) {
  if (curve_points < 2) throw ParameterError("payoff curve needs at least 2 points");
  std::vector<PayoffPoint> curve;
  curve.reserve(curve_points);
  for (std::size_t i = 0; i < curve_points; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(curve_points - 1);
    curve.push_back({x, expected_payoff(params, x, config)});
  }
  return curve;
}

/// The optimal price is the unique fixed point of the mean residual life.
/// `curve_points` > 0 attaches a payoff curve.
inline PricingResult optimal_price(const PSingularParams& params, const EvalConfig& config = {},
                                   std::size_t curve_points = 0) {
  const FixedPointResult fp = detail::bisect_fixed_point(params, config);
  PricingResult out;
  out.p = params.p();
  out.optimal_price = fp.x_star;
  out.expected_payoff = expected_payoff(params, fp.x_star, config);
  if (curve_points > 0) out.payoff_curve = payoff_curve(params, curve_points, config);
  return out;
}

/// Optimal prices across a list of parameters, in the order given.
inline std::vector<PricingResult> comparative_statics(const std::vector<double>& p_values,
                                                      const EvalConfig& config = {}) {
  if (p_values.empty()) throw ParameterError("p_values must be nonempty");
  std::vector<PSingularParams> params;
  params.reserve(p_values.size());
  for (double p : p_values) params.emplace_back(p);  // validates every p up front
  std::vector<PricingResult> out;
  out.reserve(params.size());
  for (const auto& ps : params) out.push_back(optimal_price(ps, config));
  return out;
}

/// Demand supported on [0, market_size] instead of [0, 1]: X = market_size * Y.
/// Prices scale linearly and payoffs quadratically.
class ScaledMarket {
 public:
  ScaledMarket(const PSingularParams& params, double market_size)
      : params_(params), size_(market_size) {
    if (!(market_size > 0.0)) throw ParameterError("market_size must be positive");
  }

  double expected_payoff(double price, const EvalConfig& config = {}) const {
    if (!(price >= 0.0 && price <= size_)) {
      throw DomainError("price must lie in [0, market_size]");
    }
    return size_ * size_ * singular_mrl::expected_payoff(params_, price / size_, config);
  }

  PricingResult optimal_price(const EvalConfig& config = {}) const {
    PricingResult r = singular_mrl::optimal_price(params_, config);
    r.optimal_price *= size_;
    r.expected_payoff *= size_ * size_;
    return r;
  }

 private:
  PSingularParams params_;
  double size_;
};

}  // namespace singular_mrl
