#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "singular_mrl/cantor_gaps.hpp"
#include "singular_mrl/errors.hpp"
#include "singular_mrl/mrl.hpp"
#include "singular_mrl/params.hpp"

namespace singular_mrl {

/// Gap level used to augment uniform scan grids.
inline constexpr int kScanGapLevel = 8;
/// Grid points this close to the root may have an undecidable sign.
inline constexpr double kRootExclusionRadius = 1e-3;

/// x*_p = 1/6 + (5p+4) / (12(2p+1)), always inside (3/8, 1/2).
inline double fixed_point_closed_form(const PSingularParams& params) {
  const double p = params.p();
  return 1.0 / 6.0 + (5.0 * p + 4.0) / (12.0 * (2.0 * p + 1.0));
}

struct FixedPointResult {
  double x_star = 0.0;
  double residual = 0.0;  // m(x_star) - x_star
  std::pair<double, double> bracket{0.0, 0.0};
  double closed_form = 0.0;
  std::size_t sign_changes = 0;
  int iterations = 0;
};

struct UniquenessReport {
  std::size_t sign_changes = 0;
  std::size_t points_evaluated = 0;
  double root = 0.0;
  /// Points with |m(x) - x| < 2 tol within kRootExclusionRadius of the root.
  std::vector<double> indeterminate_near_root;
  /// Points with |m(x) - x| < 2 tol elsewhere; any entry is a failure.
  std::vector<double> ambiguous;
  /// min of m(x) - x over scanned x in [0, 1/3], including x = 1/3.
  double min_excess_left = 0.0;
  /// max of m(x) - x over scanned x in [2/3, 1].
  double max_excess_right = 0.0;

  bool positive_on_left() const { return min_excess_left > 0.0; }
  bool negative_on_right() const { return max_excess_right < 0.0; }
  bool ok() const {
    return sign_changes == 1 && ambiguous.empty() && positive_on_left() && negative_on_right();
  }
};

namespace detail {

inline double excess(const PSingularParams& params, double x, const EvalConfig& config) {
  return mrl(params, x, config).value - x;
}

/// Bisection of m(x) - x on [1/3, 2/3], where it is affine with slope -2.
inline FixedPointResult bisect_fixed_point(const PSingularParams& params,
                                           const EvalConfig& config) {
  config.validate();
  const EvalConfig inner = config.with_tolerance(0.25 * config.tolerance);
  // Inward-rounded so both ends lie on the plateau of F.
  double lo = ratio_rounded_up(1.0, 3.0);
  double hi = ratio_rounded_down(2.0, 3.0);
  const double g_lo = excess(params, lo, inner);
  const double g_hi = excess(params, hi, inner);
  if (!(g_lo > 0.0 && g_hi < 0.0)) {
    throw ConvergenceError("m(x) - x does not change sign on [1/3, 2/3]");
  }
  FixedPointResult out;
  for (; out.iterations < 200 && hi - lo > 0.5 * config.tolerance; ++out.iterations) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g = excess(params, mid, inner);
    if (g > 0.0) {
      lo = mid;
    } else if (g < 0.0) {
      hi = mid;
    } else {
      lo = hi = mid;
    }
  }
  out.x_star = 0.5 * (lo + hi);
  out.residual = excess(params, out.x_star, inner);
  out.bracket = {lo, hi};
  out.closed_form = fixed_point_closed_form(params);
  return out;
}

}  // namespace detail

/// Counts sign changes of m(x) - x over `grid_n` uniform points augmented with
/// the gap endpoints up to kScanGapLevel.
inline UniquenessReport verify_uniqueness(const PSingularParams& params, std::size_t grid_n,
                                          const EvalConfig& config = {}) {
  if (grid_n < 100) throw ParameterError("uniqueness scan needs grid_n >= 100");
  config.validate();
  UniquenessReport report;
  report.root = detail::bisect_fixed_point(params, config).x_star;

  std::vector<double> xs = augmented_grid(grid_n, kScanGapLevel);
  const double third_in_plateau = ratio_rounded_up(1.0, 3.0);
  const double two_thirds = ratio_rounded_up(2.0, 3.0);
  xs.push_back(third_in_plateau);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  report.min_excess_left = mrl_at_one_third(params) - 1.0 / 3.0;
  report.max_excess_right = -1.0;
  int last_sign = 0;
  for (double x : xs) {
    const double g = detail::excess(params, x, config);
    ++report.points_evaluated;
    if (x <= third_in_plateau) report.min_excess_left = std::min(report.min_excess_left, g);
    if (x >= two_thirds) report.max_excess_right = std::max(report.max_excess_right, g);
    if (std::abs(g) < 2.0 * config.tolerance) {
      if (std::abs(x - report.root) <= kRootExclusionRadius) {
        report.indeterminate_near_root.push_back(x);
      } else {
        report.ambiguous.push_back(x);
      }
      continue;
    }
    const int sign = g > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++report.sign_changes;
    last_sign = sign;
  }
  return report;
}

/// Solves m_p(x) = x and attaches the closed form and a uniqueness scan.
inline FixedPointResult fixed_point_solve(const PSingularParams& params,
                                          const EvalConfig& config = {},
                                          std::size_t scan_grid = 1000) {
  FixedPointResult out = detail::bisect_fixed_point(params, config);
  out.sign_changes = verify_uniqueness(params, scan_grid, config).sign_changes;
  return out;
}

}  // namespace singular_mrl
