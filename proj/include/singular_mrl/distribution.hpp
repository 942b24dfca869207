#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "singular_mrl/cantor_gaps.hpp"
#include "singular_mrl/detail/descent.hpp"
#include "singular_mrl/errors.hpp"
#include "singular_mrl/params.hpp"

namespace singular_mrl {

/// F_p(x) with an explicit error bound. F_p is the unique monotone function with
/// F(x/3) = F(x)/(p+1) and F(1-x) = 1 - p F(x) on [0, 2/3].
inline Estimate cdf_estimate(const PSingularParams& params, double x, const EvalConfig& config) {
  require_unit_interval(x, "x");
  config.validate();
  detail::DescentRequest req;
  req.cdf_tolerance = config.tolerance;
  req.max_depth = config.max_depth;
  return detail::evaluate(params, x, req).cdf;
}

inline double cdf(const PSingularParams& params, double x, const EvalConfig& config = {}) {
  return cdf_estimate(params, x, config).value;
}

inline Estimate survival_estimate(const PSingularParams& params, double x,
                                  const EvalConfig& config) {
  Estimate e = cdf_estimate(params, x, config);
  e.value = 1.0 - e.value;
  return e;
}

inline double survival(const PSingularParams& params, double x, const EvalConfig& config = {}) {
  return survival_estimate(params, x, config).value;
}

// ---------------------------------------------------------------------------
// Sampling

/// Number of random contractions composed per sample; truncation shifts a draw
/// by at most 3^-50.
inline constexpr int kSampleDigits = 50;

/// X = X'/3 with probability 1/(p+1) and X = 1 - X'/3 otherwise, with X' an
/// independent copy. Uses only mt19937_64's raw output.
class Sampler {
 public:
  Sampler(const PSingularParams& params, std::uint64_t seed)
      : left_share_(params.left_share()), engine_(seed) {}

  double operator()() {
    double x = 0.0;
    // The maps are i.i.d., so composing the innermost first gives the same law.
    for (int i = 0; i < kSampleDigits; ++i) {
      const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
      x = u < left_share_ ? x / 3.0 : 1.0 - x / 3.0;
    }
    return x;
  }

 private:
  double left_share_;
  std::mt19937_64 engine_;
};

inline std::vector<double> sample(const PSingularParams& params, std::uint64_t seed,
                                  std::size_t n) {
  if (n == 0) throw ParameterError("sample size must be positive");
  Sampler draw(params, seed);
  std::vector<double> out(n);
  for (double& v : out) v = draw();
  return out;
}

// ---------------------------------------------------------------------------
// Point cloud (shrink / flip iteration)

struct CloudPoint {
  double x = 0.0;
  double F = 0.0;

  friend bool operator==(const CloudPoint&, const CloudPoint&) = default;
};

struct PointCloud {
  std::vector<CloudPoint> points;
  double p = 1.0;
  int iterations = 0;
  std::size_t n_initial = 0;
};

inline constexpr std::size_t kDefaultCloudCap = 5'000'000;
inline constexpr int kMaxCloudIterations = 30;

/// Number of distinct points after `iterations` steps: the two endpoints plus one
/// copy of the initial plateau per ternary word of length <= iterations.
/// Saturates at SIZE_MAX.
inline std::size_t point_cloud_size(std::size_t n_initial, int iterations) {
  if (iterations >= 62) return SIZE_MAX;
  const std::uint64_t copies = (std::uint64_t{1} << (iterations + 1)) - 1;
  if (n_initial != 0 && copies > (SIZE_MAX - 2) / n_initial) return SIZE_MAX;
  return 2 + n_initial * copies;
}

namespace detail {

inline void validate_cloud_request(std::size_t n_initial, int iterations) {
  if (n_initial < 2) throw ParameterError("n_initial must be at least 2");
  if (iterations < 0 || iterations > kMaxCloudIterations) {
    throw ParameterError("iterations must lie in [0, " + std::to_string(kMaxCloudIterations) + "]");
  }
  // Plateau copies at the deepest level must stay resolvable in double precision.
  const long double spacing_den =
      static_cast<long double>(n_initial - 1) * std::pow(3.0L, iterations + 1);
  if (spacing_den > 0x1.0p44L) {
    throw ParameterError("n_initial * 3^(iterations+1) exceeds double resolution");
  }
}

template <class Visitor>
class CloudWalker {
 public:
  CloudWalker(const PSingularParams& params, std::size_t n_initial, Visitor& visit)
      : r_(params.left_share()), q_(params.right_share()), n_(n_initial), visit_(visit) {}

  void walk(const CellMap& cell, double fa, double fb, int remaining) {
    const double level_value = fa + fb * r_;
    if (cell.sign > 0) {
      if (remaining > 0) walk(cell.then_left(), fa, fb * r_, remaining - 1);
      plateau(cell, level_value);
      if (remaining > 0) walk(cell.then_right(), fa + fb, -fb * q_, remaining - 1);
    } else {
      if (remaining > 0) walk(cell.then_right(), fa + fb, -fb * q_, remaining - 1);
      plateau(cell, level_value);
      if (remaining > 0) walk(cell.then_left(), fa, fb * r_, remaining - 1);
    }
  }

  void emit(double x, double F) {
    if (x == last_x_) return;  // exact-equality dedup
    last_x_ = x;
    ++count_;
    visit_(x, F);
  }

  std::size_t count() const { return count_; }

 private:
  // Images of the initial plateau points 1/3 + i/(3(n-1)) under `cell`, emitted
  // in increasing x. The gap endpoints are rounded into the closed gap so F is
  // exactly constant over every emitted double.
  void plateau(const CellMap& cell, double value) {
    const auto m = static_cast<std::int64_t>(n_ - 1);
    const double den = static_cast<double>(pow3(cell.length + 1) * m);
    const double base = static_cast<double>(3 * m * cell.offset);
    const double end_den = static_cast<double>(pow3(cell.length + 1));
    const double lo = ratio_rounded_up(static_cast<double>(std::min(
                                           cell.image_of_one_third(), cell.image_of_two_thirds())),
                                       end_den);
    const double hi = ratio_rounded_down(
        static_cast<double>(std::max(cell.image_of_one_third(), cell.image_of_two_thirds())),
        end_den);
    emit(lo, value);
    for (std::int64_t k = 1; k < m; ++k) {
      // Increasing x: i = k when the cell preserves order, i = m - k otherwise.
      const std::int64_t i = cell.sign > 0 ? k : m - k;
      const double num = base + static_cast<double>(cell.sign * (m + i));
      emit(num / den, value);
    }
    emit(hi, value);
  }

  double r_;
  double q_;
  std::size_t n_;
  Visitor& visit_;
  double last_x_ = -1.0;
  std::size_t count_ = 0;
};

}  // namespace detail

/// Streams the point cloud in strictly increasing x without materialising it.
/// Memory use is O(iterations). Returns the number of points visited.
template <class Visitor>
std::size_t visit_point_cloud(const PSingularParams& params, std::size_t n_initial,
                              int iterations, Visitor&& visit) {
  detail::validate_cloud_request(n_initial, iterations);
  detail::CloudWalker<std::remove_reference_t<Visitor>> walker(params, n_initial, visit);
  walker.emit(0.0, 0.0);
  walker.walk(CellMap{}, 0.0, 1.0, iterations);
  walker.emit(1.0, 1.0);
  return walker.count();
}

/// Materialised point cloud. Throws ResourceError when the point count would
/// exceed `max_points`; use visit_point_cloud for larger constructions.
inline PointCloud point_cloud(const PSingularParams& params, std::size_t n_initial,
                              int iterations, std::size_t max_points = kDefaultCloudCap) {
  detail::validate_cloud_request(n_initial, iterations);
  const std::size_t expected = point_cloud_size(n_initial, iterations);
  if (expected > max_points) {
    throw ResourceError("point cloud would hold " + std::to_string(expected) +
                        " points, cap is " + std::to_string(max_points));
  }
  PointCloud cloud;
  cloud.p = params.p();
  cloud.iterations = iterations;
  cloud.n_initial = n_initial;
  cloud.points.reserve(expected);
  visit_point_cloud(params, n_initial, iterations,
                    [&](double x, double F) { cloud.points.push_back({x, F}); });
  return cloud;
}

}  // namespace singular_mrl
