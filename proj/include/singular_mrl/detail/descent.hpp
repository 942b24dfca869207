#pragma once

// Exact ternary descent shared by the CDF and integral evaluators.
//
// A double x in (0, 1) is the dyadic rational num / 2^E. The maps x -> 3x and
// x -> 3(1 - x) keep the denominator fixed, so the descent runs in integer
// arithmetic and never rounds x.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>

#include "singular_mrl/params.hpp"

namespace singular_mrl::detail {

inline double i1(double p) { return (p + 2.0) / (6.0 * (p + 1.0) * (2.0 * p + 1.0)); }

inline double mean(double p) { return 1.5 * p / (2.0 * p + 1.0); }

enum class Branch { left, plateau, right };

inline double to_double(std::uint64_t v) { return static_cast<double>(v); }
inline double to_double(unsigned __int128 v) { return static_cast<double>(v); }
inline double to_double(const boost::multiprecision::cpp_int& v) {
  return v.convert_to<double>();
}

/// Position x = num / 2^exponent inside the current ternary cell, rescaled to [0, 1].
template <class UInt>
class TernaryCursor {
 public:
  TernaryCursor(UInt num, int exponent)
      : num_(num), den_(UInt(1) << exponent), exponent_(exponent) {}

  /// Descends one level. After `plateau` the cursor holds 3x - 1 in [0, 1].
  Branch step() {
    const UInt t = num_ * 3u;
    if (t < den_) {
      num_ = t;
      return Branch::left;
    }
    if (t <= den_ * 2u) {
      num_ = t - den_;
      return Branch::plateau;
    }
    num_ = den_ * 3u - t;
    return Branch::right;
  }

  bool at_zero() const { return num_ == 0u; }
  double ratio() const { return std::ldexp(to_double(num_), -exponent_); }
  double complement() const { return std::ldexp(to_double(UInt(den_ - num_)), -exponent_); }

 private:
  UInt num_;
  UInt den_;
  int exponent_;
};

struct DescentRequest {
  double cdf_tolerance = std::numeric_limits<double>::infinity();
  double integral_tolerance = std::numeric_limits<double>::infinity();
  int max_depth = 1 << 16;
};

struct DescentOutput {
  Estimate cdf;
  Estimate integral;
  bool truncated = false;
};

inline double rounding_bound(int depth, double magnitude) {
  return 4.0 * std::numeric_limits<double>::epsilon() * (depth + 2) * magnitude;
}

/// F(x) = a + b F(x') and J(x) = alpha + beta J(x') are carried as affine maps
/// of the value at the current cursor position x'.
template <class UInt>
DescentOutput descend(TernaryCursor<UInt> cursor, const PSingularParams& params,
                      const DescentRequest& request) {
  const double p = params.p();
  const double r = params.left_share();
  const double q = params.right_share();
  const double anchor = detail::i1(p);
  const double right_offset = anchor - p * anchor + r / 3.0;

  double a = 0.0, b = 1.0, a_mag = 0.0;
  double alpha = 0.0, beta = 1.0, alpha_mag = 0.0;

  const bool track_integral = std::isfinite(request.integral_tolerance);
  DescentOutput out;
  for (int depth = 0;; ++depth) {
    if (cursor.at_zero()) {
      out.cdf = {a, rounding_bound(depth, a_mag), depth};
      out.integral = {alpha, rounding_bound(depth, alpha_mag), depth};
      return out;
    }
    const double here = track_integral ? cursor.ratio() : 1.0;
    const double cdf_trunc = 0.5 * std::abs(b);
    const double int_trunc = 0.5 * std::abs(beta) * here;
    if ((cdf_trunc <= 0.5 * request.cdf_tolerance &&
         int_trunc <= 0.5 * request.integral_tolerance) ||
        depth >= request.max_depth) {
      // F(x') lies in [0, 1] and J(x') in [0, x']; report the midpoints.
      out.cdf = {a + 0.5 * b, cdf_trunc + rounding_bound(depth, a_mag + std::abs(b)), depth};
      out.integral = {alpha + beta * 0.5 * here,
                      int_trunc + rounding_bound(depth, alpha_mag + std::abs(beta)), depth};
      out.truncated = true;
      return out;
    }
    switch (cursor.step()) {
      case Branch::left:
        b *= r;
        beta *= r / 3.0;
        break;
      case Branch::plateau: {
        const double f = a + b * r;
        const double j =
            track_integral ? alpha + beta * (anchor + r * cursor.ratio() / 3.0) : 0.0;
        out.cdf = {f, rounding_bound(depth + 1, a_mag + std::abs(b)), depth + 1};
        out.integral = {j, rounding_bound(depth + 1, alpha_mag + std::abs(beta)), depth + 1};
        return out;
      }
      case Branch::right: {
        a += b;
        a_mag += std::abs(b);
        b *= -q;
        if (track_integral) {
          const double shift = beta * (right_offset + cursor.complement() / 3.0);
          alpha += shift;
          alpha_mag += std::abs(shift);
          beta *= q / 3.0;
        }
        break;
      }
    }
  }
}

/// Evaluates F(x) and J(x) = int_0^x F for a machine real x in [0, 1].
inline DescentOutput evaluate(const PSingularParams& params, double x,
                              const DescentRequest& request) {
  DescentOutput out;
  if (x == 0.0) return out;
  if (x == 1.0) {
    out.cdf = {1.0, 0.0, 0};
    // Right-branch step of the integral recursion with x' = 0.
    const double anchor = detail::i1(params.p());
    out.integral = {anchor - params.p() * anchor + params.left_share() / 3.0 + 1.0 / 3.0,
                    rounding_bound(1, 1.0), 1};
    return out;
  }
  int e = 0;
  const double frac = std::frexp(x, &e);  // x = frac * 2^e, frac in [0.5, 1)
  auto mantissa = static_cast<std::uint64_t>(std::ldexp(frac, 53));
  int exponent = 53 - e;
  while ((mantissa & 1u) == 0u) {
    mantissa >>= 1;
    --exponent;
  }
  // 3 * 2^exponent must fit in the integer type.
  if (exponent <= 62) {
    return descend(TernaryCursor<std::uint64_t>(mantissa, exponent), params, request);
  }
  if (exponent <= 126) {
    return descend(TernaryCursor<unsigned __int128>(mantissa, exponent), params, request);
  }
  using boost::multiprecision::cpp_int;
  return descend(TernaryCursor<cpp_int>(cpp_int(mantissa), exponent), params, request);
}

}  // namespace singular_mrl::detail
