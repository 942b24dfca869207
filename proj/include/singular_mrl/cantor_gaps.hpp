#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "singular_mrl/errors.hpp"

namespace singular_mrl {

/// Correctly rounded num/den towards +infinity. Both operands must be exact doubles.
inline double ratio_rounded_up(double num, double den) {
  double q = num / den;
  // The division remainder of a correctly rounded quotient is representable.
  if (std::fma(-q, den, num) > 0.0) q = std::nextafter(q, std::numeric_limits<double>::infinity());
  return q;
}

inline double ratio_rounded_down(double num, double den) {
  double q = num / den;
  if (std::fma(-q, den, num) < 0.0) q = std::nextafter(q, -std::numeric_limits<double>::infinity());
  return q;
}

inline std::int64_t pow3(int k) {
  std::int64_t v = 1;
  for (int i = 0; i < k; ++i) v *= 3;
  return v;
}

/// Composition of the contractions x -> x/3 and x -> 1 - x/3, tracked exactly as
/// x -> (offset + sign * x) / 3^length.
struct CellMap {
  std::int64_t offset = 0;
  int sign = 1;
  int length = 0;

  CellMap then_left() const { return {3 * offset, sign, length + 1}; }
  CellMap then_right() const { return {3 * offset + 3 * sign, -sign, length + 1}; }

  /// Numerator over 3^(length+1) of the image of 1/3 and 2/3.
  std::int64_t image_of_one_third() const { return 3 * offset + sign; }
  std::int64_t image_of_two_thirds() const { return 3 * offset + 2 * sign; }
};

/// Maximal interval of constancy of every F_p, closed form [A/3^k, (A+1)/3^k].
/// `lower`/`upper` are rounded inwards so both doubles lie in the closed gap.
struct Gap {
  int level = 0;
  std::int64_t numerator = 0;
  std::int64_t denominator = 0;
  double lower = 0.0;
  double upper = 0.0;

  double width() const { return 1.0 / static_cast<double>(denominator); }
  bool contains(double x) const { return x >= lower && x <= upper; }
};

inline Gap make_gap(const CellMap& cell) {
  const std::int64_t a = cell.image_of_one_third();
  const std::int64_t b = cell.image_of_two_thirds();
  Gap g;
  g.level = cell.length + 1;
  g.numerator = std::min(a, b);
  g.denominator = pow3(cell.length + 1);
  g.lower = ratio_rounded_up(static_cast<double>(g.numerator), static_cast<double>(g.denominator));
  g.upper = ratio_rounded_down(static_cast<double>(g.numerator + 1),
                               static_cast<double>(g.denominator));
  return g;
}

/// All gaps of the middle-third construction up to `max_level` (2^max_level - 1
/// intervals), sorted by position.
inline std::vector<Gap> cantor_gaps(int max_level) {
  if (max_level < 0 || max_level > 33) {
    throw ParameterError("gap level must lie in [0, 33]");
  }
  std::vector<Gap> gaps;
  std::vector<CellMap> frontier{CellMap{}};
  for (int level = 1; level <= max_level; ++level) {
    std::vector<CellMap> next;
    next.reserve(frontier.size() * 2);
    for (const CellMap& cell : frontier) {
      gaps.push_back(make_gap(cell));
      next.push_back(cell.then_left());
      next.push_back(cell.then_right());
    }
    frontier = std::move(next);
  }
  std::sort(gaps.begin(), gaps.end(),
            [](const Gap& l, const Gap& r) { return l.lower < r.lower; });
  return gaps;
}

/// Both inward-rounded endpoints of every gap up to `max_level`, sorted.
inline std::vector<double> gap_endpoints(int max_level) {
  std::vector<double> pts;
  for (const Gap& g : cantor_gaps(max_level)) {
    pts.push_back(g.lower);
    pts.push_back(g.upper);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

/// `grid_n` evenly spaced points on [0, 1] merged with the level <= `gap_level`
/// gap endpoints, sorted and deduplicated.
inline std::vector<double> augmented_grid(std::size_t grid_n, int gap_level) {
  std::vector<double> pts = gap_endpoints(gap_level);
  if (grid_n == 1) {
    pts.push_back(0.0);
  } else {
    for (std::size_t i = 0; i < grid_n; ++i) {
      pts.push_back(static_cast<double>(i) / static_cast<double>(grid_n - 1));
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace singular_mrl
