#pragma once

// Property checks and acceptance criteria, run by the acceptance test binary and
// by `singular-mrl verify`.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "singular_mrl/cantor_gaps.hpp"
#include "singular_mrl/distribution.hpp"
#include "singular_mrl/fixedpoint.hpp"
#include "singular_mrl/integration.hpp"
#include "singular_mrl/mrl.hpp"
#include "singular_mrl/pricing.hpp"

namespace singular_mrl {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

template <class... Args>
std::string describe(const Args&... args) {
  std::ostringstream os;
  os.precision(6);
  (os << ... << args);
  return os.str();
}

template <class Fn>
CheckResult timed(std::string name, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r = fn();
  r.name = std::move(name);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Running mean and standard error (Welford).
class MeanAccumulator {
 public:
  void add(double v) {
    ++n_;
    const double d = v - mean_;
    mean_ += d / static_cast<double>(n_);
    m2_ += d * (v - mean_);
  }
  double mean() const { return mean_; }
  double standard_error() const {
    return n_ > 1 ? std::sqrt(m2_ / static_cast<double>(n_ - 1) / static_cast<double>(n_)) : 0.0;
  }

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) {
    v.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  }
  return v;
}

// Sup distance between the empirical CDF of `draws` and F_p, taken over the
// midpoints of all gaps up to `level`.
inline double ks_distance(const PSingularParams& params, std::vector<double> draws,
                          const EvalConfig& config, int level = 12) {
  std::sort(draws.begin(), draws.end());
  const double n = static_cast<double>(draws.size());
  double sup = 0.0;
  for (const Gap& g : cantor_gaps(level)) {
    const double t = 0.5 * (g.lower + g.upper);
    const auto below = std::upper_bound(draws.begin(), draws.end(), t) - draws.begin();
    sup = std::max(sup, std::abs(cdf(params, t, config) - static_cast<double>(below) / n));
  }
  return sup;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Individual property checks, reusable for any p.

inline CheckResult check_cdf_monotone(const PSingularParams& params, const EvalConfig& config,
                                      std::uint64_t seed, int n = 4000) {
  std::mt19937_64 rng(seed);
  std::vector<double> xs(n);
  for (double& x : xs) x = detail::uniform01(rng);
  std::sort(xs.begin(), xs.end());
  double worst = 0.0, prev = cdf(params, 0.0, config);
  for (double x : xs) {
    const double f = cdf(params, x, config);
    worst = std::max(worst, prev - f);
    prev = f;
  }
  return {"", worst <= 2.0 * config.tolerance, detail::describe("max decrease ", worst)};
}

/// |F(x/3) - F(x)/(p+1)| on [0,1] and |F(1-x) - (1 - p F(x))| on [0, 2/3].
inline CheckResult check_functional_equations(const PSingularParams& params,
                                              const EvalConfig& config, std::uint64_t seed,
                                              int n, double threshold) {
  std::mt19937_64 rng(seed);
  const EvalConfig amplified = config.with_tolerance(config.tolerance / std::max(1.0, params.p()));
  double worst_scale = 0.0, worst_flip = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = detail::uniform01(rng);
    worst_scale = std::max(worst_scale, std::abs(cdf(params, x / 3.0, config) -
                                                 cdf(params, x, config) * params.left_share()));
    const double y = detail::uniform01(rng) * (2.0 / 3.0);
    worst_flip = std::max(worst_flip, std::abs(cdf(params, 1.0 - y, config) -
                                               (1.0 - params.p() * cdf(params, y, amplified))));
  }
  return {"", worst_scale <= threshold && worst_flip <= threshold,
          detail::describe("max residual (i) ", worst_scale, ", (ii) ", worst_flip)};
}

inline CheckResult check_plateau(const PSingularParams& params, const EvalConfig& config) {
  const double lo = ratio_rounded_up(1.0, 3.0);
  const double hi = ratio_rounded_down(2.0, 3.0);
  double worst = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double x = lo + (hi - lo) * i / 100.0;
    worst = std::max(worst, std::abs(cdf(params, x, config) - params.left_share()));
  }
  return {"", worst == 0.0, detail::describe("max deviation ", worst)};
}

/// Dvoretzky-Kiefer-Wolfowitz band at confidence 0.999, evaluated on gap midpoints.
inline CheckResult check_dkw(const PSingularParams& params, const EvalConfig& config,
                             std::uint64_t seed, std::size_t n) {
  const double band = std::sqrt(std::log(2.0 / 0.001) / (2.0 * static_cast<double>(n)));
  const double ks = detail::ks_distance(params, sample(params, seed, n), config);
  return {"", ks <= band, detail::describe("sup |F_n - F| ", ks, " vs band ", band)};
}

inline CheckResult check_integral_lipschitz(const PSingularParams& params,
                                            const EvalConfig& config, std::uint64_t seed,
                                            int n = 2000) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    double x = detail::uniform01(rng), y = detail::uniform01(rng);
    if (x > y) std::swap(x, y);
    const double d = cdf_integral(params, y, config).value - cdf_integral(params, x, config).value;
    worst = std::max({worst, -d, d - (y - x)});
  }
  return {"", worst <= 2.0 * config.tolerance, detail::describe("max violation ", worst)};
}

inline CheckResult check_integral_self_similarity(const PSingularParams& params,
                                                  const EvalConfig& config, std::uint64_t seed,
                                                  int n = 2000) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double y = detail::uniform01(rng) / 3.0;
    const double lhs = cdf_integral(params, y, config).value;
    const double rhs =
        cdf_integral(params, std::min(1.0, 3.0 * y), config).value * params.left_share() / 3.0;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return {"", worst <= 2.0 * config.tolerance, detail::describe("max residual ", worst)};
}

inline CheckResult check_mean_identity(const PSingularParams& params, const EvalConfig& config,
                                       double threshold) {
  const double diff = std::abs(mean(params) - mean_from_integral(params, config));
  return {"", diff <= threshold, detail::describe("|mean - (1 - J(1))| = ", diff)};
}

inline CheckResult check_monte_carlo_mean(const PSingularParams& params, std::uint64_t seed,
                                          std::size_t n) {
  Sampler draw(params, seed);
  detail::MeanAccumulator acc;
  for (std::size_t i = 0; i < n; ++i) acc.add(draw());
  const double z = std::abs(acc.mean() - mean(params)) / acc.standard_error();
  return {"", z <= 4.0,
          detail::describe("sample mean ", acc.mean(), " vs ", mean(params), " (", z, " SE)")};
}

inline CheckResult check_mrl_range(const PSingularParams& params, const EvalConfig& config,
                                   std::uint64_t seed, int n = 2000) {
  std::mt19937_64 rng(seed);
  bool ok = true;
  double worst_x = -1.0;
  for (int i = 0; i < n; ++i) {
    const double x = detail::uniform01(rng);
    const double m = mrl(params, x, config).value;
    if (!(m >= 0.0 && m <= 1.0 - x)) {
      ok = false;
      worst_x = x;
    }
  }
  return {"", ok, ok ? "0 <= m(x) <= 1 - x everywhere" : detail::describe("violated at ", worst_x)};
}

/// On every gap up to `level`: m(a + t) = m(a) - t and m, e strictly decrease.
inline CheckResult check_gap_descent(const PSingularParams& params, const EvalConfig& config,
                                     int level, int samples_per_gap, double threshold) {
  double worst = 0.0;
  bool decreasing = true;
  const auto gaps = cantor_gaps(level);
  for (const Gap& g : gaps) {
    const double m0 = mrl(params, g.lower, config).value;
    double prev_m = m0, prev_e = m0 / g.lower;
    for (int k = 1; k <= samples_per_gap; ++k) {
      const double x = k == samples_per_gap
                           ? g.upper
                           : g.lower + (g.upper - g.lower) * k / samples_per_gap;
      const double m = mrl(params, x, config).value;
      worst = std::max(worst, std::abs(m - (m0 - (x - g.lower))));
      const double e = m / x;
      if (!(m < prev_m && e < prev_e)) decreasing = false;
      prev_m = m;
      prev_e = e;
    }
  }
  return {"", worst <= threshold && decreasing,
          detail::describe(gaps.size(), " gaps, max |m(a+t) - (m(a) - t)| ", worst,
                           decreasing ? ", strictly decreasing" : ", NOT strictly decreasing")};
}

inline CheckResult check_mrl_boundary(const PSingularParams& params, const EvalConfig& config) {
  const MrlValue m = mrl(params, 1.0 - 1e-6, config);
  return {"", m.value < 1e-5 || m.value - m.error_bound < 1e-5,
          detail::describe("m(1 - 1e-6) = ", m.value)};
}

inline CheckResult check_mrl_one_third(const PSingularParams& params, const EvalConfig& config,
                                       double threshold) {
  // The nearest double to 1/3 lies below it on the Cantor set; use the first one above.
  const double diff =
      std::abs(mrl(params, ratio_rounded_up(1.0, 3.0), config).value - mrl_at_one_third(params));
  return {"", diff <= threshold, detail::describe("|m(1/3) - (5p+4)/(6(2p+1))| = ", diff)};
}

/// m(x) - x > m(y) - y - 2 delta for y <= x < y + delta, mirrored for x <= y.
inline CheckResult check_sandwich_inequalities(const PSingularParams& params, const EvalConfig& config,
                                        std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  double tightest = 1e300;
  const double slack = 4.0 * config.tolerance;
  for (int i = 0; i < n; ++i) {
    const double delta = std::pow(10.0, -6.0 + 5.0 * detail::uniform01(rng));
    const double y = detail::uniform01(rng);
    const double gy = mrl(params, y, config).value - y;
    const double x_up = std::min(1.0, y + delta * detail::uniform01(rng));
    const double x_dn = std::max(0.0, y - delta * detail::uniform01(rng));
    const double up = (mrl(params, x_up, config).value - x_up) - (gy - 2.0 * delta);
    const double dn = (gy + 2.0 * delta) - (mrl(params, x_dn, config).value - x_dn);
    if (!(up > -slack)) ++failures;
    if (!(dn > -slack)) ++failures;
    tightest = std::min({tightest, up, dn});
  }
  return {"", failures == 0,
          detail::describe(failures, " failures in ", 2 * n, " checks, tightest margin ", tightest)};
}

inline CheckResult check_fixed_point(const PSingularParams& params, const EvalConfig& config,
                                     double threshold) {
  const FixedPointResult fp = detail::bisect_fixed_point(params, config);
  const double diff = std::abs(fp.x_star - fp.closed_form);
  return {"", diff <= threshold && std::abs(fp.residual) <= config.tolerance,
          detail::describe("x* = ", fp.x_star, ", |x* - closed form| ", diff, ", residual ",
                           fp.residual)};
}

inline CheckResult check_uniqueness(const PSingularParams& params, const EvalConfig& config,
                                    std::size_t grid_n) {
  const UniquenessReport r = verify_uniqueness(params, grid_n, config);
  return {"", r.ok(),
          detail::describe(r.sign_changes, " sign change(s) over ", r.points_evaluated,
                           " points, min_{[0,1/3]}(m - x) = ", r.min_excess_left,
                           ", ambiguous ", r.ambiguous.size())};
}

inline CheckResult check_payoff_dominance(const PSingularParams& params, const EvalConfig& config,
                                          std::size_t grid_n) {
  const PricingResult best = optimal_price(params, config);
  double worst = -1e300, worst_x = 0.0;
  for (double x : augmented_grid(grid_n, kScanGapLevel)) {
    const double gain = expected_payoff(params, x, config) - best.expected_payoff;
    if (gain > worst) {
      worst = gain;
      worst_x = x;
    }
  }
  const double fo = std::abs(mrl(params, best.optimal_price, config).value - best.optimal_price);
  return {"", worst <= 2.0 * config.tolerance && fo <= config.tolerance,
          detail::describe("x* = ", best.optimal_price, ", max Pi(x) - Pi(x*) = ", worst, " at ",
                           worst_x, ", |m(x*) - x*| = ", fo)};
}

/// |Pi(x) - mean of x (X - x)_+| within 4 standard errors at each price.
inline CheckResult check_payoff_monte_carlo(const PSingularParams& params,
                                            const EvalConfig& config,
                                            const std::vector<double>& prices,
                                            std::uint64_t seed, std::size_t n) {
  std::vector<detail::MeanAccumulator> acc(prices.size());
  Sampler draw(params, seed);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = draw();
    for (std::size_t k = 0; k < prices.size(); ++k) {
      acc[k].add(prices[k] * std::max(0.0, v - prices[k]));
    }
  }
  double worst_z = 0.0;
  for (std::size_t k = 0; k < prices.size(); ++k) {
    const double se = acc[k].standard_error();
    const double diff = std::abs(expected_payoff(params, prices[k], config) - acc[k].mean());
    worst_z = std::max(worst_z, se > 0.0 ? diff / se : (diff == 0.0 ? 0.0 : 1e300));
  }
  return {"", worst_z <= 4.0, detail::describe("worst deviation ", worst_z, " SE")};
}

// ---------------------------------------------------------------------------

/// Every documented invariant of the evaluators, solver and pricing model for a
/// single parameter value.
inline std::vector<CheckResult> invariant_suite(const PSingularParams& params,
                                                const EvalConfig& config = {},
                                                std::uint64_t seed = 20240917) {
  std::vector<CheckResult> out;
  out.push_back(detail::timed("cdf monotone", [&] { return check_cdf_monotone(params, config, seed); }));
  out.push_back(detail::timed("cdf functional equations", [&] {
    return check_functional_equations(params, config, seed + 1, 2000, 2.0 * config.tolerance);
  }));
  out.push_back(detail::timed("cdf plateau on [1/3, 2/3]", [&] { return check_plateau(params, config); }));
  out.push_back(detail::timed("empirical cdf inside DKW band (n = 1e6)",
                              [&] { return check_dkw(params, config, seed + 2, 1'000'000); }));
  out.push_back(detail::timed("integral monotone and 1-Lipschitz",
                              [&] { return check_integral_lipschitz(params, config, seed + 3); }));
  out.push_back(detail::timed("integral self-similarity",
                              [&] { return check_integral_self_similarity(params, config, seed + 4); }));
  out.push_back(detail::timed("mean = 1 - J(1)",
                              [&] { return check_mean_identity(params, config, config.tolerance); }));
  out.push_back(detail::timed("Monte Carlo mean (n = 1e6)",
                              [&] { return check_monte_carlo_mean(params, seed + 5, 1'000'000); }));
  out.push_back(detail::timed("mrl range", [&] { return check_mrl_range(params, config, seed + 6); }));
  out.push_back(detail::timed("mrl slope -1 and decrease on gaps (level <= 5)", [&] {
    return check_gap_descent(params, config, 5, 8, 2.0 * config.tolerance);
  }));
  out.push_back(detail::timed("mrl vanishes at 1", [&] { return check_mrl_boundary(params, config); }));
  out.push_back(detail::timed("mrl(1/3) closed form",
                              [&] { return check_mrl_one_third(params, config, config.tolerance); }));
  out.push_back(detail::timed("local sandwich inequalities",
                              [&] { return check_sandwich_inequalities(params, config, seed + 7, 1000); }));
  out.push_back(detail::timed("fixed point vs closed form",
                              [&] { return check_fixed_point(params, config, 1e-8); }));
  out.push_back(detail::timed("unique fixed point (grid 1000 + gaps)",
                              [&] { return check_uniqueness(params, config, 1000); }));
  out.push_back(detail::timed("payoff maximised at fixed point",
                              [&] { return check_payoff_dominance(params, config, 1000); }));
  out.push_back(detail::timed("payoff vs Monte Carlo (10 prices, n = 1e6)", [&] {
    std::mt19937_64 rng(seed + 8);
    std::vector<double> prices(10);
    for (double& x : prices) x = detail::uniform01(rng);
    return check_payoff_monte_carlo(params, config, prices, seed + 9, 1'000'000);
  }));
  return out;
}

// ---------------------------------------------------------------------------
// Acceptance criteria

struct AcceptanceCriterion {
  int id;
  std::string title;
  std::function<CheckResult()> run;
};

namespace detail {

inline CheckResult all_of(const std::vector<CheckResult>& parts) {
  CheckResult r;
  r.passed = true;
  std::ostringstream os;
  for (const auto& part : parts) {
    r.passed = r.passed && part.passed;
    os << "\n    " << (part.passed ? "ok   " : "FAIL ") << part.name << ": " << part.detail;
  }
  r.detail = os.str();
  return r;
}

inline CheckResult named(std::string name, CheckResult r) {
  r.name = std::move(name);
  return r;
}

inline const std::vector<double>& eight_ps() {
  static const std::vector<double> ps{0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0};
  return ps;
}

}  // namespace detail

inline std::vector<AcceptanceCriterion> acceptance_criteria(std::uint64_t seed = 20240917) {
  using detail::describe;
  using detail::named;
  std::vector<AcceptanceCriterion> list;

  list.push_back({1, "fixed point p = 1 is 5/12", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const FixedPointResult fp = fixed_point_solve(PSingularParams(1.0), EvalConfig{});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double err = std::abs(fp.x_star - 5.0 / 12.0);
    return CheckResult{"", err <= 1e-9 && secs < 1.0 && fp.sign_changes == 1,
                       describe("x* = ", fp.x_star, ", |x* - 5/12| = ", err, ", ", secs, " s")};
  }});

  list.push_back({2, "closed-form fixed points across p", [] {
    std::vector<CheckResult> parts;
    double prev = 1.0;
    bool decreasing = true, bounded = true;
    for (double p : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0}) {
      const PSingularParams ps(p);
      const FixedPointResult fp = detail::bisect_fixed_point(ps, EvalConfig{});
      const double err = std::abs(fp.x_star - fixed_point_closed_form(ps));
      parts.push_back(named(describe("p = ", p), {"", err <= 1e-8,
                                                  describe("x* = ", fp.x_star, ", error ", err)}));
      decreasing = decreasing && fp.x_star < prev;
      bounded = bounded && fp.x_star > 0.375 && fp.x_star < 0.5;
      prev = fp.x_star;
    }
    parts.push_back(named("strictly decreasing in p", {"", decreasing, ""}));
    parts.push_back(named("inside (3/8, 1/2)", {"", bounded, ""}));
    return detail::all_of(parts);
  }});

  list.push_back({3, "mean residual life anchors", [] {
    std::vector<CheckResult> parts;
    const PSingularParams one(1.0);
    const double m0 = mrl(one, 0.0).value;
    parts.push_back(named("m_1(0) = 1/2", {"", std::abs(m0 - 0.5) <= 1e-9, describe(m0)}));
    const double m2081 = mrl(one, 20.0 / 81.0).value;
    parts.push_back(named("m_1(20/81) = 29/66",
                          {"", std::abs(m2081 - 29.0 / 66.0) <= 1e-9,
                           describe(m2081, ", error ", std::abs(m2081 - 29.0 / 66.0))}));
    for (double p : detail::eight_ps()) {
      parts.push_back(named(describe("m_p(1/3), p = ", p),
                            check_mrl_one_third(PSingularParams(p), EvalConfig{}, 1e-9)));
    }
    return detail::all_of(parts);
  }});

  list.push_back({4, "mean identities", [seed] {
    std::vector<CheckResult> parts;
    for (double p : detail::eight_ps()) {
      const PSingularParams ps(p);
      parts.push_back(named(describe("1 - J(1), p = ", p), check_mean_identity(ps, EvalConfig{}, 1e-10)));
      parts.push_back(named(describe("Monte Carlo, p = ", p),
                            check_monte_carlo_mean(ps, seed + static_cast<std::uint64_t>(p * 1000), 1'000'000)));
    }
    return detail::all_of(parts);
  }});

  list.push_back({5, "functional-equation residuals", [seed] {
    std::vector<CheckResult> parts;
    for (double p : {0.5, 1.0, 3.0}) {
      parts.push_back(named(describe("p = ", p),
                            check_functional_equations(PSingularParams(p), EvalConfig{}, seed + 11,
                                                       10'000, 2e-10)));
    }
    return detail::all_of(parts);
  }});

  list.push_back({6, "local sandwich inequalities and exact slope on gaps", [seed] {
    std::vector<CheckResult> parts;
    for (double p : {0.1, 1.0, 10.0}) {
      const PSingularParams ps(p);
      parts.push_back(named(describe("(i)/(ii), p = ", p),
                            check_sandwich_inequalities(ps, EvalConfig{}, seed + 13, 1000)));
      parts.push_back(named(describe("(iii) level <= 6, p = ", p),
                            check_gap_descent(ps, EvalConfig{}, 6, 16, 2e-10)));
    }
    return detail::all_of(parts);
  }});

  list.push_back({7, "unique sign change of m(x) - x", [] {
    std::vector<CheckResult> parts;
    for (double p : {0.01, 0.1, 1.0, 10.0, 100.0}) {
      parts.push_back(named(describe("p = ", p), check_uniqueness(PSingularParams(p), EvalConfig{}, 5000)));
    }
    return detail::all_of(parts);
  }});

  list.push_back({8, "pricing: Monte Carlo payoff and grid dominance", [seed] {
    std::vector<CheckResult> parts;
    const PSingularParams one(1.0);
    const double x = 5.0 / 12.0;
    CheckResult mc = check_payoff_monte_carlo(one, EvalConfig{}, {x}, seed + 17, 10'000'000);
    mc.detail += describe(", Pi(5/12) = ", expected_payoff(one, x), " vs 25/288 = ", 25.0 / 288.0);
    parts.push_back(named("Pi_1(5/12) vs Monte Carlo (n = 1e7)", mc));
    for (double p : {0.5, 1.0, 2.0}) {
      parts.push_back(named(describe("dominance, p = ", p),
                            check_payoff_dominance(PSingularParams(p), EvalConfig{}, 1000)));
    }
    return detail::all_of(parts);
  }});

  list.push_back({9, "point cloud (1000 initial points, 17 iterations)", [] {
    std::vector<CheckResult> parts;
    const PSingularParams one(1.0);
    const EvalConfig cfg;
    double worst = 0.0, last_x = -1.0, last_f = -1.0;
    bool increasing = true, monotone = true;
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t count = visit_point_cloud(one, 1000, 17, [&](double x, double F) {
      worst = std::max(worst, std::abs(cdf(one, x, cfg) - F));
      increasing = increasing && x > last_x;
      monotone = monotone && F >= last_f;
      last_x = x;
      last_f = F;
    });
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool count_ok = count == point_cloud_size(1000, 17);
    parts.push_back(named("every streamed point matches cdf within 1e-10",
                          {"", worst <= 1e-10 && count_ok,
                           describe(count, " points, max |cdf(x) - F| = ", worst, ", ", secs, " s")}));
    parts.push_back(named("cloud strictly increasing in x, nondecreasing in F",
                          {"", increasing && monotone, ""}));
    bool refused = false;
    try {
      (void)point_cloud(one, 1000, 17);
    } catch (const ResourceError&) {
      refused = true;
    }
    parts.push_back(named("materialisation above the 5e6-point cap is refused", {"", refused, ""}));
    // Largest materialised cloud under the cap, for asymmetric p as well.
    for (double p : {0.5, 1.0, 2.0}) {
      const PSingularParams ps(p);
      const PointCloud cloud = point_cloud(ps, 1000, 11);
      double w = 0.0;
      for (const auto& pt : cloud.points) w = std::max(w, std::abs(cdf(ps, pt.x, cfg) - pt.F));
      parts.push_back(named(describe("materialised (1000, 11), p = ", p),
                            {"", w <= 1e-10 && cloud.points.size() <= kDefaultCloudCap,
                             describe(cloud.points.size(), " points, max error ", w)}));
    }
    return detail::all_of(parts);
  }});

  list.push_back({10, "mean residual life is not monotone, yet decreases on gaps", [] {
    std::vector<CheckResult> parts;
    for (double p : {0.5, 1.0, 3.0}) {
      const PSingularParams ps(p);
      // Largest rise m(y) - min_{x < y} m(x) over a grid augmented with gap endpoints.
      double best_rise = -1.0, best_x = 0.0, best_y = 0.0;
      double min_m = 1e300, min_x = 0.0;
      for (double t : augmented_grid(1000, 4)) {
        const double m = mrl(ps, t).value;
        if (m - min_m > best_rise) {
          best_rise = m - min_m;
          best_x = min_x;
          best_y = t;
        }
        if (m < min_m) {
          min_m = m;
          min_x = t;
        }
      }
      parts.push_back(named(describe("not DMRL, p = ", p),
                            {"", best_rise > 1e-6,
                             describe("m(", best_y, ") - m(", best_x, ") = ", best_rise)}));
      parts.push_back(named(describe("strict decrease on gaps, p = ", p),
                            check_gap_descent(ps, EvalConfig{}, 6, 16, 2e-10)));
    }
    return detail::all_of(parts);
  }});

  return list;
}

}  // namespace singular_mrl
