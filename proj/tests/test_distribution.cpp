#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "singular_mrl/singular_mrl.hpp"

using namespace singular_mrl;

TEST(Params, RejectsNonPositiveOrNonFinite) {
  EXPECT_THROW(PSingularParams{0.0}, ParameterError);
  EXPECT_THROW(PSingularParams{-1.0}, ParameterError);
  EXPECT_THROW(PSingularParams{NAN}, ParameterError);
  EXPECT_THROW(PSingularParams{INFINITY}, ParameterError);
  EXPECT_NO_THROW(PSingularParams{1e-9});
}

TEST(Params, ConfigValidation) {
  EXPECT_THROW(EvalConfig{0.0}.validate(), ParameterError);
  EXPECT_THROW(EvalConfig{-1e-3}.validate(), ParameterError);
  EXPECT_NO_THROW(EvalConfig{}.validate());
}

TEST(Cdf, Examples) {
  const PSingularParams one(1.0), two(2.0);
  EXPECT_NEAR(cdf(one, ratio_rounded_up(1.0, 3.0)), 0.5, 1e-12);
  EXPECT_EQ(cdf(two, 0.0), 0.0);
  EXPECT_EQ(cdf(one, 1.0), 1.0);
  EXPECT_NEAR(cdf(one, 0.25), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(cdf(two, ratio_rounded_up(1.0, 9.0)), 1.0 / 9.0, 1e-12);
}

TEST(Cdf, OutsideUnitIntervalIsDomainError) {
  const PSingularParams one(1.0);
  EXPECT_THROW(cdf(one, -0.1), DomainError);
  EXPECT_THROW(cdf(one, 1.5), DomainError);
  EXPECT_THROW(cdf(one, NAN), DomainError);
}

TEST(Cdf, MatchesRationalOracle) {
  for (double p : {0.01, 0.3, 1.0, 3.0, 100.0}) {
    const PSingularParams ps(p);
    // Dyadic x, so the double is the exact rational a / 2^k.
    for (std::int64_t a = 1; a < 1024; a += 7) {
      const double x = static_cast<double>(a) / 1024.0;
      const Estimate e = cdf_estimate(ps, x, EvalConfig{1e-13});
      const long double ref = oracle::cdf_rational(p, a, 1024);
      EXPECT_NEAR(e.value, static_cast<double>(ref), 2e-13) << "p=" << p << " x=" << x;
      EXPECT_LE(std::abs(e.value - static_cast<double>(ref)), e.error_bound + 1e-15);
    }
  }
}

TEST(Cdf, ErrorBoundHoldsAtLooseTolerance) {
  const PSingularParams ps(0.7);
  for (std::int64_t a = 1; a < 4096; a += 37) {
    const double x = static_cast<double>(a) / 4096.0;
    const Estimate e = cdf_estimate(ps, x, EvalConfig{1e-3});
    EXPECT_LE(std::abs(e.value - static_cast<double>(oracle::cdf_rational(0.7, a, 4096))),
              e.error_bound);
    EXPECT_LE(e.error_bound, 1e-3);
  }
}

TEST(Survival, Examples) {
  EXPECT_NEAR(survival(PSingularParams(1.0), 0.5), 0.5, 1e-15);
  EXPECT_EQ(survival(PSingularParams(3.0), 1.0), 0.0);
  EXPECT_NEAR(survival(PSingularParams(2.0), ratio_rounded_up(1.0, 3.0)), 2.0 / 3.0, 1e-15);
}

TEST(Sample, MeanAndSupport) {
  for (double p : {1.0, 2.0}) {
    const PSingularParams ps(p);
    const auto xs = sample(ps, 42, 1'000'000);
    double s = 0.0, s2 = 0.0;
    for (double x : xs) {
      ASSERT_GE(x, 0.0);
      ASSERT_LE(x, 1.0);
      s += x;
      s2 += x * x;
    }
    const double n = static_cast<double>(xs.size());
    const double m = s / n, sd = std::sqrt(s2 / n - m * m);
    EXPECT_NEAR(m, mean(ps), 3.0 * sd / 1000.0);
  }
}

TEST(Sample, DeterministicAndValidated) {
  const PSingularParams ps(1.5);
  EXPECT_EQ(sample(ps, 7, 100), sample(ps, 7, 100));
  EXPECT_NE(sample(ps, 7, 100), sample(ps, 8, 100));
  EXPECT_THROW(sample(ps, 7, 0), ParameterError);
}

TEST(Sample, NoDrawsInsideFirstGaps) {
  const PSingularParams ps(0.8);
  for (double x : sample(ps, 3, 100000)) {
    EXPECT_FALSE(x > 1.0 / 3.0 + 1e-15 && x < 2.0 / 3.0 - 1e-15);
    EXPECT_FALSE(x > 1.0 / 9.0 + 1e-15 && x < 2.0 / 9.0 - 1e-15);
  }
}

TEST(Sample, AgreesWithIndependentSampler) {
  const double p = 0.4;
  const PSingularParams ps(p);
  oracle::Sampler ref(p, 11);
  std::vector<double> a = sample(ps, 5, 200000), b(200000);
  for (double& v : b) v = ref();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  // Two-sample Kolmogorov-Smirnov distance at the common quantiles.
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); i += 97) {
    const auto j = std::upper_bound(b.begin(), b.end(), a[i]) - b.begin();
    d = std::max(d, std::abs(static_cast<double>(i + 1) - static_cast<double>(j)) / a.size());
  }
  EXPECT_LT(d, 0.01);
}

TEST(PointCloud, InitialConfiguration) {
  const PointCloud c = point_cloud(PSingularParams(1.0), 2, 0);
  ASSERT_EQ(c.points.size(), 4u);
  EXPECT_EQ(c.points[0], (CloudPoint{0.0, 0.0}));
  EXPECT_NEAR(c.points[1].x, 1.0 / 3.0, 1e-15);
  EXPECT_EQ(c.points[1].F, 0.5);
  EXPECT_NEAR(c.points[2].x, 2.0 / 3.0, 1e-15);
  EXPECT_EQ(c.points[2].F, 0.5);
  EXPECT_EQ(c.points[3], (CloudPoint{1.0, 1.0}));
}

TEST(PointCloud, SizeMonotoneAndExact) {
  for (double p : {0.3, 1.0, 4.0}) {
    const PSingularParams ps(p);
    const PointCloud c = point_cloud(ps, 50, 8);
    EXPECT_EQ(c.points.size(), point_cloud_size(50, 8));
    for (std::size_t i = 1; i < c.points.size(); ++i) {
      ASSERT_LT(c.points[i - 1].x, c.points[i].x);
      ASSERT_LE(c.points[i - 1].F, c.points[i].F);
    }
    for (const auto& pt : c.points) ASSERT_NEAR(cdf(ps, pt.x), pt.F, 1e-12);
  }
}

TEST(PointCloud, StreamingMatchesMaterialised) {
  const PSingularParams ps(2.5);
  const PointCloud c = point_cloud(ps, 10, 6);
  std::vector<CloudPoint> streamed;
  const std::size_t n =
      visit_point_cloud(ps, 10, 6, [&](double x, double F) { streamed.push_back({x, F}); });
  EXPECT_EQ(n, streamed.size());
  EXPECT_EQ(streamed, c.points);
}

TEST(PointCloud, Limits) {
  const PSingularParams ps(1.0);
  EXPECT_THROW(point_cloud(ps, 1000, 17), ResourceError);
  EXPECT_THROW(point_cloud(ps, 10, 5, 100), ResourceError);
  EXPECT_THROW(point_cloud(ps, 0, 3), ParameterError);
  EXPECT_THROW(point_cloud(ps, 10, -1), ParameterError);
  EXPECT_THROW(point_cloud(ps, 10, kMaxCloudIterations + 1), ParameterError);
  EXPECT_EQ(point_cloud_size(1000, 17), 262'143'002u);
}

TEST(CantorGaps, StructureAndRounding) {
  const auto gaps = cantor_gaps(4);
  ASSERT_EQ(gaps.size(), 15u);
  for (std::size_t i = 1; i < gaps.size(); ++i) EXPECT_LT(gaps[i - 1].upper, gaps[i].lower);
  for (const Gap& g : gaps) {
    const double a = static_cast<double>(g.numerator) / static_cast<double>(g.denominator);
    EXPECT_GE(g.lower, a);
    EXPECT_NEAR(g.upper - g.lower, 1.0 / static_cast<double>(g.denominator), 1e-15);
  }
  EXPECT_THROW(cantor_gaps(34), ParameterError);
}
