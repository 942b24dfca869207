#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "singular_mrl/singular_mrl.hpp"

using namespace singular_mrl;

TEST(Mrl, Examples) {
  const PSingularParams one(1.0), two(2.0);
  EXPECT_NEAR(mrl(one, 0.0).value, 0.5, 1e-10);
  EXPECT_NEAR(mrl(one, 20.0 / 81.0).value, 29.0 / 66.0, 1e-10);
  EXPECT_NEAR(mrl(one, 0.5).value, 1.0 / 3.0, 1e-10);
  EXPECT_NEAR(mrl(two, ratio_rounded_up(1.0, 3.0)).value, 7.0 / 15.0, 1e-10);
  EXPECT_EQ(mrl(two, 1.0).value, 0.0);
  EXPECT_THROW(mrl(one, -1e-9), DomainError);
}

TEST(Mrl, OneThirdClosedForm) {
  EXPECT_NEAR(mrl_at_one_third(PSingularParams(1.0)), 0.5, 1e-16);
  EXPECT_NEAR(mrl_at_one_third(PSingularParams(2.0)), 7.0 / 15.0, 1e-16);
  for (double p : {1e-6, 0.01, 1.0, 100.0, 1e6}) {
    EXPECT_GT(mrl_at_one_third(PSingularParams(p)), 1.0 / 3.0);
    EXPECT_NEAR(mrl(PSingularParams(p), ratio_rounded_up(1.0, 3.0)).value,
                mrl_at_one_third(PSingularParams(p)), 1e-10);
  }
}

TEST(Mrl, ExtremeParametersNearOneThird) {
  // The double nearest 1/3 lies just below it, where F is far from its plateau
  // value because the Holder exponent is tiny.
  const PSingularParams ps(0.01);
  EXPECT_NEAR(mrl(ps, ratio_rounded_up(1.0, 3.0)).value, mrl_at_one_third(ps), 1e-10);
  EXPECT_LT(1.0 / 3.0, ratio_rounded_up(1.0, 3.0));
  EXPECT_GT(std::abs(mrl(ps, 1.0 / 3.0).value - mrl_at_one_third(ps)), 0.1);
}

TEST(Mrl, ErrorBoundAndRange) {
  for (double p : {0.05, 1.0, 20.0}) {
    const PSingularParams ps(p);
    for (double x : {0.01, 0.2, 0.45, 0.7, 0.93}) {
      const MrlValue m = mrl(ps, x, EvalConfig{1e-6});
      const double tight = mrl(ps, x, EvalConfig{1e-13}).value;
      EXPECT_LE(std::abs(m.value - tight), m.error_bound + 1e-12);
      EXPECT_GE(m.value, 0.0);
      EXPECT_LE(m.value, 1.0 - x);
    }
  }
}

TEST(Mrl, MatchesMonteCarlo) {
  for (double p : {0.5, 2.0}) {
    const PSingularParams ps(p);
    oracle::Sampler draw(p, 99);
    const double xs[] = {0.1, 0.3, 0.75};
    double sum[3] = {}, sum2[3] = {};
    int hits[3] = {};
    for (int i = 0; i < 400000; ++i) {
      const double v = draw();
      for (int k = 0; k < 3; ++k) {
        if (v > xs[k]) {
          sum[k] += v - xs[k];
          sum2[k] += (v - xs[k]) * (v - xs[k]);
          ++hits[k];
        }
      }
    }
    for (int k = 0; k < 3; ++k) {
      const double m = sum[k] / hits[k];
      const double se = std::sqrt((sum2[k] / hits[k] - m * m) / hits[k]);
      EXPECT_NEAR(mrl(ps, xs[k]).value, m, 4.0 * se) << "p=" << p << " x=" << xs[k];
    }
  }
}

TEST(Mrl, SlopeMinusOneOnGap) {
  const PSingularParams ps(1.0);
  const double a = ratio_rounded_up(1.0, 3.0);
  for (double t : {0.01, 0.1, 0.2, 0.3}) {
    EXPECT_NEAR(mrl(ps, a + t).value, mrl(ps, a).value - t, 1e-10);
  }
}

TEST(Mrl, NotMonotoneAcrossCantorPoints) {
  const PSingularParams ps(1.0);
  EXPECT_LT(mrl(ps, ratio_rounded_down(2.0, 9.0)).value + 1e-6,
            mrl(ps, ratio_rounded_up(1.0, 3.0)).value);
}

TEST(Gmrl, Examples) {
  const PSingularParams one(1.0);
  EXPECT_NEAR(gmrl(one, 5.0 / 12.0).value, 1.0, 1e-9);
  EXPECT_EQ(gmrl(one, 1.0).value, 0.0);
  EXPECT_NEAR(gmrl(one, 0.5).value, 2.0 / 3.0, 1e-9);
  EXPECT_THROW(gmrl(one, 0.0), DomainError);
}

TEST(TailIntegral, MatchesSurvivalTimesMrl) {
  const PSingularParams ps(3.0);
  for (double x : {0.05, 0.4, 0.8}) {
    EXPECT_NEAR(tail_integral(ps, x).value, survival(ps, x) * mrl(ps, x).value, 1e-11);
  }
}

TEST(InvariantSuite, MrlChecks) {
  const PSingularParams ps(0.6);
  const EvalConfig cfg;
  EXPECT_TRUE(check_mrl_range(ps, cfg, 1).passed);
  EXPECT_TRUE(check_gap_descent(ps, cfg, 4, 6, 2e-12).passed);
  EXPECT_TRUE(check_mrl_boundary(ps, cfg).passed);
  EXPECT_TRUE(check_sandwich_inequalities(ps, cfg, 3, 300).passed);
}
