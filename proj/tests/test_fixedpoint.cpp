#include <gtest/gtest.h>

#include <cmath>

#include "singular_mrl/singular_mrl.hpp"

using namespace singular_mrl;

TEST(FixedPoint, ClosedForm) {
  EXPECT_NEAR(fixed_point_closed_form(PSingularParams(1.0)), 5.0 / 12.0, 1e-16);
  EXPECT_NEAR(fixed_point_closed_form(PSingularParams(2.0)), 0.4, 1e-16);
  EXPECT_NEAR(fixed_point_closed_form(PSingularParams(1e9)), 0.375, 1e-9);
  EXPECT_NEAR(fixed_point_closed_form(PSingularParams(1e-9)), 0.5, 1e-9);
}

TEST(FixedPoint, Solve) {
  const FixedPointResult one = fixed_point_solve(PSingularParams(1.0));
  EXPECT_NEAR(one.x_star, 5.0 / 12.0, 1e-11);
  EXPECT_LE(std::abs(one.residual), 1e-12);
  EXPECT_EQ(one.sign_changes, 1u);
  EXPECT_LE(one.bracket.first, one.x_star);
  EXPECT_GE(one.bracket.second, one.x_star);
  EXPECT_NEAR(fixed_point_solve(PSingularParams(2.0)).x_star, 0.4, 1e-11);
}

TEST(FixedPoint, SmallPIsNotOneThird) {
  const FixedPointResult r = fixed_point_solve(PSingularParams(0.01), EvalConfig{}, 5000);
  EXPECT_NEAR(r.x_star, 1.0 / 6.0 + 4.05 / (12.0 * 1.02), 1e-11);
  EXPECT_GT(r.x_star, 0.49);
  EXPECT_EQ(r.sign_changes, 1u);
}

TEST(FixedPoint, SolverToleranceIsHonoured) {
  for (double tol : {1e-4, 1e-7, 1e-10}) {
    const PSingularParams ps(3.0);
    const FixedPointResult r = fixed_point_solve(ps, EvalConfig{tol});
    EXPECT_LE(std::abs(r.x_star - fixed_point_closed_form(ps)), tol);
  }
}

TEST(Uniqueness, Examples) {
  for (auto [p, n] : {std::pair{1.0, 1000}, {0.01, 5000}, {100.0, 1000}}) {
    const UniquenessReport r = verify_uniqueness(PSingularParams(p), n);
    EXPECT_EQ(r.sign_changes, 1u) << "p=" << p;
    EXPECT_TRUE(r.ok()) << "p=" << p;
    EXPECT_GT(r.min_excess_left, 0.0);
    EXPECT_LT(r.max_excess_right, 0.0);
    EXPECT_GT(r.points_evaluated, static_cast<std::size_t>(n));
  }
  EXPECT_THROW(verify_uniqueness(PSingularParams(1.0), 10), ParameterError);
}
