#include <gtest/gtest.h>

#include "singular_mrl/singular_mrl.hpp"

using namespace singular_mrl;

class InvariantSuiteAt : public ::testing::TestWithParam<double> {};

TEST_P(InvariantSuiteAt, EveryCheckPasses) {
  for (const CheckResult& r : invariant_suite(PSingularParams(GetParam()), EvalConfig{1e-10})) {
    EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
  }
}

INSTANTIATE_TEST_SUITE_P(Family, InvariantSuiteAt, ::testing::Values(0.05, 1.0, 20.0));
