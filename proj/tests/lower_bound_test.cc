// Copyright 2026 The FTFP Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "ftfp/errors.h"
#include "ftfp/lower_bound.h"
#include "gtest/gtest.h"

namespace ftfp {
namespace {

TEST(FtflLowerBoundTest, PublishedChoiceOfGamma) {
  EXPECT_GE(FtflLowerBound({0.278465, 1 - 1e-9}), 1.27846);
}

TEST(FtflLowerBoundTest, ClosedFormAndInnerMinimum) {
  const BoundParams b{0.4, 0.7};
  const double cg = b.c * b.gamma;
  EXPECT_NEAR(FtflLowerBound(b), (1 + cg) / (1 + b.gamma) + cg / (1 + b.gamma) * std::log(1 / cg), 1e-15);
  // The bound is the minimum over beta of the per-iteration ratio.
  const double beta = WorstBeta(b);
  EXPECT_NEAR(beta, b.c * std::log(1 / cg), 1e-15);
  EXPECT_NEAR(RatioAtBeta(b, beta), FtflLowerBound(b), 1e-12);
  for (double d : {-0.3, -0.01, 0.01, 0.3}) EXPECT_GT(RatioAtBeta(b, beta + d), FtflLowerBound(b));
}

TEST(FtflLowerBoundTest, SmallCIsWeaker) {
  const double near_one = FtflLowerBound({0.278465, 1 - 1e-9});
  double prev = 0;
  for (double c : {1e-6, 1e-3, 0.1, 0.5, 0.9}) {
    const double v = FtflLowerBound({0.278465, c});
    EXPECT_LT(v, near_one);
    EXPECT_GT(v, prev);
    prev = v;
  }
  EXPECT_NEAR(FtflLowerBound({0.278465, 1e-12}), 1 / (1 + 0.278465), 1e-9);
}

TEST(FtflLowerBoundTest, RejectsInvalid) {
  EXPECT_THROW(FtflLowerBound({0.0, 0.5}), InputError);
  EXPECT_THROW(FtflLowerBound({0.5, 1.0}), InputError);
  EXPECT_THROW(FtflLowerBound({2.5, 0.5}), InputError);  // c gamma >= 1
}

TEST(OptimizeBoundTest, OptimumNearPublishedGamma) {
  const OptimizedBound ob = OptimizeBound();
  EXPECT_NEAR(ob.gamma, 0.2785, 0.001);
  EXPECT_GE(ob.bound, 1.2784);
  EXPECT_LE(ob.bound, 1.2786);
  // At c = 1 the optimum solves gamma = exp(-1 - gamma) with value 1 + gamma.
  EXPECT_NEAR(ob.gamma, std::exp(-1 - ob.gamma), 1e-6);
  EXPECT_NEAR(ob.bound, 1 + ob.gamma, 1e-6);
}

}  // namespace
}  // namespace ftfp
