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
#include "ftfp/harness.h"
#include "ftfp/relaxation.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace ftfp {
namespace {

using ::ftfp::testing::RandomInstance;

TEST(OracleTest, Singleton) {
  Instance inst({1}, {1}, {0});
  OracleResult res = BruteForceOptimal(inst);
  EXPECT_DOUBLE_EQ(res.cost, 1.0);
  EXPECT_EQ(res.open_count, (std::vector<int>{1}));
}

TEST(OracleTest, OpensTwoCopiesOfTheNearLocation) {
  Instance inst({1, 1}, {2}, {0, 10});
  OracleResult res = BruteForceOptimal(inst);
  EXPECT_DOUBLE_EQ(res.cost, 2.0);
  EXPECT_EQ(res.open_count, (std::vector<int>{2, 0}));
  EXPECT_FALSE(CheckIntegralFeasibility(inst, res.solution).has_value());
}

TEST(OracleTest, GuardsAgainstHugeSearch) {
  std::vector<double> f(12, 1.0), d(12, 1.0);
  Instance big(f, {5}, d);
  EXPECT_THROW(BruteForceOptimal(big, -1, 1000), InputError);
}

TEST(OracleTest, NeverBelowLpValue) {
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    Instance inst = RandomInstance(seed, 3, 3, 1, 2);
    const double lp = SolveFtfpRelaxation(inst).total();
    OracleResult res = BruteForceOptimal(inst);
    EXPECT_GE(res.cost, lp - 1e-9) << seed;
    EXPECT_FALSE(CheckIntegralFeasibility(inst, res.solution).has_value()) << seed;
  }
}

TEST(MonteCarloTest, SingleRunOnSmallestGrid) {
  Instance inst = RandomInstance(4, 4, 5, 1, 3);
  MonteCarloOptions opts;
  opts.grid = 2;
  opts.trials = 1;
  ExperimentReport rep = MonteCarloEval(inst, opts);
  EXPECT_EQ(rep.total_runs, 1);
  EXPECT_DOUBLE_EQ(rep.best_gamma, 2.0);
  EXPECT_GE(rep.ratio, 1.0 - 1e-9);
  EXPECT_FALSE(CheckIntegralFeasibility(inst, rep.best).has_value());
}

TEST(MonteCarloTest, CsvIsSeedStable) {
  Instance inst = RandomInstance(6, 5, 6, 1, 3);
  MonteCarloOptions opts;
  opts.grid = 10;
  opts.trials = 2;
  opts.seed = 42;
  ExperimentReport a = MonteCarloEval(inst, opts, "x");
  ExperimentReport b = MonteCarloEval(inst, opts, "x");
  EXPECT_EQ(ReportSummaryCsv(a), ReportSummaryCsv(b));
  EXPECT_EQ(ReportGammaCsv(a), ReportGammaCsv(b));
}

TEST(MonteCarloTest, DemandReductionStaysFeasible) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    Instance inst = RandomInstance(seed, 4, 5, 2, 4);
    MonteCarloOptions opts;
    opts.grid = 6;
    opts.reduce_rbar = 1;
    ExperimentReport rep = MonteCarloEval(inst, opts);
    EXPECT_FALSE(CheckIntegralFeasibility(inst, rep.best).has_value()) << seed;
    EXPECT_GE(rep.ratio, 1.0 - 1e-9);
  }
}

TEST(DrSuiteTest, FixedAndRandomVectorsPass) {
  DrSuiteOptions opts;
  opts.samples = 20000;
  opts.fixed = {{0.5, 0.5}, {0.3, 0.3, 0.4}};
  DrSuiteReport rep = DrPropertySuite(opts);
  EXPECT_EQ(rep.cases.size(), opts.sizes.size() * opts.vectors_per_size + 2);
  for (const DrCaseResult& c : rep.cases) EXPECT_TRUE(c.ok()) << c.message;
  EXPECT_TRUE(rep.ok());
  EXPECT_NE(rep.Csv().find('\n'), std::string::npos);
}

TEST(DrSuiteTest, HalfHalfCase) {
  DrCaseResult c = DrCheckVector({0.5, 0.5}, 100000, 4, 3.0, 11);
  EXPECT_TRUE(c.ok()) << c.message;
  EXPECT_TRUE(c.sum_ok);
}

}  // namespace
}  // namespace ftfp
