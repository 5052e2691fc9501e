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

#ifndef FTFP_HARNESS_H_
#define FTFP_HARNESS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ftfp/instance.h"
#include "ftfp/integral_solution.h"
#include "ftfp/rounding.h"

namespace ftfp {

struct OracleResult {
  double cost = 0;
  std::vector<int> open_count;
  IntegralSolution solution;
  long nodes = 0;
};

// Exact optimum by enumerating every open-count vector with at most `cap`
// copies per location (cap < 0 means max_j r_j, which loses nothing: no
// client uses more than r_j copies of one location). Throws InputError when
// (cap + 1)^|F| exceeds `max_nodes`.
OracleResult BruteForceOptimal(const Instance& inst, int cap = -1, long max_nodes = 10'000'000);

struct MonteCarloOptions {
  int grid = 100;      // n of the gamma grid
  int trials = 1;      // runs per grid point
  uint64_t seed = 1;
  int reduce_rbar = 0;  // > 0: split off the integral part at this threshold first
};

struct ExperimentReport {
  std::string instance_id;
  double lp_value = 0;
  double best_cost = 0;
  double ratio = 0;
  int grid = 0;
  int trials = 0;
  uint64_t seed = 0;
  int reduce_rbar = 0;
  int total_runs = 0;
  int repaired_runs = 0;
  double best_gamma = 0;
  std::vector<GammaStats> per_gamma;
  IntegralSolution best;  // on the original facility locations
  double wall_seconds = 0;  // not part of the CSV, which must be seed-stable
};

// LP relaxation, facility splitting, optional demand reduction and
// Algorithm 1; the best solution is mapped back to the input locations.
ExperimentReport MonteCarloEval(const Instance& inst, const MonteCarloOptions& opts,
                                const std::string& instance_id = "instance");

// Summary CSV (one row) and per-gamma CSV.
std::string ReportSummaryCsv(const ExperimentReport& report);
std::string ReportGammaCsv(const ExperimentReport& report);

struct DrCaseResult {
  std::vector<double> weights;
  bool marginal_ok = true;
  bool sum_ok = true;
  bool correlation_ok = true;
  double worst_marginal_z = 0;
  double worst_correlation_excess = 0;  // in standard errors
  int attempts = 1;
  std::string message;
  bool ok() const { return marginal_ok && sum_ok && correlation_ok; }
};

struct DrSuiteReport {
  std::vector<DrCaseResult> cases;
  bool ok() const;
  std::string Csv() const;
};

struct DrSuiteOptions {
  std::vector<int> sizes = {2, 3, 5, 10};
  int vectors_per_size = 3;
  int samples = 100'000;
  int subsets_per_vector = 8;
  uint64_t seed = 1;
  double sigmas = 3.0;
  // Extra vectors to test as given (e.g. {0.5, 0.5}).
  std::vector<std::vector<double>> fixed;
};

// Marginals (|freq - w| within `sigmas` standard errors), exact sum
// preservation, and negative correlation of all-ones and all-zeros events
// on random subsets. A failing case is rerun once with a fresh stream and
// counts as failed only if both runs fail.
DrSuiteReport DrPropertySuite(const DrSuiteOptions& opts);
DrCaseResult DrCheckVector(const std::vector<double>& weights, int samples, int subsets, double sigmas,
                           uint64_t seed);

}  // namespace ftfp

#endif  // FTFP_HARNESS_H_
