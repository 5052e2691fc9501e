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

#ifndef FTFP_FRLP_H_
#define FTFP_FRLP_H_

#include <string>
#include <vector>

#include "ftfp/linear_program.h"

namespace ftfp {

// How the level volumes enter the Poisson estimate of the expected number
// of opens per level. kNormalized evaluates h at gamma_k / gamma_l (levels
// measured in units of the client's total volume), which reproduces the
// published lambda tables. kScaled evaluates h at gamma_k * r / gamma_l.
enum class VolumeModel { kNormalized, kScaled };

// Estimate of the backup connection distance of execution k.
//   kThreeHop: 3 * c_{k+1}.
//   kAveraged: gamma_k * c + (3 - gamma_k) * c_{k+1}.
//   kAuto:     kAveraged for r = 1, kThreeHop otherwise.
enum class BackupBound { kAuto, kThreeHop, kAveraged };

struct FrlpConfig {
  int r = 1;
  int n = 1000;
  bool uniform = false;  // adds 1.11 f + 1.78 c >= lambda
  VolumeModel volume = VolumeModel::kNormalized;
  BackupBound backup = BackupBound::kAuto;
};

void CheckFrlpConfig(const FrlpConfig& cfg);

// gamma_l = 1 + 2 (n - l) / n.
inline double GridGamma(int l, int n) { return 1.0 + 2.0 * (n - l) / n; }

// Variable layout of the FRLP.
struct FrlpLayout {
  static constexpr int kLambda = 0;
  static constexpr int kF = 1;
  static constexpr int kC = 2;
  // Distance of level l, 1 <= l <= n.
  static constexpr int Level(int l) { return 2 + l; }
};

// Row order: the n-1 execution rows (k = 1..n-1), the optional JMS row, the
// volume-weighted distance row, the ordering rows c_l <= c_{l+1}, c_n <= 1,
// and f + c = 1.
struct FrlpRows {
  int first_execution = 0;
  int jms = -1;
  int distance_balance = 0;
  int first_ordering = 0;
  int cost_split = 0;
};

struct FrlpTerms {
  // e1[k-1][l-1] for 1 <= k < n, 1 <= l < n.
  std::vector<std::vector<double>> e1;
  // e3[k-1].
  std::vector<double> e3;
  // Cumulative normalized close-set volumes v_1..v_{n-1} (v_l = 1/gamma_l)
  // and level weights w_1..w_n.
  std::vector<double> volume;
  std::vector<double> weight;
};

FrlpTerms ComputeFrlpTerms(const FrlpConfig& cfg);
LinearProgram BuildFrlp(const FrlpConfig& cfg, FrlpRows* rows = nullptr);

struct FrlpResult {
  FrlpConfig config;
  double lambda = 0;
  double f = 0;
  double c = 0;
  std::vector<double> levels;             // c_1..c_n
  std::vector<double> cumulative_volume;  // right end of each level, last = 1
  std::vector<int> tight_executions;      // k with a binding execution row
  long iterations = 0;
};

FrlpResult ComputeLambda(const FrlpConfig& cfg);

// "cumulative_volume,distance" rows, one per level.
std::string FrlpProfileCsv(const FrlpResult& result);

}  // namespace ftfp

#endif  // FTFP_FRLP_H_
