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

#include "ftfp/frlp.h"

#include <cmath>

#include "ftfp/errors.h"
#include "ftfp/instance_io.h"
#include "ftfp/poisson.h"

namespace ftfp {

void CheckFrlpConfig(const FrlpConfig& cfg) {
  if (cfg.r < 1) throw InputError("FRLP: r must be at least 1");
  if (cfg.n < 2) throw InputError("FRLP: grid size n must be at least 2");
}

FrlpTerms ComputeFrlpTerms(const FrlpConfig& cfg) {
  CheckFrlpConfig(cfg);
  const int n = cfg.n;
  const double r = cfg.r;
  FrlpTerms terms;
  terms.volume.resize(n - 1);
  for (int l = 1; l < n; ++l) terms.volume[l - 1] = 1.0 / GridGamma(l, n);
  terms.weight.resize(n);
  double prev = 0;
  for (int l = 1; l < n; ++l) {
    terms.weight[l - 1] = terms.volume[l - 1] - prev;
    prev = terms.volume[l - 1];
  }
  terms.weight[n - 1] = 1.0 - prev;

  const double scale = cfg.volume == VolumeModel::kScaled ? r : 1.0;
  terms.e1.assign(n - 1, std::vector<double>(n - 1));
  terms.e3.resize(n - 1);
  for (int k = 1; k < n; ++k) {
    const double gk = GridGamma(k, n);
    double h_prev = 0;
    for (int l = 1; l < n; ++l) {
      const double h = ExpectedUsefulOpens(gk * terms.volume[l - 1] * scale, cfg.r);
      terms.e1[k - 1][l - 1] = h - h_prev;
      h_prev = h;
    }
    terms.e3[k - 1] = ExpectedShortfall(gk * r, cfg.r);
  }
  return terms;
}

LinearProgram BuildFrlp(const FrlpConfig& cfg, FrlpRows* rows_out) {
  const FrlpTerms terms = ComputeFrlpTerms(cfg);
  const int n = cfg.n;
  const double r = cfg.r;
  const bool averaged = cfg.backup == BackupBound::kAveraged ||
                        (cfg.backup == BackupBound::kAuto && cfg.r == 1);

  LinearProgram lp(Sense::kMaximize);
  lp.AddVariable(1.0, LinearProgram::kFree);  // lambda
  lp.AddVariable();                           // f
  lp.AddVariable();                           // c
  for (int l = 1; l <= n; ++l) lp.AddVariable();

  FrlpRows rows;
  rows.first_execution = lp.num_rows();
  for (int k = 1; k < n; ++k) {
    const double gk = GridGamma(k, n);
    std::vector<std::pair<int, double>> t;
    t.reserve(n + 3);
    t.emplace_back(FrlpLayout::kLambda, 1.0);
    t.emplace_back(FrlpLayout::kF, -gk);
    for (int l = 1; l < n; ++l) t.emplace_back(FrlpLayout::Level(l), -terms.e1[k - 1][l - 1] / r);
    const double e3 = terms.e3[k - 1] / r;
    if (averaged) {
      t.emplace_back(FrlpLayout::kC, -e3 * gk);
      t.emplace_back(FrlpLayout::Level(k + 1), -e3 * (3.0 - gk));
    } else {
      t.emplace_back(FrlpLayout::Level(k + 1), -3.0 * e3);
    }
    lp.AddRow(t, Relation::kLessEqual, 0.0);
  }
  if (cfg.uniform) {
    rows.jms = lp.AddRow({{FrlpLayout::kLambda, 1.0}, {FrlpLayout::kF, -1.11}, {FrlpLayout::kC, -1.78}},
                         Relation::kLessEqual, 0.0);
  }
  {
    std::vector<std::pair<int, double>> t;
    for (int l = 1; l <= n; ++l) t.emplace_back(FrlpLayout::Level(l), terms.weight[l - 1]);
    t.emplace_back(FrlpLayout::kC, -1.0);
    rows.distance_balance = lp.AddRow(t, Relation::kEqual, 0.0);
  }
  rows.first_ordering = lp.num_rows();
  for (int l = 1; l < n; ++l) {
    lp.AddRow({{FrlpLayout::Level(l), 1.0}, {FrlpLayout::Level(l + 1), -1.0}},
              Relation::kLessEqual, 0.0);
  }
  lp.AddRow({{FrlpLayout::Level(n), 1.0}}, Relation::kLessEqual, 1.0);
  rows.cost_split = lp.AddRow({{FrlpLayout::kF, 1.0}, {FrlpLayout::kC, 1.0}}, Relation::kEqual, 1.0);
  if (rows_out != nullptr) *rows_out = rows;
  return lp;
}

FrlpResult ComputeLambda(const FrlpConfig& cfg) {
  FrlpRows rows;
  const LinearProgram lp = BuildFrlp(cfg, &rows);
  const LpSolution sol = SolveLp(lp);
  if (!sol.optimal()) {
    throw NumericalError(std::string("FRLP solve failed: ") + LpStatusName(sol.status));
  }
  FrlpResult result;
  result.config = cfg;
  result.lambda = sol.values[FrlpLayout::kLambda];
  result.f = sol.values[FrlpLayout::kF];
  result.c = sol.values[FrlpLayout::kC];
  result.iterations = sol.iterations;
  const int n = cfg.n;
  for (int l = 1; l <= n; ++l) {
    result.levels.push_back(sol.values[FrlpLayout::Level(l)]);
    result.cumulative_volume.push_back(l < n ? 1.0 / GridGamma(l, n) : 1.0);
  }
  for (int k = 1; k < n; ++k) {
    const double activity = lp.RowActivity(rows.first_execution + k - 1, sol.values);
    if (std::abs(activity) <= 1e-9) result.tight_executions.push_back(k);
  }
  return result;
}

std::string FrlpProfileCsv(const FrlpResult& result) {
  std::string out = "cumulative_volume,distance\n";
  for (size_t l = 0; l < result.levels.size(); ++l) {
    out += FormatReal(result.cumulative_volume[l]) + "," + FormatReal(result.levels[l]) + "\n";
  }
  return out;
}

}  // namespace ftfp
