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

#ifndef FTFP_LINEAR_PROGRAM_H_
#define FTFP_LINEAR_PROGRAM_H_

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace ftfp {

enum class Sense { kMinimize, kMaximize };
enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct LpRow {
  std::vector<int> index;
  std::vector<double> value;
  Relation relation = Relation::kLessEqual;
  double rhs = 0;
};

// min/max c^T x subject to sparse rows and per-variable lower bounds
// (default 0, -infinity for a free variable). No upper bounds: express them
// as rows.
class LinearProgram {
 public:
  static constexpr double kFree = -std::numeric_limits<double>::infinity();

  explicit LinearProgram(Sense sense = Sense::kMinimize) : sense_(sense) {}

  int AddVariable(double objective = 0, double lower_bound = 0);
  void SetObjective(int var, double coef) { objective_.at(var) = coef; }
  // Duplicate indices within a row are summed.
  int AddRow(const std::vector<std::pair<int, double>>& terms, Relation relation, double rhs);

  Sense sense() const { return sense_; }
  int num_variables() const { return static_cast<int>(objective_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<double>& objective() const { return objective_; }
  const std::vector<double>& lower_bounds() const { return lower_; }
  const std::vector<LpRow>& rows() const { return rows_; }
  const LpRow& row(int r) const { return rows_[r]; }
  long num_nonzeros() const;

  // Throws InputError on out-of-range indices or non-finite coefficients.
  void Validate() const;

  // Debug dump: an objective line, then one line per row
  //   min: 1 x0 + 2 x1
  //   r0: 1 x0 + -1 x1 >= 3
  std::string DebugString() const;

  double Evaluate(const std::vector<double>& x) const;
  double RowActivity(int r, const std::vector<double>& x) const;

 private:
  Sense sense_;
  std::vector<double> objective_;
  std::vector<double> lower_;
  std::vector<LpRow> rows_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kStalled };
const char* LpStatusName(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kStalled;
  std::vector<double> values;
  double objective = 0;
  // One per row, sign convention of the original sense: for a minimization
  // a >= row has a nonnegative dual, a <= row a nonpositive one.
  std::vector<double> duals;
  long iterations = 0;
  double max_primal_residual = 0;
  bool optimal() const { return status == LpStatus::kOptimal; }
};

struct SimplexOptions {
  double tol_feas = 1e-9;
  double tol_optimality = 1e-10;
  double tol_pivot = 1e-11;
  // 0 picks a size-dependent bound.
  long max_iterations = 0;
  // Consecutive degenerate pivots before switching to Bland's rule.
  int degenerate_run_before_bland = 25;
};

// Dense two-phase primal simplex. Deterministic for a given LinearProgram.
LpSolution SolveLp(const LinearProgram& lp, const SimplexOptions& options = {});

// Max relative violation of the rows and lower bounds by x.
double MaxPrimalResidual(const LinearProgram& lp, const std::vector<double>& x);

}  // namespace ftfp

#endif  // FTFP_LINEAR_PROGRAM_H_
