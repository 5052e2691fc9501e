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

#ifndef FTFP_RELAXATION_H_
#define FTFP_RELAXATION_H_

#include <optional>
#include <string>
#include <vector>

#include "ftfp/instance.h"
#include "ftfp/integral_solution.h"
#include "ftfp/linear_program.h"

namespace ftfp {

// Variable layout of the FTFP relaxation: y_i first, then x_ij client-major.
struct FtfpLayout {
  int num_facilities;
  int y(int i) const { return i; }
  int x(int j, int i) const { return num_facilities + j * num_facilities + i; }
};

// min sum c_ij x_ij + sum f_i y_i  s.t.  sum_i x_ij >= r_j,  y_i - x_ij >= 0,
// x, y >= 0. Rows: the n covering rows, then the n*m coupling rows.
LinearProgram BuildFtfpLp(const Instance& inst);

struct FractionalSolution {
  int num_facilities = 0;
  int num_clients = 0;
  std::vector<double> y;
  std::vector<double> x;  // client-major
  bool complete = false;

  double facility_cost = 0;            // F*
  std::vector<double> client_cost;     // C*_j
  double connection_cost = 0;          // C*
  double total() const { return facility_cost + connection_cost; }

  double& X(int j, int i) { return x[static_cast<size_t>(j) * num_facilities + i]; }
  double X(int j, int i) const { return x[static_cast<size_t>(j) * num_facilities + i]; }
};

void RecomputeCosts(const Instance& inst, FractionalSolution& fs);

// Checks rows (2)-(4) against the instance requirements.
std::optional<std::string> CheckFractionalFeasibility(const Instance& inst,
                                                      const FractionalSolution& fs,
                                                      double tol = 1e-9);
// x_ij in {0, y_i} for every pair.
bool IsComplete(const FractionalSolution& fs, double tol = 1e-9);

// Reads (x, y) from an optimal solve of BuildFtfpLp(inst). Negative values
// within tolerance are clamped, x is capped by y, and every client's
// assignment is trimmed farthest-first so that sum_i x_ij = r_j exactly.
FractionalSolution ExtractFractionalSolution(const Instance& inst, const LpSolution& sol);

// Build, solve and extract in one call.
FractionalSolution SolveFtfpRelaxation(const Instance& inst);

// Facility splitting. Each facility is cut at the distinct positive x-values
// of its clients; copies keep the original cost and distance column, and a
// client with x_ij = v uses every copy below v in full.
struct CompleteSolution {
  Instance instance;
  FractionalSolution solution;
  std::vector<int> origin;  // copy row -> original facility
};
CompleteSolution MakeComplete(const Instance& inst, const FractionalSolution& fs);

// Splits a complete tight solution into an integral part
//   y^_i = max(floor(y_i - rbar), 0),  x^_ij = max(floor(x_ij - rbar), 0)
// and a fractional residual (x - x^, y - y^).
struct DemandSplit {
  int rbar = 1;
  std::vector<long> y_hat;
  std::vector<long> x_hat;   // client-major
  std::vector<int> r_hat;    // sum_i x^_ij
  Instance residual_instance;  // original data with requirements r._j
  FractionalSolution residual;
  IntegralSolution integral;   // (x^, y^) as a solution with requirements r^
};
DemandSplit ReduceDemands(const Instance& inst, const FractionalSolution& fs, int rbar);

// Integral solution for the original requirements: the integral part of
// the split plus a feasible integral solution of the residual instance.
IntegralSolution RecombineSolutions(const Instance& inst, const DemandSplit& split,
                                    const IntegralSolution& residual_integral);

}  // namespace ftfp

#endif  // FTFP_RELAXATION_H_
