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

#ifndef FTFP_INTEGRAL_SOLUTION_H_
#define FTFP_INTEGRAL_SOLUTION_H_

#include <optional>
#include <string>
#include <vector>

#include "ftfp/instance.h"

namespace ftfp {

struct Connection {
  int facility = 0;
  int copies = 0;
  friend bool operator==(const Connection&, const Connection&) = default;
};

// Open copy counts per facility plus, per client, the multiset of copies it
// is connected to.
struct IntegralSolution {
  std::vector<int> open_count;
  std::vector<std::vector<Connection>> connections;
  double cost = 0;
  // Copies opened by the repair step (zero for a plain rounding outcome).
  int repaired_copies = 0;
};

// sum_i f_i open_i + sum_j sum_conn c_ij copies.
double SolutionCost(const Instance& inst, const IntegralSolution& sol);

// Independent checker: every client gets exactly r_j copies, no location
// serves a client more copies than it has open, indices are in range, and
// the stored cost matches. Returns a description of the first problem.
std::optional<std::string> CheckIntegralFeasibility(const Instance& inst,
                                                    const IntegralSolution& sol,
                                                    double cost_tolerance = 1e-9);

// Text format: "open <facility> <count>" lines (count > 0), then
// "conn <client> <facility> <copies>" lines, then "cost <real>".
std::string FormatSolution(const IntegralSolution& sol);

// Maps a solution on a split instance (facility rows are copies of the
// original locations given by origin[row]) back to the original instance.
IntegralSolution ProjectToLocations(const IntegralSolution& sol, const std::vector<int>& origin,
                                    const Instance& original);

}  // namespace ftfp

#endif  // FTFP_INTEGRAL_SOLUTION_H_
