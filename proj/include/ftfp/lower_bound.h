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

#ifndef FTFP_LOWER_BOUND_H_
#define FTFP_LOWER_BOUND_H_

namespace ftfp {

// Parameters of the Set Cover reduction bound: facility-cost parameter gamma
// and partial-cover constant c in (0, 1).
struct BoundParams {
  double gamma = 0.278465;
  double c = 1.0 - 1e-9;
};

// (gamma beta + 1 + exp(-beta / c)) / (1 + gamma): the ratio forced on an
// algorithm that opens beta k sets in an iteration where the covered
// fraction is at most 1 - exp(-beta / c).
double RatioAtBeta(const BoundParams& b, double beta);

// Minimizer of RatioAtBeta over beta: c ln(1 / (c gamma)).
double WorstBeta(const BoundParams& b);

// (1 + c gamma)/(1 + gamma) + (c gamma / (1 + gamma)) ln(1 / (c gamma)).
// Requires gamma > 0, 0 < c < 1 and c gamma < 1.
double FtflLowerBound(const BoundParams& b);

struct OptimizedBound {
  double gamma = 0;
  double bound = 0;
  double beta = 0;
};

// Maximizes FtflLowerBound over gamma for the given c.
OptimizedBound OptimizeBound(double c = 1.0 - 1e-9);

}  // namespace ftfp

#endif  // FTFP_LOWER_BOUND_H_
