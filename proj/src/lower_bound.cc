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

#include "ftfp/lower_bound.h"

#include <algorithm>
#include <cmath>

#include "ftfp/errors.h"
#include "ftfp/optimize.h"

namespace ftfp {
namespace {

void Check(const BoundParams& b) {
  if (!(b.gamma > 0)) throw InputError("bound: gamma must be positive");
  if (!(b.c > 0 && b.c < 1)) throw InputError("bound: c must lie in (0, 1)");
  if (!(b.c * b.gamma < 1)) throw InputError("bound: c * gamma must be below 1");
}

}  // namespace

double RatioAtBeta(const BoundParams& b, double beta) {
  return (b.gamma * beta + 1.0 + std::exp(-beta / b.c)) / (1.0 + b.gamma);
}

double WorstBeta(const BoundParams& b) {
  Check(b);
  return b.c * std::log(1.0 / (b.c * b.gamma));
}

double FtflLowerBound(const BoundParams& b) {
  Check(b);
  const double cg = b.c * b.gamma;
  return (1.0 + cg) / (1.0 + b.gamma) + cg / (1.0 + b.gamma) * std::log(1.0 / cg);
}

OptimizedBound OptimizeBound(double c) {
  if (!(c > 0 && c < 1)) throw InputError("bound: c must lie in (0, 1)");
  const double hi = std::min(1.0, 1.0 / c) * (1 - 1e-12);
  const double gamma = GoldenSectionMinimize(
      [&](double g) { return -FtflLowerBound({.gamma = g, .c = c}); }, 1e-9, hi, 1e-14);
  OptimizedBound out;
  out.gamma = gamma;
  out.bound = FtflLowerBound({.gamma = gamma, .c = c});
  out.beta = WorstBeta({.gamma = gamma, .c = c});
  return out;
}

}  // namespace ftfp
