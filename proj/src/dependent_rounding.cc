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

#include "ftfp/dependent_rounding.h"

#include <algorithm>

#include "ftfp/errors.h"

namespace ftfp {
namespace {

double Snap(double v) {
  if (v < kRoundingSnap) return 0.0;
  if (v > 1.0 - kRoundingSnap) return 1.0;
  return v;
}

bool Fractional(double v) { return v > 0.0 && v < 1.0; }

template <typename At>
void RoundSequence(int count, At at, Rng& rng) {
  for (int k = 0; k < count; ++k) {
    double& w = at(k);
    if (w < -kRoundingSnap || w > 1.0 + kRoundingSnap) {
      throw InputError("dependent rounding weight outside [0, 1]");
    }
    w = Snap(w);
  }
  int carry = -1;  // position of the pending fractional entry
  for (int k = 0; k < count; ++k) {
    double& b = at(k);
    if (!Fractional(b)) continue;
    if (carry < 0) {
      carry = k;
      continue;
    }
    double& a = at(carry);
    const double alpha = std::min(1.0 - a, b);
    const double beta = std::min(a, 1.0 - b);
    if (rng.Uniform() * (alpha + beta) < beta) {
      a += alpha;
      b -= alpha;
    } else {
      a -= beta;
      b += beta;
    }
    a = Snap(a);
    b = Snap(b);
    if (!Fractional(a)) {
      carry = Fractional(b) ? k : -1;
    }
    // Otherwise b became integral and a stays pending.
  }
  if (carry >= 0) {
    double& a = at(carry);
    a = rng.Bernoulli(a) ? 1.0 : 0.0;
  }
}

}  // namespace

void DependentRound(std::span<double> weights, Rng& rng) {
  RoundSequence(static_cast<int>(weights.size()),
                [&](int k) -> double& { return weights[k]; }, rng);
}

void DependentRound(std::span<double> weights, std::span<const int> indices, Rng& rng) {
  RoundSequence(static_cast<int>(indices.size()),
                [&](int k) -> double& { return weights[indices[k]]; }, rng);
}

}  // namespace ftfp
