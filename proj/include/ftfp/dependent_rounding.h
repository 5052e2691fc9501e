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

#ifndef FTFP_DEPENDENT_ROUNDING_H_
#define FTFP_DEPENDENT_ROUNDING_H_

#include <span>
#include <vector>

#include "ftfp/rng.h"

namespace ftfp {

// Values within this distance of 0 or 1 are treated as integral.
inline constexpr double kRoundingSnap = 1e-9;

// Dependent rounding in place. Fractional entries are paired in index
// order; each step moves mass between the pair so that one becomes integral
// while both keep their expectation. A last lone fractional entry is
// rounded up with probability equal to its value. Guarantees:
//   Pr[w_i -> 1] = w_i,
//   sum of outputs in {floor(sum w), ceil(sum w)},
//   negative correlation of the outputs.
// Throws InputError if some weight lies outside [0, 1].
void DependentRound(std::span<double> weights, Rng& rng);

// Same, restricted to weights[indices[0]], weights[indices[1]], ... in the
// given order; other entries are not touched.
void DependentRound(std::span<double> weights, std::span<const int> indices, Rng& rng);

}  // namespace ftfp

#endif  // FTFP_DEPENDENT_ROUNDING_H_
