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

#ifndef FTFP_GENERATORS_H_
#define FTFP_GENERATORS_H_

#include <cstdint>
#include <vector>

#include "ftfp/instance.h"

namespace ftfp {

struct EuclideanParams {
  int num_facilities = 10;
  int num_clients = 20;
  int min_requirement = 1;
  int max_requirement = 1;
  uint64_t seed = 1;
};

// Facility and client points uniform in the unit square, distances are
// Euclidean, opening costs uniform in [kMinCost, kMaxCost].
inline constexpr double kEuclideanMinCost = 0.5;
inline constexpr double kEuclideanMaxCost = 2.0;
Instance GenerateEuclidean(const EuclideanParams& params);

// Integrality-gap family I(n, l, f_c) with uniform requirement r. Every one
// of the n locations has r zero-distance copies (distinct facility rows, so
// each row is meant to open at most once). Clients are all choices of
// m = l / r locations; a client is at distance 1/|C| from the l copies of its
// own locations and 3/|C| from everything else. Each row costs f_c / (n r).
struct GapInstanceParams {
  int n = 3;
  int l = 1;
  double fc = 1.0;
  int r = 1;
  double alpha = 1.0;  // only used by the analytic cost formula
};

inline constexpr long kMaxGapClients = 20000;

void CheckGapParams(const GapInstanceParams& p);
Instance GenerateGapInstance(const GapInstanceParams& params,
                             long max_clients = kMaxGapClients);
// Location a's copies occupy facility rows [a*r, (a+1)*r).
inline int GapFacilityRow(const GapInstanceParams& p, int location, int copy) {
  return location * p.r + copy;
}

// Set Cover reduction: clients are the ground elements, facilities are the
// sets (cost gamma*|X|/k) followed by r-1 zero-cost singleton copies per
// element. Element-to-set distance is 1 if contained, else 3; element-to-
// singleton distance is 0 for its own copies, else 2. Distances are then
// closed under shortest paths in the bipartite graph.
struct SetCoverInput {
  int ground_set_size = 0;
  std::vector<std::vector<int>> sets;
  int k = 1;
  int r = 2;
  double gamma = 1.0;
};

Instance GenerateSetCoverInstance(const SetCoverInput& sc);
// Facility row of the c-th singleton copy (0-based, c < r-1) of element x.
inline int SingletonRow(const SetCoverInput& sc, int element, int copy) {
  return static_cast<int>(sc.sets.size()) + element * (sc.r - 1) + copy;
}

}  // namespace ftfp

#endif  // FTFP_GENERATORS_H_
