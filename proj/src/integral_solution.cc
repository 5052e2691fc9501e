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

#include "ftfp/integral_solution.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "ftfp/instance_io.h"

namespace ftfp {

double SolutionCost(const Instance& inst, const IntegralSolution& sol) {
  double cost = 0;
  for (int i = 0; i < inst.num_facilities(); ++i) cost += inst.facility_cost(i) * sol.open_count[i];
  for (int j = 0; j < inst.num_clients(); ++j) {
    for (const Connection& c : sol.connections[j]) cost += inst.distance(j, c.facility) * c.copies;
  }
  return cost;
}

std::optional<std::string> CheckIntegralFeasibility(const Instance& inst,
                                                    const IntegralSolution& sol,
                                                    double cost_tolerance) {
  const int nf = inst.num_facilities(), nc = inst.num_clients();
  if (static_cast<int>(sol.open_count.size()) != nf) return "open_count has wrong size";
  if (static_cast<int>(sol.connections.size()) != nc) return "connections has wrong size";
  for (int i = 0; i < nf; ++i) {
    if (sol.open_count[i] < 0) return "negative open count at facility " + std::to_string(i);
  }
  double facility_cost = 0, connection_cost = 0;
  for (int i = 0; i < nf; ++i) facility_cost += inst.facility_cost(i) * sol.open_count[i];
  for (int j = 0; j < nc; ++j) {
    std::map<int, long> used;
    long total = 0;
    for (const Connection& c : sol.connections[j]) {
      if (c.facility < 0 || c.facility >= nf) return "client " + std::to_string(j) + " uses unknown facility";
      if (c.copies <= 0) return "client " + std::to_string(j) + " has a non-positive connection";
      used[c.facility] += c.copies;
      total += c.copies;
      connection_cost += inst.distance(j, c.facility) * c.copies;
    }
    if (total != inst.requirement(j)) {
      return "client " + std::to_string(j) + " has " + std::to_string(total) + " copies, needs " +
             std::to_string(inst.requirement(j));
    }
    for (const auto& [i, k] : used) {
      if (k > sol.open_count[i]) {
        return "client " + std::to_string(j) + " uses " + std::to_string(k) + " copies of facility " +
               std::to_string(i) + " but only " + std::to_string(sol.open_count[i]) + " are open";
      }
    }
  }
  const double cost = facility_cost + connection_cost;
  if (std::abs(cost - sol.cost) > cost_tolerance * std::max(1.0, std::abs(cost))) {
    return "stored cost " + FormatReal(sol.cost) + " differs from recomputed " + FormatReal(cost);
  }
  return std::nullopt;
}

std::string FormatSolution(const IntegralSolution& sol) {
  std::string out;
  for (size_t i = 0; i < sol.open_count.size(); ++i) {
    if (sol.open_count[i] > 0) {
      out += "open " + std::to_string(i) + " " + std::to_string(sol.open_count[i]) + "\n";
    }
  }
  for (size_t j = 0; j < sol.connections.size(); ++j) {
    for (const Connection& c : sol.connections[j]) {
      out += "conn " + std::to_string(j) + " " + std::to_string(c.facility) + " " +
             std::to_string(c.copies) + "\n";
    }
  }
  out += "cost " + FormatReal(sol.cost) + "\n";
  return out;
}

IntegralSolution ProjectToLocations(const IntegralSolution& sol, const std::vector<int>& origin,
                                    const Instance& original) {
  IntegralSolution out;
  out.open_count.assign(original.num_facilities(), 0);
  for (size_t row = 0; row < sol.open_count.size(); ++row) out.open_count[origin[row]] += sol.open_count[row];
  out.connections.resize(sol.connections.size());
  for (size_t j = 0; j < sol.connections.size(); ++j) {
    std::map<int, int> merged;
    for (const Connection& c : sol.connections[j]) merged[origin[c.facility]] += c.copies;
    for (const auto& [loc, k] : merged) out.connections[j].push_back({loc, k});
  }
  out.repaired_copies = sol.repaired_copies;
  out.cost = SolutionCost(original, out);
  return out;
}

}  // namespace ftfp
