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

#include "ftfp/instance.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ftfp/errors.h"

namespace ftfp {

Instance::Instance(std::vector<double> facility_costs,
                   std::vector<int> requirements, std::vector<double> distances)
    : facility_costs_(std::move(facility_costs)),
      requirements_(std::move(requirements)),
      distances_(std::move(distances)) {
  if (distances_.size() != facility_costs_.size() * requirements_.size()) {
    std::ostringstream msg;
    msg << "distance matrix has " << distances_.size() << " entries, expected "
        << requirements_.size() << "x" << facility_costs_.size();
    throw InputError(msg.str());
  }
}

int Instance::max_requirement() const {
  return requirements_.empty()
             ? 0
             : *std::max_element(requirements_.begin(), requirements_.end());
}

int Instance::min_requirement() const {
  return requirements_.empty()
             ? 0
             : *std::min_element(requirements_.begin(), requirements_.end());
}

ValidationReport ValidateInstance(const Instance& inst,
                                  const ValidateOptions& options) {
  const int nf = inst.num_facilities();
  const int nc = inst.num_clients();
  if (inst.distances().size() != static_cast<size_t>(nf) * nc) {
    throw InputError("distance matrix dimensions do not match the instance");
  }
  if (nf == 0 || nc == 0) throw InputError("instance has no facilities or no clients");

  ValidationReport report;
  auto add = [&](Violation v) {
    if (static_cast<int>(report.violations.size()) < options.max_violations) {
      report.violations.push_back(std::move(v));
    }
  };
  for (int i = 0; i < nf; ++i) {
    if (!(inst.facility_cost(i) >= 0) || !std::isfinite(inst.facility_cost(i))) {
      add({Violation::Kind::kNegativeCost, {i}, "facility " + std::to_string(i) + " has invalid cost"});
    }
  }
  for (int j = 0; j < nc; ++j) {
    if (inst.requirement(j) < 1) {
      add({Violation::Kind::kBadRequirement, {j}, "client " + std::to_string(j) + " has requirement < 1"});
    }
  }
  for (int j = 0; j < nc; ++j) {
    for (int i = 0; i < nf; ++i) {
      const double d = inst.distance(j, i);
      if (!(d >= 0) || !std::isfinite(d)) {
        add({Violation::Kind::kNegativeDistance, {j, i},
             "distance (" + std::to_string(j) + "," + std::to_string(i) + ") is invalid"});
      }
    }
  }

  const double work = static_cast<double>(nc) * nc * nf * nf;
  if (!options.check_metric || work > options.metric_work_cap) return report;
  report.metric_checked = true;

  // c(j,i) <= c(j,i2) + c(j2,i2) + c(j2,i) for every client-facility-client-
  // facility path. For fixed (j, i) the right-hand side minimum over i2 is
  // shared across j2, but the exhaustive loop keeps the witness indices.
  for (int j = 0; j < nc; ++j) {
    for (int i = 0; i < nf; ++i) {
      const double direct = inst.distance(j, i);
      for (int j2 = 0; j2 < nc; ++j2) {
        if (j2 == j) continue;
        const double back = inst.distance(j2, i);
        for (int i2 = 0; i2 < nf; ++i2) {
          if (i2 == i) continue;
          const double path = inst.distance(j, i2) + inst.distance(j2, i2) + back;
          if (direct > path + options.tolerance * std::max(1.0, path)) {
            std::ostringstream msg;
            msg << "c(" << j << "," << i << ")=" << direct << " exceeds path via client "
                << j2 << " and facility " << i2 << " of length " << path;
            add({Violation::Kind::kTriangle, {j, i, j2, i2}, msg.str()});
          }
        }
      }
    }
  }
  return report;
}

}  // namespace ftfp
