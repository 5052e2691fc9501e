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

#ifndef FTFP_INSTANCE_H_
#define FTFP_INSTANCE_H_

#include <cstddef>
#include <string>
#include <vector>

namespace ftfp {

// A fault-tolerant facility placement instance. Facility i may be opened any
// number of times at cost f_i per copy; client j must be connected to r_j
// open copies. Distances are stored row-major with one row per client.
class Instance {
 public:
  Instance() = default;
  Instance(std::vector<double> facility_costs, std::vector<int> requirements,
           std::vector<double> distances);

  int num_facilities() const { return static_cast<int>(facility_costs_.size()); }
  int num_clients() const { return static_cast<int>(requirements_.size()); }

  double facility_cost(int i) const { return facility_costs_[i]; }
  int requirement(int j) const { return requirements_[j]; }
  double distance(int j, int i) const {
    return distances_[static_cast<size_t>(j) * facility_costs_.size() + i];
  }

  const std::vector<double>& facility_costs() const { return facility_costs_; }
  const std::vector<int>& requirements() const { return requirements_; }
  const std::vector<double>& distances() const { return distances_; }

  void set_requirement(int j, int r) { requirements_[j] = r; }
  int max_requirement() const;
  int min_requirement() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<double> facility_costs_;
  std::vector<int> requirements_;
  std::vector<double> distances_;
};

struct Violation {
  enum class Kind { kNegativeCost, kBadRequirement, kNegativeDistance, kTriangle };
  Kind kind;
  // Indices involved; for kTriangle: client j, facility i, client j2, facility i2
  // with c(j,i) > c(j,i2) + c(j2,i2) + c(j2,i).
  std::vector<int> indices;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool metric_checked = false;
  bool ok() const { return violations.empty(); }
};

struct ValidateOptions {
  bool check_metric = true;
  // Skip the O(|C|^2 |F|^2) metric check above this many quadruples.
  double metric_work_cap = 2e9;
  double tolerance = 1e-9;
  // Stop collecting after this many violations.
  int max_violations = 100;
};

// Throws InputError when the dimensions are inconsistent (a structural
// error); invariant violations are returned in the report.
ValidationReport ValidateInstance(const Instance& inst,
                                  const ValidateOptions& options = {});

}  // namespace ftfp

#endif  // FTFP_INSTANCE_H_
