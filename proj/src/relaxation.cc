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

#include "ftfp/relaxation.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ftfp/errors.h"

namespace ftfp {
namespace {

constexpr double kSnap = 1e-9;

std::vector<int> FacilitiesByDistance(const Instance& inst, int j) {
  std::vector<int> order(inst.num_facilities());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return inst.distance(j, a) < inst.distance(j, b); });
  return order;
}

}  // namespace

LinearProgram BuildFtfpLp(const Instance& inst) {
  const int m = inst.num_facilities(), n = inst.num_clients();
  const FtfpLayout at{m};
  LinearProgram lp(Sense::kMinimize);
  for (int i = 0; i < m; ++i) lp.AddVariable(inst.facility_cost(i));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) lp.AddVariable(inst.distance(j, i));
  }
  for (int j = 0; j < n; ++j) {
    std::vector<std::pair<int, double>> t;
    for (int i = 0; i < m; ++i) t.emplace_back(at.x(j, i), 1.0);
    lp.AddRow(t, Relation::kGreaterEqual, inst.requirement(j));
  }
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      lp.AddRow({{at.y(i), 1.0}, {at.x(j, i), -1.0}}, Relation::kGreaterEqual, 0.0);
    }
  }
  return lp;
}

void RecomputeCosts(const Instance& inst, FractionalSolution& fs) {
  fs.facility_cost = 0;
  for (int i = 0; i < fs.num_facilities; ++i) fs.facility_cost += inst.facility_cost(i) * fs.y[i];
  fs.client_cost.assign(fs.num_clients, 0.0);
  fs.connection_cost = 0;
  for (int j = 0; j < fs.num_clients; ++j) {
    for (int i = 0; i < fs.num_facilities; ++i) fs.client_cost[j] += inst.distance(j, i) * fs.X(j, i);
    fs.connection_cost += fs.client_cost[j];
  }
}

std::optional<std::string> CheckFractionalFeasibility(const Instance& inst,
                                                      const FractionalSolution& fs, double tol) {
  if (fs.num_facilities != inst.num_facilities() || fs.num_clients != inst.num_clients()) {
    return "solution dimensions do not match the instance";
  }
  for (int i = 0; i < fs.num_facilities; ++i) {
    if (fs.y[i] < -tol) return "negative y at facility " + std::to_string(i);
  }
  for (int j = 0; j < fs.num_clients; ++j) {
    double mass = 0;
    for (int i = 0; i < fs.num_facilities; ++i) {
      const double v = fs.X(j, i);
      if (v < -tol) return "negative x";
      if (v > fs.y[i] + tol * std::max(1.0, fs.y[i])) {
        return "x(" + std::to_string(j) + "," + std::to_string(i) + ") exceeds y";
      }
      mass += v;
    }
    if (mass < inst.requirement(j) - tol * std::max(1, inst.requirement(j))) {
      return "client " + std::to_string(j) + " is under-served";
    }
  }
  return std::nullopt;
}

bool IsComplete(const FractionalSolution& fs, double tol) {
  for (int j = 0; j < fs.num_clients; ++j) {
    for (int i = 0; i < fs.num_facilities; ++i) {
      const double v = fs.X(j, i);
      const double scale = std::max(1.0, fs.y[i]);
      if (std::abs(v) > tol * scale && std::abs(v - fs.y[i]) > tol * scale) return false;
    }
  }
  return true;
}

FractionalSolution ExtractFractionalSolution(const Instance& inst, const LpSolution& sol) {
  if (!sol.optimal()) {
    throw NumericalError(std::string("relaxation not solved to optimality: ") + LpStatusName(sol.status));
  }
  const int m = inst.num_facilities(), n = inst.num_clients();
  const FtfpLayout at{m};
  if (static_cast<int>(sol.values.size()) != m + m * n) throw InputError("LP solution does not match the instance");
  FractionalSolution fs;
  fs.num_facilities = m;
  fs.num_clients = n;
  fs.y.resize(m);
  fs.x.resize(static_cast<size_t>(m) * n);
  for (int i = 0; i < m; ++i) fs.y[i] = std::max(0.0, sol.values[at.y(i)]);
  for (int j = 0; j < n; ++j) {
    const double r = inst.requirement(j);
    double mass = 0;
    for (int i = 0; i < m; ++i) {
      double v = std::max(0.0, sol.values[at.x(j, i)]);
      v = std::min(v, fs.y[i]);
      if (v < kSnap * std::max(1.0, fs.y[i])) v = 0;
      fs.X(j, i) = v;
      mass += v;
    }
    const std::vector<int> order = FacilitiesByDistance(inst, j);
    if (mass > r) {
      double excess = mass - r;
      for (auto it = order.rbegin(); it != order.rend() && excess > 0; ++it) {
        const double cut = std::min(excess, fs.X(j, *it));
        fs.X(j, *it) -= cut;
        excess -= cut;
      }
    } else if (mass < r) {
      // Tolerance-level deficit: top up the nearest facilities, opening
      // more where the coupling row is already tight.
      double deficit = r - mass;
      for (int i : order) {
        if (deficit <= 0) break;
        const double room = fs.y[i] - fs.X(j, i);
        const double add = std::min(deficit, room);
        if (add > 0) fs.X(j, i) += add, deficit -= add;
      }
      if (deficit > 0) {
        fs.y[order[0]] += deficit;
        fs.X(j, order[0]) += deficit;
      }
    }
  }
  RecomputeCosts(inst, fs);
  fs.complete = IsComplete(fs);
  return fs;
}

FractionalSolution SolveFtfpRelaxation(const Instance& inst) {
  return ExtractFractionalSolution(inst, SolveLp(BuildFtfpLp(inst)));
}

CompleteSolution MakeComplete(const Instance& inst, const FractionalSolution& fs) {
  if (auto err = CheckFractionalFeasibility(inst, fs, 1e-7)) {
    throw InputError("facility splitting needs a feasible solution: " + *err);
  }
  const int m = inst.num_facilities(), n = inst.num_clients();
  struct Copy {
    int origin;
    double opening;
  };
  std::vector<Copy> copies;
  // level[j][i]: number of leading copies of facility i that client j uses.
  std::vector<std::vector<int>> first_copy(m);
  std::vector<int> uses(static_cast<size_t>(n) * m, 0);
  for (int i = 0; i < m; ++i) {
    const double y = fs.y[i];
    const double tol = kSnap * std::max(1.0, y);
    std::vector<double> cuts;
    for (int j = 0; j < n; ++j) {
      const double v = fs.X(j, i);
      if (v > tol) cuts.push_back(std::min(v, y));
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> distinct;
    for (double v : cuts) {
      if (distinct.empty() || v - distinct.back() > tol) distinct.push_back(v);
      else distinct.back() = std::max(distinct.back(), v);
    }
    if (!distinct.empty() && y - distinct.back() <= tol) distinct.back() = y;
    if (distinct.empty() || distinct.back() < y) distinct.push_back(y);

    double prev = 0;
    const int base = static_cast<int>(copies.size());
    for (double v : distinct) {
      copies.push_back({i, v - prev});
      prev = v;
    }
    for (int j = 0; j < n; ++j) {
      const double v = fs.X(j, i);
      if (v <= tol) continue;
      // Number of cut points at or below v (v maps to its snapped group).
      int k = 0;
      while (k < static_cast<int>(distinct.size()) && distinct[k] <= v + tol) ++k;
      uses[static_cast<size_t>(j) * m + i] = k;
    }
    first_copy[i] = {base};
  }

  const int nrows = static_cast<int>(copies.size());
  std::vector<double> costs(nrows), dist(static_cast<size_t>(n) * nrows);
  CompleteSolution out;
  out.origin.resize(nrows);
  for (int row = 0; row < nrows; ++row) {
    out.origin[row] = copies[row].origin;
    costs[row] = inst.facility_cost(copies[row].origin);
    for (int j = 0; j < n; ++j) dist[static_cast<size_t>(j) * nrows + row] = inst.distance(j, copies[row].origin);
  }
  out.instance = Instance(std::move(costs), inst.requirements(), std::move(dist));

  FractionalSolution& cs = out.solution;
  cs.num_facilities = nrows;
  cs.num_clients = n;
  cs.y.resize(nrows);
  cs.x.assign(static_cast<size_t>(n) * nrows, 0.0);
  for (int row = 0; row < nrows; ++row) cs.y[row] = copies[row].opening;
  for (int i = 0; i < m; ++i) {
    const int base = first_copy[i][0];
    for (int j = 0; j < n; ++j) {
      const int k = uses[static_cast<size_t>(j) * m + i];
      for (int c = 0; c < k; ++c) cs.X(j, base + c) = cs.y[base + c];
    }
  }
  RecomputeCosts(out.instance, cs);
  cs.complete = true;
  return out;
}

DemandSplit ReduceDemands(const Instance& inst, const FractionalSolution& fs, int rbar) {
  const int m = inst.num_facilities(), n = inst.num_clients();
  if (rbar < 1 || rbar > inst.min_requirement()) {
    throw InputError("rbar must lie in [1, min_j r_j]");
  }
  if (!IsComplete(fs)) throw InputError("demand reduction needs a complete solution");
  for (int j = 0; j < n; ++j) {
    double mass = 0;
    for (int i = 0; i < m; ++i) mass += fs.X(j, i);
    if (std::abs(mass - inst.requirement(j)) > 1e-7 * inst.requirement(j)) {
      throw InputError("demand reduction needs sum_i x_ij = r_j for every client");
    }
  }
  auto integral_part = [&](double v) {
    return std::max(0L, static_cast<long>(std::floor(v - rbar + kSnap)));
  };

  DemandSplit split;
  split.rbar = rbar;
  split.y_hat.resize(m);
  split.x_hat.assign(static_cast<size_t>(n) * m, 0);
  split.r_hat.assign(n, 0);
  FractionalSolution& res = split.residual;
  res.num_facilities = m;
  res.num_clients = n;
  res.y.resize(m);
  res.x.assign(static_cast<size_t>(n) * m, 0.0);
  for (int i = 0; i < m; ++i) {
    split.y_hat[i] = integral_part(fs.y[i]);
    res.y[i] = std::max(0.0, fs.y[i] - static_cast<double>(split.y_hat[i]));
  }
  std::vector<int> r_dot(n);
  for (int j = 0; j < n; ++j) {
    long r_hat = 0;
    for (int i = 0; i < m; ++i) {
      const double v = fs.X(j, i);
      const long xh = integral_part(v);
      split.x_hat[static_cast<size_t>(j) * m + i] = xh;
      r_hat += xh;
      res.X(j, i) = std::max(0.0, v - static_cast<double>(xh));
    }
    split.r_hat[j] = static_cast<int>(r_hat);
    r_dot[j] = inst.requirement(j) - split.r_hat[j];
  }
  split.residual_instance = Instance(inst.facility_costs(), r_dot, inst.distances());
  RecomputeCosts(split.residual_instance, res);
  res.complete = IsComplete(res);

  IntegralSolution& integral = split.integral;
  integral.open_count.resize(m);
  for (int i = 0; i < m; ++i) integral.open_count[i] = static_cast<int>(split.y_hat[i]);
  integral.connections.resize(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      const long k = split.x_hat[static_cast<size_t>(j) * m + i];
      if (k > 0) integral.connections[j].push_back({i, static_cast<int>(k)});
    }
  }
  integral.cost = SolutionCost(inst, integral);
  return split;
}

IntegralSolution RecombineSolutions(const Instance& inst, const DemandSplit& split,
                                    const IntegralSolution& residual_integral) {
  if (auto err = CheckIntegralFeasibility(split.residual_instance, residual_integral)) {
    throw InputError("residual solution is infeasible: " + *err);
  }
  const int m = inst.num_facilities(), n = inst.num_clients();
  IntegralSolution out;
  out.open_count.resize(m);
  for (int i = 0; i < m; ++i) out.open_count[i] = split.integral.open_count[i] + residual_integral.open_count[i];
  out.connections.resize(n);
  for (int j = 0; j < n; ++j) {
    std::vector<int> copies(m, 0);
    for (const Connection& c : split.integral.connections[j]) copies[c.facility] += c.copies;
    for (const Connection& c : residual_integral.connections[j]) copies[c.facility] += c.copies;
    for (int i = 0; i < m; ++i) {
      if (copies[i] > 0) out.connections[j].push_back({i, copies[i]});
    }
  }
  out.repaired_copies = residual_integral.repaired_copies;
  out.cost = SolutionCost(inst, out);
  return out;
}

}  // namespace ftfp
