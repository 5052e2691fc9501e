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

#include "ftfp/rounding.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ftfp/dependent_rounding.h"
#include "ftfp/errors.h"
#include "ftfp/frlp.h"
#include "ftfp/poisson.h"

namespace ftfp {
namespace {

constexpr double kVolumeTol = 1e-9;

double Tol(double scale) { return kVolumeTol * std::max(1.0, scale); }

// F_j sorted by (distance, index).
std::vector<int> SupportByDistance(const Instance& inst, const FractionalSolution& fs, int j) {
  std::vector<int> support;
  for (int i = 0; i < fs.num_facilities; ++i) {
    if (fs.X(j, i) > 0) support.push_back(i);
  }
  std::stable_sort(support.begin(), support.end(),
                   [&](int a, int b) { return inst.distance(j, a) < inst.distance(j, b); });
  return support;
}

void CheckTight(const Instance& inst, const FractionalSolution& fs) {
  if (fs.num_facilities != inst.num_facilities() || fs.num_clients != inst.num_clients()) {
    throw InputError("fractional solution does not match the instance");
  }
  if (!IsComplete(fs, 1e-7)) throw InputError("rounding needs a complete fractional solution");
  for (int j = 0; j < fs.num_clients; ++j) {
    double mass = 0;
    for (int i = 0; i < fs.num_facilities; ++i) mass += fs.X(j, i);
    if (std::abs(mass - inst.requirement(j)) > 1e-7 * inst.requirement(j)) {
      throw InputError("rounding needs sum_i x_ij = r_j for every client");
    }
  }
}

}  // namespace

ScaledSolution ScaleAndReassign(const Instance& inst, const FractionalSolution& fs, double gamma) {
  if (!(gamma > 1.0 && gamma <= 3.0)) throw InputError("gamma must lie in (1, 3]");
  CheckTight(inst, fs);
  const int m = fs.num_facilities, n = fs.num_clients;
  ScaledSolution s;
  s.gamma = gamma;
  s.num_facilities = m;
  s.num_clients = n;
  s.y_bar.resize(m);
  for (int i = 0; i < m; ++i) s.y_bar[i] = gamma * fs.y[i];
  s.x_bar.assign(static_cast<size_t>(n) * m, 0.0);
  s.order.resize(n);
  s.close_count.assign(n, 0);
  s.close_volume.assign(n, 0);
  s.distant_volume.assign(n, 0);
  s.avg_close.assign(n, 0);
  s.avg_distant.assign(n, 0);
  s.max_close.assign(n, 0);
  s.client_cost.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    const double r = inst.requirement(j);
    s.order[j] = SupportByDistance(inst, fs, j);
    double need = r, close_cost = 0, distant_cost = 0, distant = 0;
    int count = 0;
    for (int i : s.order[j]) {
      const double cap = s.y_bar[i];
      const double d = inst.distance(j, i);
      if (need > Tol(r)) {
        const double take = need >= cap - Tol(r) ? cap : need;
        s.x_bar[static_cast<size_t>(j) * m + i] = take;
        close_cost += d * take;
        need -= take;
        s.max_close[j] = d;
        ++count;
        if (take < cap) {
          distant += cap - take;
          distant_cost += d * (cap - take);
        }
      } else {
        distant += cap;
        distant_cost += d * cap;
      }
    }
    if (need > 1e-7 * r) throw NumericalError("scaled close set is short of r_j");
    s.close_count[j] = count;
    s.close_volume[j] = r - std::max(need, 0.0);
    s.distant_volume[j] = distant;
    s.avg_close[j] = close_cost / s.close_volume[j];
    s.avg_distant[j] = distant > Tol(r) ? distant_cost / distant : 0.0;
    s.client_cost[j] = close_cost;
  }
  return s;
}

std::vector<ClientLevels> PartitionLevels(const Instance& inst, const FractionalSolution& fs, int n) {
  if (n < 2) throw InputError("grid size must be at least 2");
  CheckTight(inst, fs);
  std::vector<ClientLevels> out(fs.num_clients);
  for (int j = 0; j < fs.num_clients; ++j) {
    const double r = inst.requirement(j);
    std::vector<double> bound(n);  // prefix volume at the end of level l
    for (int l = 1; l < n; ++l) bound[l - 1] = r / GridGamma(l, n);
    bound[n - 1] = r;
    ClientLevels& lv = out[j];
    lv.volume.assign(n, 0);
    lv.avg_distance.assign(n, 0);
    lv.max_distance.assign(n, 0);
    std::vector<double> weighted(n, 0);
    double start = 0;
    int level = 0;
    for (int i : SupportByDistance(inst, fs, j)) {
      const double end = start + fs.X(j, i);
      const double d = inst.distance(j, i);
      while (level < n - 1 && bound[level] <= start + Tol(r)) ++level;
      for (int l = level; l < n; ++l) {
        const double lo = std::max(start, l == 0 ? 0.0 : bound[l - 1]);
        const double hi = l == n - 1 ? end : std::min(end, bound[l]);
        if (hi - lo > Tol(r)) {
          lv.volume[l] += hi - lo;
          weighted[l] += d * (hi - lo);
          lv.max_distance[l] = std::max(lv.max_distance[l], d);
        }
        if (l < n - 1 && bound[l] >= end) break;
      }
      start = end;
    }
    for (int l = 0; l < n; ++l) {
      if (lv.volume[l] > 0) lv.avg_distance[l] = weighted[l] / lv.volume[l];
      if (l > 0) lv.max_distance[l] = std::max(lv.max_distance[l], lv.max_distance[l - 1]);
    }
  }
  return out;
}

ClusterSet BuildClusters(const Instance& inst, const ScaledSolution& s) {
  const int m = s.num_facilities, n = s.num_clients;
  ClusterSet cs;
  cs.radius = s.max_close;
  cs.cluster_of.assign(n, -1);
  cs.is_center.assign(n, 0);
  cs.close_pieces.resize(n);

  // Cut points per facility row: integers and close-set boundaries.
  std::vector<std::vector<double>> cuts(m);
  for (int i = 0; i < m; ++i) {
    for (double k = 1; k < s.y_bar[i] - Tol(s.y_bar[i]); k += 1) cuts[i].push_back(k);
  }
  for (int j = 0; j < n; ++j) {
    if (s.close_count[j] == 0) continue;
    const int b = s.order[j][s.close_count[j] - 1];
    const double t = s.XBar(j, b);
    if (t < s.y_bar[b] - Tol(s.y_bar[b])) cuts[b].push_back(t);
  }
  // first_piece[i] .. boundaries[i]: pieces of row i ordered by position.
  std::vector<std::vector<std::pair<double, int>>> row_pieces(m);  // (upper end, piece id)
  for (int i = 0; i < m; ++i) {
    if (s.y_bar[i] <= 0) continue;
    std::vector<double>& c = cuts[i];
    std::sort(c.begin(), c.end());
    double prev = 0;
    auto emit = [&](double hi) {
      if (hi - prev <= Tol(s.y_bar[i])) return;
      row_pieces[i].emplace_back(hi, static_cast<int>(cs.pieces.size()));
      cs.pieces.push_back({i, hi - prev});
      prev = hi;
    };
    for (double v : c) emit(v);
    const double top = s.y_bar[i];
    if (top - prev > Tol(top)) {
      emit(top);
    } else if (!row_pieces[i].empty()) {
      cs.pieces[row_pieces[i].back().second].value += top - prev;
      row_pieces[i].back().first = top;
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < s.close_count[j]; ++k) {
      const int i = s.order[j][k];
      const double t = s.XBar(j, i);
      for (const auto& [hi, id] : row_pieces[i]) {
        if (hi <= t + Tol(s.y_bar[i])) cs.close_pieces[j].push_back(id);
      }
    }
  }

  // Working state.
  std::vector<int> residual(n);
  for (int j = 0; j < n; ++j) residual[j] = inst.requirement(j);
  std::vector<std::vector<int>> proposal = cs.close_pieces;
  std::vector<char> in_center(cs.pieces.size(), 0);

  auto volume_of = [&](const std::vector<int>& ids) {
    double v = 0;
    for (int p : ids) v += cs.pieces[p].value;
    return v;
  };

  while (true) {
    int center = -1;
    for (int j = 0; j < n; ++j) {
      if (residual[j] > 0 && (center < 0 || cs.radius[j] < cs.radius[center])) center = j;
    }
    if (center < 0) break;
    Cluster cl;
    cl.center = center;
    cl.residual = residual[center];
    cl.pieces = proposal[center];
    std::sort(cl.pieces.begin(), cl.pieces.end());
    residual[center] = 0;
    cs.is_center[center] = 1;
    cs.cluster_of[center] = static_cast<int>(cs.clusters.size());
    in_center.assign(cs.pieces.size() + 1, 0);
    for (int p : cl.pieces) in_center[p] = 1;

    for (int other = 0; other < n; ++other) {
      if (other == center || residual[other] <= 0) continue;
      double shared = 0;
      bool touches = false;
      std::vector<int> rest;
      for (int p : proposal[other]) {
        if (in_center[p]) {
          shared += cs.pieces[p].value;
          touches = true;
        } else {
          rest.push_back(p);
        }
      }
      if (!touches) continue;
      cl.members.push_back(other);
      cs.cluster_of[other] = static_cast<int>(cs.clusters.size());
      const int reduce = static_cast<int>(std::ceil(shared - Tol(shared)));
      residual[other] = std::max(0, residual[other] - reduce);
      if (residual[other] == 0) {
        proposal[other].clear();
        continue;
      }
      // B(other, rest, residual): nearest prefix of volume residual.
      std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
        const double da = inst.distance(other, cs.pieces[a].facility);
        const double db = inst.distance(other, cs.pieces[b].facility);
        return da != db ? da < db : a < b;
      });
      const double target = residual[other];
      std::vector<int> kept;
      double vol = 0;
      for (int p : rest) {
        if (vol >= target - Tol(target)) break;
        const double need = target - vol;
        if (cs.pieces[p].value > need + Tol(target)) {
          // Split p: the first part stays, the remainder becomes a new piece
          // shared by every other live proposal that held p.
          const int q = static_cast<int>(cs.pieces.size());
          cs.pieces.push_back({cs.pieces[p].facility, cs.pieces[p].value - need});
          cs.pieces[p].value = need;
          in_center.push_back(0);
          for (int o = 0; o < n; ++o) {
            if (o == other || residual[o] <= 0 || o == center) continue;
            if (std::find(proposal[o].begin(), proposal[o].end(), p) != proposal[o].end()) {
              proposal[o].push_back(q);
            }
          }
          for (auto& close : cs.close_pieces) {
            if (std::find(close.begin(), close.end(), p) != close.end()) close.push_back(q);
          }
        }
        kept.push_back(p);
        vol += cs.pieces[p].value;
      }
      if (vol < target - 1e-7 * target) throw NumericalError("cluster proposal lost volume");
      proposal[other] = std::move(kept);
    }
    cs.clusters.push_back(std::move(cl));
  }
  (void)volume_of;
  return cs;
}

std::optional<std::string> CheckClusterSet(const Instance& inst, const ScaledSolution& s,
                                           const ClusterSet& cs, double tol) {
  std::vector<int> owner(cs.pieces.size(), -1);
  for (size_t c = 0; c < cs.clusters.size(); ++c) {
    const Cluster& cl = cs.clusters[c];
    double vol = 0;
    for (int p : cl.pieces) {
      if (owner[p] >= 0) return "piece " + std::to_string(p) + " lies in two clusters";
      owner[p] = static_cast<int>(c);
      vol += cs.pieces[p].value;
    }
    if (std::abs(vol - cl.residual) > 1e-7 * std::max(1, cl.residual)) {
      return "cluster of client " + std::to_string(cl.center) + " has volume " + std::to_string(vol) +
             " instead of " + std::to_string(cl.residual);
    }
    for (int j : cl.members) {
      if (cs.radius[cl.center] > cs.radius[j] + tol) {
        return "member " + std::to_string(j) + " has a smaller radius than its center";
      }
      const double limit = 3.0 * s.max_close[j];
      for (int p : cl.pieces) {
        const double d = inst.distance(j, cs.pieces[p].facility);
        if (d > limit + tol * std::max(1.0, limit)) {
          return "client " + std::to_string(j) + " is " + std::to_string(d) +
                 " from its cluster, above 3 D_max = " + std::to_string(limit);
        }
      }
    }
  }
  for (int j = 0; j < inst.num_clients(); ++j) {
    if (cs.cluster_of[j] < 0) return "client " + std::to_string(j) + " belongs to no cluster";
  }
  return std::nullopt;
}

GammaPlan PlanGamma(const Instance& inst, const FractionalSolution& fs, double gamma) {
  GammaPlan plan;
  plan.scaled = ScaleAndReassign(inst, fs, gamma);
  plan.clusters = BuildClusters(inst, plan.scaled);
  const ClusterSet& cs = plan.clusters;
  std::vector<char> clustered(cs.pieces.size(), 0);
  for (const Cluster& cl : cs.clusters) {
    for (int p : cl.pieces) clustered[p] = 1;
  }
  for (int p = 0; p < static_cast<int>(cs.pieces.size()); ++p) {
    if (!clustered[p]) plan.leftover.push_back(p);
  }
  std::stable_sort(plan.leftover.begin(), plan.leftover.end(), [&](int a, int b) {
    return cs.pieces[a].value > cs.pieces[b].value;
  });
  const int m = inst.num_facilities();
  plan.by_distance.resize(inst.num_clients());
  plan.repair_target.assign(inst.num_clients(), -1);
  for (int j = 0; j < inst.num_clients(); ++j) {
    std::vector<int>& order = plan.by_distance[j];
    order.resize(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return inst.distance(j, a) < inst.distance(j, b); });
    for (int i : order) {
      if (plan.scaled.y_bar[i] > 0) {
        plan.repair_target[j] = i;
        break;
      }
    }
  }
  return plan;
}

std::vector<int> RoundOpenings(const GammaPlan& plan, Rng& rng) {
  const ClusterSet& cs = plan.clusters;
  std::vector<double> w(cs.pieces.size());
  for (size_t p = 0; p < w.size(); ++p) w[p] = std::min(1.0, cs.pieces[p].value);
  for (const Cluster& cl : cs.clusters) DependentRound(w, cl.pieces, rng);
  DependentRound(w, plan.leftover, rng);
  std::vector<int> open(plan.scaled.num_facilities, 0);
  for (size_t p = 0; p < w.size(); ++p) {
    if (w[p] > 0.5) ++open[cs.pieces[p].facility];
  }
  return open;
}

int RepairOpenings(const Instance& inst, const GammaPlan& plan, std::vector<int>& open_count) {
  long total = std::accumulate(open_count.begin(), open_count.end(), 0L);
  int added = 0;
  for (int j = 0; j < inst.num_clients(); ++j) {
    const long need = inst.requirement(j) - total;
    if (need <= 0) continue;
    int target = plan.repair_target[j];
    if (target < 0) target = plan.by_distance[j].front();
    open_count[target] += static_cast<int>(need);
    added += static_cast<int>(need);
    total += need;
  }
  return added;
}

IntegralSolution ConnectClients(const Instance& inst, const std::vector<int>& open_count,
                                const std::vector<std::vector<int>>& by_distance) {
  IntegralSolution sol;
  sol.open_count = open_count;
  sol.connections.resize(inst.num_clients());
  for (int j = 0; j < inst.num_clients(); ++j) {
    int need = inst.requirement(j);
    for (int i : by_distance[j]) {
      if (need == 0) break;
      const int take = std::min(need, open_count[i]);
      if (take > 0) {
        sol.connections[j].push_back({i, take});
        need -= take;
      }
    }
    if (need > 0) {
      throw NumericalError("client " + std::to_string(j) + " cannot reach enough open copies");
    }
  }
  sol.cost = SolutionCost(inst, sol);
  return sol;
}

IntegralSolution ConnectClients(const Instance& inst, const std::vector<int>& open_count) {
  std::vector<std::vector<int>> order(inst.num_clients());
  for (int j = 0; j < inst.num_clients(); ++j) {
    order[j].resize(inst.num_facilities());
    std::iota(order[j].begin(), order[j].end(), 0);
    std::stable_sort(order[j].begin(), order[j].end(),
                     [&](int a, int b) { return inst.distance(j, a) < inst.distance(j, b); });
  }
  return ConnectClients(inst, open_count, order);
}

void CloseUnusedCopies(const Instance& inst, IntegralSolution& sol) {
  std::vector<int> used(sol.open_count.size(), 0);
  for (const auto& conns : sol.connections)
    for (const Connection& c : conns) used[c.facility] = std::max(used[c.facility], c.copies);
  sol.open_count = used;
  sol.cost = SolutionCost(inst, sol);
}

IntegralSolution RunPlannedGamma(const Instance& inst, const GammaPlan& plan, Rng& rng) {
  std::vector<int> open = RoundOpenings(plan, rng);
  const int repaired = RepairOpenings(inst, plan, open);
  IntegralSolution sol = ConnectClients(inst, open, plan.by_distance);
  CloseUnusedCopies(inst, sol);
  sol.repaired_copies = repaired;
  return sol;
}

IntegralSolution RunSingleGamma(const Instance& inst, const FractionalSolution& fs, double gamma, Rng& rng) {
  return RunPlannedGamma(inst, PlanGamma(inst, fs, gamma), rng);
}

std::vector<GammaPlan> PlanAlgorithm1(const Instance& inst, const FractionalSolution& fs, int n) {
  if (n < 2) throw InputError("grid size must be at least 2");
  std::vector<GammaPlan> plans;
  plans.reserve(n - 1);
  for (int l = 1; l < n; ++l) plans.push_back(PlanGamma(inst, fs, GridGamma(l, n)));
  return plans;
}

Algorithm1Result RunAlgorithm1(const Instance& inst, const FractionalSolution& fs, int n, int trials,
                               uint64_t seed) {
  return RunAlgorithm1(inst, PlanAlgorithm1(inst, fs, n), trials, seed);
}

Algorithm1Result RunAlgorithm1(const Instance& inst, const std::vector<GammaPlan>& plans, int trials,
                               uint64_t seed) {
  if (plans.empty()) throw InputError("no grid points to run");
  if (trials < 1) throw InputError("trials must be positive");
  Algorithm1Result result;
  bool have = false;
  for (size_t idx = 0; idx < plans.size(); ++idx) {
    const int l = static_cast<int>(idx) + 1;
    const GammaPlan& plan = plans[idx];
    GammaStats st;
    st.index = l;
    st.gamma = plan.scaled.gamma;
    double sum = 0;
    for (int t = 0; t < trials; ++t) {
      Rng rng(DeriveSeed(seed, l, t));
      IntegralSolution sol = RunPlannedGamma(inst, plan, rng);
      sum += sol.cost;
      st.min_cost = st.runs == 0 ? sol.cost : std::min(st.min_cost, sol.cost);
      ++st.runs;
      if (sol.repaired_copies > 0) ++st.repaired_runs;
      if (!have || sol.cost < result.best.cost) {
        result.best = std::move(sol);
        result.best_index = l;
        result.best_gamma = st.gamma;
        result.best_trial = t;
        have = true;
      }
    }
    st.mean_cost = sum / st.runs;
    result.total_runs += st.runs;
    result.repaired_runs += st.repaired_runs;
    result.per_gamma.push_back(st);
  }
  return result;
}

std::vector<double> ConnectionCostBounds(const Instance& inst, const FractionalSolution& fs, int n, int k) {
  if (k < 1 || k >= n) throw InputError("grid index must lie in [1, n-1]");
  const std::vector<ClientLevels> levels = PartitionLevels(inst, fs, n);
  const double gk = GridGamma(k, n);
  std::vector<double> out(inst.num_clients());
  for (int j = 0; j < inst.num_clients(); ++j) {
    const int r = inst.requirement(j);
    double bound = 0, prev_h = 0, prefix = 0;
    for (int l = 0; l < n; ++l) {
      prefix += levels[j].volume[l];
      const double h = ExpectedUsefulOpens(gk * prefix, r);
      bound += levels[j].avg_distance[l] * (h - prev_h);
      prev_h = h;
    }
    const double e3 = r - ExpectedUsefulOpens(gk * r, r);
    bound += 3.0 * levels[j].max_distance[k - 1] * e3;
    out[j] = bound;
  }
  return out;
}

}  // namespace ftfp
