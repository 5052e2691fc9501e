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

#include "ftfp/harness.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "ftfp/dependent_rounding.h"
#include "ftfp/errors.h"
#include "ftfp/instance_io.h"
#include "ftfp/relaxation.h"

namespace ftfp {

OracleResult BruteForceOptimal(const Instance& inst, int cap, long max_nodes) {
  const int m = inst.num_facilities(), n = inst.num_clients();
  if (cap < 0) cap = inst.max_requirement();
  double space = std::pow(static_cast<double>(cap) + 1.0, m);
  if (space > static_cast<double>(max_nodes)) {
    throw InputError("oracle search space " + FormatReal(space) + " exceeds the guard");
  }
  std::vector<std::vector<int>> order(n);
  for (int j = 0; j < n; ++j) {
    order[j].resize(m);
    std::iota(order[j].begin(), order[j].end(), 0);
    std::stable_sort(order[j].begin(), order[j].end(),
                     [&](int a, int b) { return inst.distance(j, a) < inst.distance(j, b); });
  }
  const int need = inst.max_requirement();
  OracleResult best;
  bool have = false;
  std::vector<int> open(m, 0);
  while (true) {
    ++best.nodes;
    const int total = std::accumulate(open.begin(), open.end(), 0);
    if (total >= need) {
      double cost = 0;
      for (int i = 0; i < m; ++i) cost += inst.facility_cost(i) * open[i];
      for (int j = 0; j < n && (!have || cost < best.cost); ++j) {
        int left = inst.requirement(j);
        for (int i : order[j]) {
          const int take = std::min(left, open[i]);
          cost += take * inst.distance(j, i);
          left -= take;
          if (left == 0) break;
        }
      }
      if (!have || cost < best.cost) {
        best.cost = cost;
        best.open_count = open;
        have = true;
      }
    }
    int pos = 0;
    while (pos < m && open[pos] == cap) open[pos++] = 0;
    if (pos == m) break;
    ++open[pos];
  }
  if (!have) throw InputError("no open-count vector within the cap serves every client");
  best.solution = ConnectClients(inst, best.open_count, order);
  best.cost = best.solution.cost;
  return best;
}

ExperimentReport MonteCarloEval(const Instance& inst, const MonteCarloOptions& opts,
                                const std::string& instance_id) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport rep;
  rep.instance_id = instance_id;
  rep.grid = opts.grid;
  rep.trials = opts.trials;
  rep.seed = opts.seed;
  rep.reduce_rbar = opts.reduce_rbar;

  const FractionalSolution fs = SolveFtfpRelaxation(inst);
  rep.lp_value = fs.total();
  const CompleteSolution complete = MakeComplete(inst, fs);

  IntegralSolution on_rows;
  if (opts.reduce_rbar > 0) {
    const DemandSplit split = ReduceDemands(complete.instance, complete.solution, opts.reduce_rbar);
    const Algorithm1Result alg =
        RunAlgorithm1(split.residual_instance, split.residual, opts.grid, opts.trials, opts.seed);
    on_rows = RecombineSolutions(complete.instance, split, alg.best);
    rep.per_gamma = alg.per_gamma;
    rep.total_runs = alg.total_runs;
    rep.repaired_runs = alg.repaired_runs;
    rep.best_gamma = alg.best_gamma;
  } else {
    Algorithm1Result alg = RunAlgorithm1(complete.instance, complete.solution, opts.grid, opts.trials, opts.seed);
    on_rows = std::move(alg.best);
    rep.per_gamma = alg.per_gamma;
    rep.total_runs = alg.total_runs;
    rep.repaired_runs = alg.repaired_runs;
    rep.best_gamma = alg.best_gamma;
  }
  rep.best = ProjectToLocations(on_rows, complete.origin, inst);
  rep.best_cost = rep.best.cost;
  rep.ratio = rep.lp_value > 0 ? rep.best_cost / rep.lp_value : 1.0;
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string ReportSummaryCsv(const ExperimentReport& r) {
  std::string out = "instance,lp,best_cost,ratio,grid,trials,seed,rbar,runs,repaired_runs,best_gamma\n";
  out += r.instance_id + "," + FormatReal(r.lp_value) + "," + FormatReal(r.best_cost) + "," +
         FormatReal(r.ratio) + "," + std::to_string(r.grid) + "," + std::to_string(r.trials) + "," +
         std::to_string(r.seed) + "," + std::to_string(r.reduce_rbar) + "," + std::to_string(r.total_runs) +
         "," + std::to_string(r.repaired_runs) + "," + FormatReal(r.best_gamma) + "\n";
  return out;
}

std::string ReportGammaCsv(const ExperimentReport& r) {
  std::string out = "l,gamma,runs,mean_cost,min_cost,repaired_runs\n";
  for (const GammaStats& g : r.per_gamma) {
    out += std::to_string(g.index) + "," + FormatReal(g.gamma) + "," + std::to_string(g.runs) + "," +
           FormatReal(g.mean_cost) + "," + FormatReal(g.min_cost) + "," + std::to_string(g.repaired_runs) + "\n";
  }
  return out;
}

namespace {

DrCaseResult RunDrCase(const std::vector<double>& w, int samples, int subsets, double sigmas, uint64_t seed) {
  const int k = static_cast<int>(w.size());
  DrCaseResult res;
  res.weights = w;
  Rng pick(DeriveSeed(seed, 0xC0FFEE));
  std::vector<std::vector<int>> sets;
  if (k >= 2) {
    for (int s = 0; s < subsets; ++s) {
      const int size = static_cast<int>(pick.UniformInt(2, std::min(k, 4)));
      std::vector<int> idx(k);
      std::iota(idx.begin(), idx.end(), 0);
      for (int a = 0; a < size; ++a) std::swap(idx[a], idx[pick.UniformInt(a, k - 1)]);
      idx.resize(size);
      std::sort(idx.begin(), idx.end());
      sets.push_back(idx);
    }
  }
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  const double lo = std::floor(sum + kRoundingSnap), hi = std::ceil(sum - kRoundingSnap);
  std::vector<long> ones(k, 0), all1(sets.size(), 0), all0(sets.size(), 0);
  Rng rng(seed);
  std::vector<double> v(k);
  for (int t = 0; t < samples; ++t) {
    v = w;
    DependentRound(v, rng);
    double total = 0;
    for (int i = 0; i < k; ++i) {
      ones[i] += v[i] > 0.5;
      total += v[i];
    }
    if (total < lo - 0.5 || total > hi + 0.5) {
      if (res.sum_ok) res.message = "sum " + FormatReal(total) + " outside [" + FormatReal(lo) + ", " + FormatReal(hi) + "]";
      res.sum_ok = false;
    }
    for (size_t s = 0; s < sets.size(); ++s) {
      bool a1 = true, a0 = true;
      for (int i : sets[s]) {
        a1 = a1 && v[i] > 0.5;
        a0 = a0 && v[i] < 0.5;
      }
      all1[s] += a1;
      all0[s] += a0;
    }
  }
  const double N = samples;
  for (int i = 0; i < k; ++i) {
    const double se = std::sqrt(std::max(w[i] * (1 - w[i]), 0.0) / N);
    const double diff = std::abs(ones[i] / N - w[i]);
    const double z = se > 0 ? diff / se : (diff > 0 ? INFINITY : 0.0);
    res.worst_marginal_z = std::max(res.worst_marginal_z, z);
    if (z > sigmas) {
      res.marginal_ok = false;
      res.message = "marginal " + std::to_string(i) + " z = " + FormatReal(z);
    }
  }
  for (size_t s = 0; s < sets.size(); ++s) {
    for (int b = 0; b < 2; ++b) {
      double p = 1;
      for (int i : sets[s]) p *= b ? w[i] : 1 - w[i];
      const double se = std::max(std::sqrt(p * (1 - p) / N), 1.0 / N);
      const double freq = (b ? all1[s] : all0[s]) / N;
      const double excess = (freq - p) / se;
      res.worst_correlation_excess = std::max(res.worst_correlation_excess, excess);
      if (excess > sigmas) {
        res.correlation_ok = false;
        res.message = std::string("all-") + (b ? "ones" : "zeros") + " event exceeds the product bound";
      }
    }
  }
  return res;
}

}  // namespace

DrCaseResult DrCheckVector(const std::vector<double>& weights, int samples, int subsets, double sigmas,
                           uint64_t seed) {
  DrCaseResult first = RunDrCase(weights, samples, subsets, sigmas, seed);
  if (first.ok()) return first;
  DrCaseResult second = RunDrCase(weights, samples, subsets, sigmas, DeriveSeed(seed, 1, 1));
  second.attempts = 2;
  if (second.ok()) return second;
  // Sum preservation is exact: any violation in either run is a failure.
  second.sum_ok = first.sum_ok && second.sum_ok;
  return second;
}

bool DrSuiteReport::ok() const {
  return std::all_of(cases.begin(), cases.end(), [](const DrCaseResult& c) { return c.ok(); });
}

std::string DrSuiteReport::Csv() const {
  std::string out = "case,size,weights,marginal_ok,sum_ok,correlation_ok,worst_marginal_z,worst_correlation_excess,attempts\n";
  for (size_t c = 0; c < cases.size(); ++c) {
    const DrCaseResult& r = cases[c];
    std::string ws;
    for (size_t i = 0; i < r.weights.size(); ++i) ws += (i ? " " : "") + FormatReal(r.weights[i]);
    out += std::to_string(c) + "," + std::to_string(r.weights.size()) + "," + ws + "," +
           (r.marginal_ok ? "1" : "0") + "," + (r.sum_ok ? "1" : "0") + "," + (r.correlation_ok ? "1" : "0") +
           "," + FormatReal(r.worst_marginal_z) + "," + FormatReal(r.worst_correlation_excess) + "," +
           std::to_string(r.attempts) + "\n";
  }
  return out;
}

DrSuiteReport DrPropertySuite(const DrSuiteOptions& opts) {
  DrSuiteReport report;
  uint64_t index = 0;
  for (const std::vector<double>& w : opts.fixed) {
    report.cases.push_back(DrCheckVector(w, opts.samples, opts.subsets_per_vector, opts.sigmas,
                                         DeriveSeed(opts.seed, 1000, index++)));
  }
  Rng gen(DeriveSeed(opts.seed, 2000));
  for (int size : opts.sizes) {
    for (int v = 0; v < opts.vectors_per_size; ++v) {
      std::vector<double> w(size);
      for (double& x : w) x = gen.Uniform(0.02, 0.98);
      report.cases.push_back(DrCheckVector(w, opts.samples, opts.subsets_per_vector, opts.sigmas,
                                           DeriveSeed(opts.seed, 3000, index++)));
    }
  }
  return report;
}

}  // namespace ftfp
