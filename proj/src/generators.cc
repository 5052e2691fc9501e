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

#include "ftfp/generators.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ftfp/errors.h"
#include "ftfp/rng.h"

namespace ftfp {

Instance GenerateEuclidean(const EuclideanParams& p) {
  if (p.num_facilities < 1 || p.num_clients < 1) {
    throw InputError("euclidean generator needs at least one facility and one client");
  }
  if (p.min_requirement < 1 || p.max_requirement < p.min_requirement) {
    throw InputError("empty requirement range");
  }
  Rng rng(p.seed);
  std::vector<double> fx(p.num_facilities), fy(p.num_facilities), costs(p.num_facilities);
  for (int i = 0; i < p.num_facilities; ++i) {
    fx[i] = rng.Uniform();
    fy[i] = rng.Uniform();
    costs[i] = rng.Uniform(kEuclideanMinCost, kEuclideanMaxCost);
  }
  std::vector<int> req(p.num_clients);
  std::vector<double> dist(static_cast<size_t>(p.num_clients) * p.num_facilities);
  for (int j = 0; j < p.num_clients; ++j) {
    const double cx = rng.Uniform();
    const double cy = rng.Uniform();
    req[j] = static_cast<int>(rng.UniformInt(p.min_requirement, p.max_requirement));
    for (int i = 0; i < p.num_facilities; ++i) {
      dist[static_cast<size_t>(j) * p.num_facilities + i] = std::hypot(cx - fx[i], cy - fy[i]);
    }
  }
  return Instance(std::move(costs), std::move(req), std::move(dist));
}

void CheckGapParams(const GapInstanceParams& p) {
  if (p.r < 1) throw InputError("gap instance: r must be positive");
  if (p.l < 1 || p.l % p.r != 0) throw InputError("gap instance: l must be a positive multiple of r");
  if (!(p.fc > 0)) throw InputError("gap instance: f_c must be positive");
  if (!(p.alpha > 0 && p.alpha <= 1)) throw InputError("gap instance: alpha must lie in (0, 1]");
  if (p.n < p.l / p.r) throw InputError("gap instance: n must be at least l / r");
}

Instance GenerateGapInstance(const GapInstanceParams& p, long max_clients) {
  CheckGapParams(p);
  const int m = p.l / p.r;
  // |C| = C(n, m), computed incrementally with an early cap check.
  double count = 1;
  for (int t = 1; t <= m; ++t) {
    count = count * (p.n - m + t) / t;
    if (count > static_cast<double>(max_clients) + 0.5) {
      throw InputError("gap instance has more than " + std::to_string(max_clients) + " clients");
    }
  }
  const long num_clients = std::lround(count);
  const int num_rows = p.n * p.r;
  const double near = 1.0 / static_cast<double>(num_clients);
  const double far = 3.0 / static_cast<double>(num_clients);

  std::vector<double> dist;
  dist.reserve(static_cast<size_t>(num_clients) * num_rows);
  std::vector<int> subset(m);
  for (int t = 0; t < m; ++t) subset[t] = t;
  std::vector<char> member(p.n);
  while (true) {
    std::fill(member.begin(), member.end(), 0);
    for (int a : subset) member[a] = 1;
    for (int a = 0; a < p.n; ++a) {
      for (int c = 0; c < p.r; ++c) dist.push_back(member[a] ? near : far);
    }
    // Next m-combination in lexicographic order.
    int t = m - 1;
    while (t >= 0 && subset[t] == p.n - m + t) --t;
    if (t < 0) break;
    ++subset[t];
    for (int u = t + 1; u < m; ++u) subset[u] = subset[u - 1] + 1;
  }
  std::vector<double> costs(num_rows, p.fc / (static_cast<double>(p.n) * p.r));
  std::vector<int> req(num_clients, p.r);
  return Instance(std::move(costs), std::move(req), std::move(dist));
}

Instance GenerateSetCoverInstance(const SetCoverInput& sc) {
  const int nx = sc.ground_set_size;
  const int ns = static_cast<int>(sc.sets.size());
  if (nx < 1 || ns < 1) throw InputError("set cover input needs elements and sets");
  if (sc.k < 1 || sc.k > ns) throw InputError("set cover input: k must lie in [1, |S|]");
  if (sc.r < 2) throw InputError("set cover input: r must be at least 2");
  if (!(sc.gamma > 0)) throw InputError("set cover input: gamma must be positive");
  std::vector<char> covered(nx, 0);
  std::vector<std::vector<char>> contains(ns, std::vector<char>(nx, 0));
  for (int s = 0; s < ns; ++s) {
    for (int x : sc.sets[s]) {
      if (x < 0 || x >= nx) throw InputError("set cover input: element out of range");
      contains[s][x] = 1;
      covered[x] = 1;
    }
  }
  for (int x = 0; x < nx; ++x) {
    if (!covered[x]) throw InputError("element " + std::to_string(x) + " is covered by no set");
  }

  const int copies = sc.r - 1;
  const int nf = ns + nx * copies;
  // Nodes: clients [0, nx), facilities [nx, nx + nf). Edges only between a
  // client and a facility; Floyd-Warshall over the union gives the closure.
  const int nodes = nx + nf;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> d(static_cast<size_t>(nodes) * nodes, inf);
  auto at = [&](int a, int b) -> double& { return d[static_cast<size_t>(a) * nodes + b]; };
  for (int a = 0; a < nodes; ++a) at(a, a) = 0;
  for (int x = 0; x < nx; ++x) {
    for (int s = 0; s < ns; ++s) {
      const double c = contains[s][x] ? 1.0 : 3.0;
      at(x, nx + s) = at(nx + s, x) = c;
    }
    for (int y = 0; y < nx; ++y) {
      for (int c = 0; c < copies; ++c) {
        const int f = nx + SingletonRow(sc, y, c);
        at(x, f) = at(f, x) = (x == y) ? 0.0 : 2.0;
      }
    }
  }
  for (int k = 0; k < nodes; ++k) {
    for (int a = 0; a < nodes; ++a) {
      const double dak = at(a, k);
      if (dak == inf) continue;
      for (int b = 0; b < nodes; ++b) {
        const double via = dak + at(k, b);
        if (via < at(a, b)) at(a, b) = via;
      }
    }
  }

  std::vector<double> dist(static_cast<size_t>(nx) * nf);
  for (int x = 0; x < nx; ++x) {
    for (int f = 0; f < nf; ++f) dist[static_cast<size_t>(x) * nf + f] = at(x, nx + f);
  }
  std::vector<double> costs(nf, 0.0);
  const double set_cost = sc.gamma * nx / sc.k;
  for (int s = 0; s < ns; ++s) costs[s] = set_cost;
  return Instance(std::move(costs), std::vector<int>(nx, sc.r), std::move(dist));
}

}  // namespace ftfp
