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

#include "ftfp/integrality_gap.h"

#include <cmath>
#include <vector>

#include "ftfp/errors.h"
#include "ftfp/optimize.h"

namespace ftfp {

double GapLpCost(int r, int l, double fc) { return r * (1.0 + fc / l); }

double GapIntegralCost(int r, int l, double fc, double alpha) {
  if (!(alpha > 0 && alpha <= 1)) throw InputError("alpha must lie in (0, 1]");
  const double log_alpha = std::log(alpha);
  const double log_rest = std::log1p(-alpha);  // -inf at alpha = 1
  const double lg_l = std::lgamma(l + 1.0);
  double shortfall = 0;
  for (int i = 0; i < r && i <= l; ++i) {
    double log_term = lg_l - std::lgamma(i + 1.0) - std::lgamma(l - i + 1.0);
    if (i > 0) log_term += i * log_alpha;
    if (l - i > 0) log_term += (l - i) * log_rest;
    shortfall += std::exp(log_term) * (r - i);
  }
  return alpha * fc + r + 2.0 * shortfall;
}

GapEval GapCosts(const GapInstanceParams& p) {
  // The closed form does not need l to be a multiple of r; only explicit
  // instance generation does.
  if (p.r < 1 || p.l < p.r) throw InputError("gap costs: need 1 <= r <= l");
  if (!(p.fc > 0)) throw InputError("gap costs: f_c must be positive");
  GapEval eval;
  eval.params = p;
  eval.z_lp = GapLpCost(p.r, p.l, p.fc);
  eval.z_int = GapIntegralCost(p.r, p.l, p.fc, p.alpha);
  eval.ratio = eval.z_int / eval.z_lp;
  return eval;
}

GapEval MinimizeOverAlpha(int r, int l, double fc, const GapSearchOptions& opt) {
  auto ratio = [&](double a) { return GapIntegralCost(r, l, fc, a) / GapLpCost(r, l, fc); };
  // Log-spaced scan of (alpha_min, 1], then golden-section inside the
  // bracket around the best grid point.
  const int n = opt.alpha_scan;
  std::vector<double> grid(n), value(n);
  const double lo = std::log(opt.alpha_min);
  for (int k = 0; k < n; ++k) {
    grid[k] = k + 1 == n ? 1.0 : std::exp(lo + (0 - lo) * k / (n - 1));
    value[k] = ratio(grid[k]);
  }
  int best = 0, local_minima = 0;
  for (int k = 0; k < n; ++k) {
    if (value[k] < value[best]) best = k;
    const bool left = k == 0 || value[k] < value[k - 1];
    const bool right = k + 1 == n || value[k] <= value[k + 1];
    if (left && right) ++local_minima;
  }
  double alpha = grid[best], val = value[best];
  if (best > 0 && best + 1 < n) {
    const double a = GoldenSectionMinimize(ratio, grid[best - 1], grid[best + 1], 1e-13);
    if (ratio(a) < val) alpha = a, val = ratio(a);
  }
  GapEval eval;
  eval.params = {.n = l / r, .l = l, .fc = fc, .r = r, .alpha = alpha};
  eval.z_lp = GapLpCost(r, l, fc);
  eval.z_int = GapIntegralCost(r, l, fc, alpha);
  eval.ratio = eval.z_int / eval.z_lp;
  eval.alpha_unimodal = local_minima == 1;
  return eval;
}

GapEval GapSearch(int r, int l, const GapSearchOptions& opt) {
  if (r < 1 || l < r) throw InputError("gap search: need 1 <= r <= l");
  auto inner = [&](double fc) { return MinimizeOverAlpha(r, l, fc, opt).ratio; };
  const int n = opt.fc_scan;
  std::vector<double> grid(n), value(n);
  const double lo = std::log(opt.fc_min), hi = std::log(opt.fc_max);
  int best = 0;
  for (int k = 0; k < n; ++k) {
    grid[k] = std::exp(lo + (hi - lo) * k / (n - 1));
    value[k] = inner(grid[k]);
    if (value[k] > value[best]) best = k;
  }
  double fc = grid[best];
  if (best > 0 && best + 1 < n) {
    const double refined =
        GoldenSectionMinimize([&](double f) { return -inner(f); }, grid[best - 1], grid[best + 1], 1e-9);
    if (inner(refined) > value[best]) fc = refined;
  }
  return MinimizeOverAlpha(r, l, fc, opt);
}

}  // namespace ftfp
