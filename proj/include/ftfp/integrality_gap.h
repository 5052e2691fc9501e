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

#ifndef FTFP_INTEGRALITY_GAP_H_
#define FTFP_INTEGRALITY_GAP_H_

#include "ftfp/generators.h"

namespace ftfp {

struct GapEval {
  GapInstanceParams params;
  double z_lp = 0;
  double z_int = 0;
  double ratio = 0;
  // Set by GapSearch: whether the alpha scan at the chosen f_c had a single
  // local minimum.
  bool alpha_unimodal = true;
};

// r (1 + f_c / l).
double GapLpCost(int r, int l, double fc);
// alpha f_c + r + 2 sum_{i<r} C(l,i) alpha^i (1-alpha)^(l-i) (r-i), with the
// binomial term evaluated in log space. alpha must lie in (0, 1].
double GapIntegralCost(int r, int l, double fc, double alpha);

// Uses p.r, p.l, p.fc, p.alpha; n only matters for explicit instances.
GapEval GapCosts(const GapInstanceParams& p);

struct GapSearchOptions {
  double fc_min = 1.0;
  double fc_max = 1e4;
  int fc_scan = 200;
  double alpha_min = 1e-7;
  int alpha_scan = 10000;
};

// Cheapest alpha for a fixed f_c (the integral solution's best response).
GapEval MinimizeOverAlpha(int r, int l, double fc, const GapSearchOptions& opt = {});

// max over f_c of min over alpha of z_int / z_lp.
GapEval GapSearch(int r, int l, const GapSearchOptions& opt = {});

}  // namespace ftfp

#endif  // FTFP_INTEGRALITY_GAP_H_
