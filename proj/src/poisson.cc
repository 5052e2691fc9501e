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

#include "ftfp/poisson.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "ftfp/errors.h"

namespace ftfp {
namespace {

// ln(n!) - ln(sqrt(2 pi n) (n/e)^n).
double StirlingError(double n) {
  constexpr double kS0 = 1.0 / 12, kS1 = 1.0 / 360, kS2 = 1.0 / 1260, kS3 = 1.0 / 1680,
                   kS4 = 1.0 / 1188;
  if (n <= 15) {
    return std::lgamma(n + 1) - (n + 0.5) * std::log(n) + n -
           0.5 * std::log(2 * std::numbers::pi);
  }
  const double nn = n * n;
  if (n > 500) return (kS0 - kS1 / nn) / n;
  if (n > 80) return (kS0 - (kS1 - kS2 / nn) / nn) / n;
  if (n > 35) return (kS0 - (kS1 - (kS2 - kS3 / nn) / nn) / nn) / n;
  return (kS0 - (kS1 - (kS2 - (kS3 - kS4 / nn) / nn) / nn) / nn) / n;
}

// x log(x / np) + np - x, without cancellation when x is close to np.
double DevianceTerm(double x, double np) {
  if (std::abs(x - np) < 0.1 * (x + np)) {
    double v = (x - np) / (x + np);
    double s = (x - np) * v;
    double ej = 2 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
    return s;
  }
  return x * std::log(x / np) + np - x;
}

}  // namespace

double LogPoissonPmf(double mean, long i) {
  if (!(mean >= 0)) throw InputError("Poisson mean must be nonnegative");
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  if (i < 0) return kNegInf;
  if (mean == 0) return i == 0 ? 0.0 : kNegInf;
  if (i == 0) return -mean;
  const double x = static_cast<double>(i);
  return -StirlingError(x) - DevianceTerm(x, mean) - 0.5 * std::log(2 * std::numbers::pi * x);
}

double PoissonPmf(double mean, long i) {
  if (!(mean >= 0)) throw InputError("Poisson mean must be nonnegative");
  if (i < 0) return 0.0;
  if (mean == 0) return i == 0 ? 1.0 : 0.0;
  if (i == 0) return std::exp(-mean);
  const double x = static_cast<double>(i);
  return std::exp(-StirlingError(x) - DevianceTerm(x, mean)) /
         std::sqrt(2 * std::numbers::pi * x);
}

double ExpectedShortfall(double mean, long k) {
  double s = 0;
  for (long i = 0; i < k; ++i) s += static_cast<double>(k - i) * PoissonPmf(mean, i);
  return s;
}

double ExpectedUsefulOpens(double mean, long k) {
  if (k < 1) throw InputError("requirement must be positive");
  if (!(mean >= 0)) throw InputError("Poisson mean must be nonnegative");
  if (mean >= static_cast<double>(k)) {
    return static_cast<double>(k) - ExpectedShortfall(mean, k);
  }
  // Below the mode the upper tail is summed directly; P(X >= k) as 1 - cdf
  // would lose all precision for small means.
  double body = 0;
  for (long i = 1; i < k; ++i) body += static_cast<double>(i) * PoissonPmf(mean, i);
  double tail = 0;
  for (long i = k;; ++i) {
    const double p = PoissonPmf(mean, i);
    tail += p;
    if (p <= 1e-18 * tail || p == 0) break;
  }
  return body + static_cast<double>(k) * tail;
}

double ShortfallRatio(long r, double eps) {
  if (r < 1 || !(eps > 0)) throw InputError("shortfall ratio needs r >= 1 and eps > 0");
  return ExpectedShortfall((1 + eps) * static_cast<double>(r), r) / static_cast<double>(r);
}

double LogShortfallRatio(long r, double eps) {
  if (r < 1 || !(eps > 0)) throw InputError("shortfall ratio needs r >= 1 and eps > 0");
  const double mean = (1 + eps) * static_cast<double>(r);
  std::vector<double> terms;
  terms.reserve(r);
  for (long i = 0; i < r; ++i) terms.push_back(std::log(static_cast<double>(r - i)) + LogPoissonPmf(mean, i));
  const double top = *std::max_element(terms.begin(), terms.end());
  double s = 0;
  for (double t : terms) s += std::exp(t - top);
  return top + std::log(s) - std::log(static_cast<double>(r));
}

}  // namespace ftfp
