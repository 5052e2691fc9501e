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

#ifndef FTFP_POISSON_H_
#define FTFP_POISSON_H_

namespace ftfp {

// P(X = i) for X ~ Poisson(mean), evaluated with Loader's saddle-point
// expansion so that large arguments keep full relative precision.
double PoissonPmf(double mean, long i);

// ln P(X = i); -infinity when the probability is exactly zero.
double LogPoissonPmf(double mean, long i);

// Expected number of usable opens from a set of volume `mean` when at most
// k of them count: E[min(X, k)] = sum_{i<k} i P(X=i) + k P(X>=k).
double ExpectedUsefulOpens(double mean, long k);

// E[(k - X)^+] = k - ExpectedUsefulOpens(mean, k), summed directly to avoid
// the cancellation when the shortfall is tiny.
double ExpectedShortfall(double mean, long k);

// (r - h((1 + eps) r, r)) / r.
double ShortfallRatio(long r, double eps);

// ln ShortfallRatio(r, eps), computed in log space so it stays finite
// long after the ratio itself underflows.
double LogShortfallRatio(long r, double eps);

}  // namespace ftfp

#endif  // FTFP_POISSON_H_
