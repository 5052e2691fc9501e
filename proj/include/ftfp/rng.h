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

#ifndef FTFP_RNG_H_
#define FTFP_RNG_H_

#include <cstdint>
#include <random>

namespace ftfp {

// Deterministic random source. Wraps mt19937_64 (whose output sequence is
// fixed by the standard) and does its own conversion to doubles and integer
// ranges, so streams are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  // Uniform integer in [lo, hi].
  int64_t UniformInt(int64_t lo, int64_t hi);
  bool Bernoulli(double p) { return Uniform() < p; }

  uint64_t NextU64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Seed for an independent stream identified by (seed, a, b).
uint64_t DeriveSeed(uint64_t seed, uint64_t a, uint64_t b = 0);

}  // namespace ftfp

#endif  // FTFP_RNG_H_
