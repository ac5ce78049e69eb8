// Copyright 2026 The cransched Authors
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

// Keyed random streams with a fixed, platform-independent bit stream.
//
// Each stream is identified by a root seed plus a path of integers, e.g.
// (seed, kFading, u, b, z). The key is folded through the SplitMix64
// finalizer and draws are SplitMix64 outputs of key + i * golden-gamma.
// Distribution transforms are written out here (no <random>
// distributions, whose outputs differ between standard libraries).

#ifndef CRANSCHED_RNG_H_
#define CRANSCHED_RNG_H_

#include <cstdint>
#include <initializer_list>

namespace cran {

std::uint64_t SplitMix64(std::uint64_t x);

class RandomStream {
 public:
  RandomStream(std::uint64_t root_seed,
               std::initializer_list<std::uint64_t> path);

  std::uint64_t NextU64();
  // Uniform on [0, 1) with 53 random bits.
  double Uniform();
  // Uniform on (0, 1).
  double UniformOpen();
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  // Standard normal via Box-Muller (cosine branch only).
  double Normal();
  // Unit-mean exponential.
  double Exponential();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Stream tags used by the channel simulator.
enum StreamTag : std::uint64_t {
  kUserPositionStream = 1,
  kShadowingStream = 2,
  kFadingStream = 3,
};

}  // namespace cran

#endif  // CRANSCHED_RNG_H_
