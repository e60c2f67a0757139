// Copyright 2026 The lpgraph Authors
//
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

#ifndef LPGRAPH_RNG_H_
#define LPGRAPH_RNG_H_

#include <cstdint>
#include <random>
#include <vector>

namespace lpgraph {

// Derives the seed of substream `stream` from a base seed (SplitMix64
// finalizer), so item i of a dataset depends only on (seed, i).
uint64_t StreamSeed(uint64_t seed, uint64_t stream);

// mt19937_64 with hand-rolled distributions. The engine's output sequence is
// fixed by the standard, the <random> distributions are not, so datasets stay
// identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double Uniform01();
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }
  // Standard normal via Box-Muller; consumes two uniforms per call.
  double Normal();
  double Normal(double mean, double stddev) { return mean + stddev * Normal(); }
  // Uniform integer in [0, bound) by rejection.
  uint64_t UniformInt(uint64_t bound);
  // Fisher-Yates, last position first.
  void Shuffle(std::vector<int>& values);
  // Uniformly random permutation of 0..size-1.
  std::vector<int> Permutation(int size);

 private:
  std::mt19937_64 engine_;
};

}  // namespace lpgraph

#endif  // LPGRAPH_RNG_H_
