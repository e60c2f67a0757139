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

#ifndef LPGRAPH_INSTANCE_FORGE_H_
#define LPGRAPH_INSTANCE_FORGE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "lpgraph/lp_instance.h"

namespace lpgraph {

// Random-LP recipe. Defaults reproduce the published experiments: m = 10,
// n = 50, 100 standard-normal nonzeros at distinct uniform positions,
// b, c ~ U[-1, 1] with c scaled by 0.01, bounds ~ N(0, 10) swapped when out of
// order, rows "<=" with probability 0.7 and "=" otherwise.
struct GenConfig {
  int m = 10;
  int n = 50;
  int nnz = 100;
  double c_scale = 0.01;
  double bound_sigma = 10.0;  // standard deviation
  double p_le = 0.7;
  double p_eq = 0.3;
  // Extensions outside the published recipe, zero by default.
  double p_ge = 0.0;
  double p_infinite_bound = 0.0;
  uint64_t seed = 0;

  void Validate() const;
  bool operator==(const GenConfig&) const = default;
};

LpInstance GenRandomLp(const GenConfig& config);

enum class TwinVariant { kInfeasible, kUnbounded, kBounded };

std::string_view TwinVariantName(TwinVariant variant);
TwinVariant ParseTwinVariant(std::string_view name);

// A pair of WL-indistinguishable LPs on k constraints and k variables,
// minimizing sum_j x_j: the first wires its rows x_i + x_{i+1} around one
// cycle through all k variables, the second around two cycles of k/2
// variables each. k = 4 gives the classic three pairs:
//   kInfeasible: rows "= 1", x_j >= 1;
//   kUnbounded:  rows "<= 1", x_j <= 1;
//   kBounded:    rows "= 1", x_j <= 1.
struct TwinFamily {
  int k = 4;
  TwinVariant variant = TwinVariant::kBounded;
};

std::pair<LpInstance, LpInstance> GenTwinPair(const TwinFamily& family);

enum class LiftPattern { kCycle, kDisjoint };

std::string_view LiftPatternName(LiftPattern pattern);
LiftPattern ParseLiftPattern(std::string_view name);

// r-fold lift of a single LP. Copy s of constraint i is row i * r + s and
// copy s of variable j is column j * r + s; features are copied. Each
// nonzero A_ij is split in halves wired from constraint copy s to variable
// copies s and next(s), where next(s) = s + 1 mod r for kCycle and the
// partner of s in consecutive blocks of two for kDisjoint (a lone last copy
// keeps the whole coefficient). Every copy of i therefore sees total weight
// A_ij into the copies of j and vice versa.
LpInstance Lift(const LpInstance& base, int r, LiftPattern pattern);

// (Lift(base, r, kCycle), Lift(base, r, pattern) relabelled by a random
// permutation drawn from `seed`). The two are WL-indistinguishable by
// construction. Requires r >= 2.
std::pair<LpInstance, LpInstance> LiftReplicate(const LpInstance& base, int r,
                                                LiftPattern pattern,
                                                uint64_t seed);

struct LabeledRecord {
  LpInstance lp;
  bool feasible = false;
  bool bounded = false;  // true iff an optimum exists
  std::optional<double> objective;
  std::optional<std::vector<double>> solution;
  std::optional<std::vector<double>> min_norm_solution;

  bool operator==(const LabeledRecord&) const = default;
};

struct LabelOptions {
  bool min_norm = false;
};

// Solves every LP (in parallel, capped by LPGRAPH_THREADS). Instances whose
// solve stalls are left out; their input positions go to `stalled` if given.
std::vector<LabeledRecord> LabelDataset(std::span<const LpInstance> lps,
                                        const LabelOptions& options = {},
                                        std::vector<int>* stalled = nullptr);

}  // namespace lpgraph

#endif  // LPGRAPH_INSTANCE_FORGE_H_
