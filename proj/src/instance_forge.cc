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

#include "lpgraph/instance_forge.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lpgraph/errors.h"
#include "lpgraph/lp_graph.h"
#include "lpgraph/lp_solver.h"
#include "lpgraph/min_norm.h"
#include "lpgraph/parallel.h"
#include "lpgraph/rng.h"

namespace lpgraph {

void GenConfig::Validate() const {
  if (m < 0 || n < 1) throw InvalidArgument("need m >= 0 and n >= 1");
  if (nnz < 0 || static_cast<long long>(nnz) > static_cast<long long>(m) * n) {
    throw InvalidArgument("nnz must lie in [0, m * n]");
  }
  if (p_le < 0 || p_eq < 0 || p_ge < 0 ||
      std::abs(p_le + p_eq + p_ge - 1.0) > 1e-12) {
    throw InvalidArgument("row-sense probabilities must sum to one");
  }
  if (p_infinite_bound < 0 || p_infinite_bound > 1) {
    throw InvalidArgument("p_infinite_bound must lie in [0, 1]");
  }
  if (!(bound_sigma >= 0)) throw InvalidArgument("bound_sigma must be >= 0");
}

LpInstance GenRandomLp(const GenConfig& config) {
  config.Validate();
  Rng rng(config.seed);
  const int m = config.m;
  const int n = config.n;

  // Partial Fisher-Yates over the m * n cells.
  std::vector<int> cells(static_cast<size_t>(m) * n);
  std::iota(cells.begin(), cells.end(), 0);
  for (int k = 0; k < config.nnz; ++k) {
    const auto pick = k + static_cast<int>(rng.UniformInt(cells.size() - k));
    std::swap(cells[k], cells[pick]);
  }
  std::vector<Triplet> a;
  a.reserve(config.nnz);
  for (int k = 0; k < config.nnz; ++k) {
    a.push_back({cells[k] / n, cells[k] % n, rng.Normal()});
  }

  std::vector<double> b(m), c(n);
  for (double& v : b) v = rng.Uniform(-1.0, 1.0);
  for (double& v : c) v = config.c_scale * rng.Uniform(-1.0, 1.0);

  std::vector<Bound> lower(n), upper(n);
  for (int j = 0; j < n; ++j) {
    double l = rng.Normal(0.0, config.bound_sigma);
    double u = rng.Normal(0.0, config.bound_sigma);
    if (l > u) std::swap(l, u);
    lower[j] = l;
    upper[j] = u;
  }

  std::vector<Comparison> senses(m);
  for (auto& sense : senses) {
    const double draw = rng.Uniform01();
    if (draw < config.p_le) {
      sense = Comparison::kLessEqual;
    } else if (draw < config.p_le + config.p_eq) {
      sense = Comparison::kEqual;
    } else {
      sense = Comparison::kGreaterEqual;
    }
  }

  if (config.p_infinite_bound > 0.0) {
    for (int j = 0; j < n; ++j) {
      if (rng.Uniform01() < config.p_infinite_bound) lower[j].reset();
      if (rng.Uniform01() < config.p_infinite_bound) upper[j].reset();
    }
  }
  return LpInstance(m, n, std::move(a), std::move(b), std::move(senses),
                    std::move(c), std::move(lower), std::move(upper));
}

std::string_view TwinVariantName(TwinVariant variant) {
  switch (variant) {
    case TwinVariant::kInfeasible:
      return "infeasible";
    case TwinVariant::kUnbounded:
      return "unbounded";
    case TwinVariant::kBounded:
      return "bounded";
  }
  return "?";
}

TwinVariant ParseTwinVariant(std::string_view name) {
  if (name == "infeasible") return TwinVariant::kInfeasible;
  if (name == "unbounded") return TwinVariant::kUnbounded;
  if (name == "bounded") return TwinVariant::kBounded;
  throw InvalidArgument("unknown twin variant '" + std::string(name) + "'");
}

std::pair<LpInstance, LpInstance> GenTwinPair(const TwinFamily& family) {
  const int k = family.k;
  if (k < 4 || k % 2 != 0) {
    throw InvalidArgument("twin family needs an even k >= 4");
  }
  Comparison sense = Comparison::kEqual;
  Bound lower, upper;
  switch (family.variant) {
    case TwinVariant::kInfeasible:
      lower = 1.0;
      break;
    case TwinVariant::kUnbounded:
      sense = Comparison::kLessEqual;
      upper = 1.0;
      break;
    case TwinVariant::kBounded:
      upper = 1.0;
      break;
  }
  auto build = [&](int cycle_length) {
    std::vector<Triplet> a;
    for (int start = 0; start < k; start += cycle_length) {
      for (int t = 0; t < cycle_length; ++t) {
        const int row = start + t;
        a.push_back({row, start + t, 1.0});
        a.push_back({row, start + (t + 1) % cycle_length, 1.0});
      }
    }
    return LpInstance(k, k, std::move(a), std::vector<double>(k, 1.0),
                      std::vector<Comparison>(k, sense),
                      std::vector<double>(k, 1.0), std::vector<Bound>(k, lower),
                      std::vector<Bound>(k, upper));
  };
  return {build(k), build(k / 2)};
}

std::string_view LiftPatternName(LiftPattern pattern) {
  return pattern == LiftPattern::kCycle ? "cycle" : "disjoint";
}

LiftPattern ParseLiftPattern(std::string_view name) {
  if (name == "cycle") return LiftPattern::kCycle;
  if (name == "disjoint") return LiftPattern::kDisjoint;
  throw InvalidArgument("unknown lift pattern '" + std::string(name) + "'");
}

LpInstance Lift(const LpInstance& base, int r, LiftPattern pattern) {
  if (r < 2) throw InvalidArgument("lift needs r >= 2");
  const int m = base.num_constraints();
  const int n = base.num_variables();
  auto next = [&](int s) {
    if (pattern == LiftPattern::kCycle) return (s + 1) % r;
    const int partner = s ^ 1;
    return partner < r ? partner : s;
  };
  std::vector<Triplet> a;
  for (const Triplet& t : base.coefficients()) {
    const double half = t.value / 2;
    for (int s = 0; s < r; ++s) {
      const int row = t.row * r + s;
      const int s2 = next(s);
      if (s2 == s) {
        a.push_back({row, t.col * r + s, t.value});
      } else {
        a.push_back({row, t.col * r + s, half});
        a.push_back({row, t.col * r + s2, half});
      }
    }
  }
  auto repeat = [r](const auto& values) {
    std::remove_cvref_t<decltype(values)> out;
    for (const auto& v : values) out.insert(out.end(), r, v);
    return out;
  };
  return LpInstance(m * r, n * r, std::move(a), repeat(base.rhs()),
                    repeat(base.comparisons()), repeat(base.objective()),
                    repeat(base.lower()), repeat(base.upper()));
}

std::pair<LpInstance, LpInstance> LiftReplicate(const LpInstance& base, int r,
                                                LiftPattern pattern,
                                                uint64_t seed) {
  LpInstance first = Lift(base, r, LiftPattern::kCycle);
  LpInstance second = Lift(base, r, pattern);
  Rng rng(seed);
  PermPair perm =
      PermPair::Identity(second.num_constraints(), second.num_variables());
  rng.Shuffle(perm.sigma_v);
  rng.Shuffle(perm.sigma_w);
  return {std::move(first), ApplyPermutation(second, perm)};
}

std::vector<LabeledRecord> LabelDataset(std::span<const LpInstance> lps,
                                        const LabelOptions& options,
                                        std::vector<int>* stalled) {
  const int count = static_cast<int>(lps.size());
  std::vector<std::optional<LabeledRecord>> slots(count);
  ParallelFor(count, [&](int k) {
    const LpInstance& lp = lps[k];
    try {
      const LpOutcome outcome = Solve(lp);
      LabeledRecord record{lp, outcome.feasible(), outcome.is_optimal(), {}, {},
                           {}};
      if (outcome.is_optimal()) {
        record.objective = outcome.optimal().value;
        record.solution = outcome.optimal().solution;
        if (options.min_norm) {
          record.min_norm_solution = MinNormOptimal(lp, outcome).solution;
        }
      }
      slots[k] = std::move(record);
    } catch (const SolverStall&) {
    } catch (const QpNonConvergence&) {
    }
  });
  std::vector<LabeledRecord> records;
  for (int k = 0; k < count; ++k) {
    if (slots[k]) {
      records.push_back(std::move(*slots[k]));
    } else if (stalled != nullptr) {
      stalled->push_back(k);
    }
  }
  return records;
}

}  // namespace lpgraph
