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

#include "lpgraph/lp_graph.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "lpgraph/errors.h"

namespace lpgraph {
namespace {

void CheckPermutation(const std::vector<int>& sigma, int size,
                      const char* what) {
  if (static_cast<int>(sigma.size()) != size) {
    throw InvalidArgument(std::string(what) + " has size " +
                          std::to_string(sigma.size()) + ", expected " +
                          std::to_string(size));
  }
  std::vector<bool> seen(size, false);
  for (int v : sigma) {
    if (v < 0 || v >= size || seen[v]) {
      throw InvalidArgument(std::string(what) + " is not a bijection");
    }
    seen[v] = true;
  }
}

std::vector<int> InversePermutation(const std::vector<int>& sigma) {
  std::vector<int> inverse(sigma.size());
  for (size_t i = 0; i < sigma.size(); ++i)
    inverse[sigma[i]] = static_cast<int>(i);
  return inverse;
}

}  // namespace

LpGraph::LpGraph(int num_constraints, int num_variables,
                 std::vector<Triplet> edges,
                 std::vector<ConstraintFeature> constraint_features,
                 std::vector<VariableFeature> variable_features)
    : num_constraints_(num_constraints),
      num_variables_(num_variables),
      constraint_features_(std::move(constraint_features)),
      variable_features_(std::move(variable_features)) {
  // Reuse the instance validation; it canonicalizes the edge list as well.
  std::vector<double> rhs, cost;
  std::vector<Comparison> comparisons;
  std::vector<Bound> lower, upper;
  if (static_cast<int>(constraint_features_.size()) != num_constraints ||
      static_cast<int>(variable_features_.size()) != num_variables) {
    throw InvalidArgument("feature counts do not match vertex counts");
  }
  for (const auto& f : constraint_features_) {
    rhs.push_back(f.rhs);
    comparisons.push_back(f.comparison);
  }
  for (const auto& f : variable_features_) {
    cost.push_back(f.cost);
    lower.push_back(f.lower);
    upper.push_back(f.upper);
  }
  LpInstance validated(num_constraints, num_variables, std::move(edges),
                       std::move(rhs), std::move(comparisons), std::move(cost),
                       std::move(lower), std::move(upper));
  edges_ = validated.coefficients();
}

LpGraph Encode(const LpInstance& lp) {
  std::vector<ConstraintFeature> hv(lp.num_constraints());
  for (int i = 0; i < lp.num_constraints(); ++i) {
    hv[i] = {lp.rhs()[i], lp.comparisons()[i]};
  }
  std::vector<VariableFeature> hw(lp.num_variables());
  for (int j = 0; j < lp.num_variables(); ++j) {
    hw[j] = {lp.objective()[j], lp.lower()[j], lp.upper()[j]};
  }
  return LpGraph(lp.num_constraints(), lp.num_variables(), lp.coefficients(),
                 std::move(hv), std::move(hw));
}

LpInstance Decode(const LpGraph& graph) {
  std::vector<double> rhs, cost;
  std::vector<Comparison> comparisons;
  std::vector<Bound> lower, upper;
  for (const auto& f : graph.constraint_features()) {
    rhs.push_back(f.rhs);
    comparisons.push_back(f.comparison);
  }
  for (const auto& f : graph.variable_features()) {
    cost.push_back(f.cost);
    lower.push_back(f.lower);
    upper.push_back(f.upper);
  }
  return LpInstance(graph.num_constraints(), graph.num_variables(),
                    graph.edges(), std::move(rhs), std::move(comparisons),
                    std::move(cost), std::move(lower), std::move(upper));
}

PermPair PermPair::Identity(int m, int n) {
  PermPair p;
  p.sigma_v.resize(m);
  p.sigma_w.resize(n);
  std::iota(p.sigma_v.begin(), p.sigma_v.end(), 0);
  std::iota(p.sigma_w.begin(), p.sigma_w.end(), 0);
  return p;
}

PermPair PermPair::Inverse() const {
  return {InversePermutation(sigma_v), InversePermutation(sigma_w)};
}

PermPair PermPair::Compose(const PermPair& other) const {
  if (sigma_v.size() != other.sigma_v.size() ||
      sigma_w.size() != other.sigma_w.size()) {
    throw InvalidArgument("cannot compose permutations of different sizes");
  }
  PermPair result;
  result.sigma_v.resize(sigma_v.size());
  result.sigma_w.resize(sigma_w.size());
  for (size_t i = 0; i < sigma_v.size(); ++i) {
    result.sigma_v[i] = sigma_v[other.sigma_v[i]];
  }
  for (size_t j = 0; j < sigma_w.size(); ++j) {
    result.sigma_w[j] = sigma_w[other.sigma_w[j]];
  }
  return result;
}

LpGraph ApplyPermutation(const LpGraph& graph, const PermPair& perm) {
  const int m = graph.num_constraints();
  const int n = graph.num_variables();
  CheckPermutation(perm.sigma_v, m, "sigma_V");
  CheckPermutation(perm.sigma_w, n, "sigma_W");
  // Old vertex sigma(i) becomes new vertex i.
  const std::vector<int> new_v = InversePermutation(perm.sigma_v);
  const std::vector<int> new_w = InversePermutation(perm.sigma_w);
  std::vector<Triplet> edges;
  edges.reserve(graph.edges().size());
  for (const Triplet& t : graph.edges()) {
    edges.push_back({new_v[t.row], new_w[t.col], t.value});
  }
  std::vector<ConstraintFeature> hv(m);
  for (int i = 0; i < m; ++i) {
    hv[i] = graph.constraint_features()[perm.sigma_v[i]];
  }
  std::vector<VariableFeature> hw(n);
  for (int j = 0; j < n; ++j) {
    hw[j] = graph.variable_features()[perm.sigma_w[j]];
  }
  return LpGraph(m, n, std::move(edges), std::move(hv), std::move(hw));
}

LpInstance ApplyPermutation(const LpInstance& lp, const PermPair& perm) {
  return Decode(ApplyPermutation(Encode(lp), perm));
}

std::vector<double> PermuteVariables(const std::vector<double>& values,
                                     const std::vector<int>& sigma_w) {
  CheckPermutation(sigma_w, static_cast<int>(values.size()), "sigma_W");
  std::vector<double> out(values.size());
  for (size_t j = 0; j < values.size(); ++j) out[j] = values[sigma_w[j]];
  return out;
}

}  // namespace lpgraph
