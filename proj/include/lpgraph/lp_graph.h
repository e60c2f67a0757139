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

#ifndef LPGRAPH_LP_GRAPH_H_
#define LPGRAPH_LP_GRAPH_H_

#include <vector>

#include "lpgraph/lp_instance.h"

namespace lpgraph {

// Feature of constraint vertex v_i: (b_i, sense_i).
struct ConstraintFeature {
  double rhs = 0.0;
  Comparison comparison = Comparison::kLessEqual;

  bool operator==(const ConstraintFeature&) const = default;
};

// Feature of variable vertex w_j: (c_j, l_j, u_j). Infinite bounds are the
// empty optional, never a sentinel double.
struct VariableFeature {
  double cost = 0.0;
  Bound lower;
  Bound upper;

  bool operator==(const VariableFeature&) const = default;
};

// Weighted bipartite graph with m constraint vertices V and n variable
// vertices W. Edge (i, j) carries A_ij; an absent edge is a zero weight.
// Edges are kept sorted by (constraint, variable) and never hold zeros.
class LpGraph {
 public:
  LpGraph(int num_constraints, int num_variables, std::vector<Triplet> edges,
          std::vector<ConstraintFeature> constraint_features,
          std::vector<VariableFeature> variable_features);

  int num_constraints() const { return num_constraints_; }
  int num_variables() const { return num_variables_; }
  const std::vector<Triplet>& edges() const { return edges_; }
  const std::vector<ConstraintFeature>& constraint_features() const {
    return constraint_features_;
  }
  const std::vector<VariableFeature>& variable_features() const {
    return variable_features_;
  }

  bool operator==(const LpGraph&) const = default;

 private:
  int num_constraints_;
  int num_variables_;
  std::vector<Triplet> edges_;
  std::vector<ConstraintFeature> constraint_features_;
  std::vector<VariableFeature> variable_features_;
};

LpGraph Encode(const LpInstance& lp);
LpInstance Decode(const LpGraph& graph);

// (sigma_V, sigma_W) in S_m x S_n, 0-based.
struct PermPair {
  std::vector<int> sigma_v;
  std::vector<int> sigma_w;

  static PermPair Identity(int m, int n);
  PermPair Inverse() const;
  // (*this o other)(i) = this(other(i)).
  PermPair Compose(const PermPair& other) const;

  bool operator==(const PermPair&) const = default;
};

// Group action with E'_{i,j} = E_{sigma_V(i), sigma_W(j)},
// h'^V_i = h^V_{sigma_V(i)} and h'^W_j = h^W_{sigma_W(j)}. Under this
// convention Apply(Apply(g, p), q) == Apply(g, p.Compose(q)).
LpGraph ApplyPermutation(const LpGraph& graph, const PermPair& perm);

// Same action on an LP, through the graph encoding.
LpInstance ApplyPermutation(const LpInstance& lp, const PermPair& perm);

// Variable-side action on a vertex output vector: y'_j = y_{sigma_W(j)}.
std::vector<double> PermuteVariables(const std::vector<double>& values,
                                     const std::vector<int>& sigma_w);

}  // namespace lpgraph

#endif  // LPGRAPH_LP_GRAPH_H_
