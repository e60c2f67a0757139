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

#ifndef LPGRAPH_FOLD_VERIFY_H_
#define LPGRAPH_FOLD_VERIFY_H_

#include <optional>
#include <string>
#include <vector>

#include "lpgraph/lp_graph.h"
#include "lpgraph/lp_instance.h"
#include "lpgraph/lp_solver.h"
#include "lpgraph/wl_refine.h"

namespace lpgraph {

// Checks the four stable-partition conditions exactly: features constant on
// each class, and for every pair of classes (I_p, J_q) the row sums
// sum_{j in J_q} E_ij constant over i in I_p and the column sums
// sum_{i in I_p} E_ij constant over j in J_q. Throws InvalidArgument if
// `partition` does not partition {0..m-1} and {0..n-1}.
bool IsStablePartition(const LpGraph& graph, const PartitionPair& partition);

// Replaces every entry by the mean of its class.
std::vector<double> FoldSolution(const std::vector<double>& x,
                                 const std::vector<std::vector<int>>& classes);

// Folds the simplex solution of `lp` over its own stable variable partition
// and checks the result stays feasible (violation <= 1e-7) with the same
// objective (within 1e-7). Throws NotOptimal if the LP has no optimum.
bool VerifyFoldLemma(const LpInstance& lp);

struct TwinReport {
  bool wl_indistinguishable = false;
  OutcomeStatus status_first = OutcomeStatus::kInfeasible;
  OutcomeStatus status_second = OutcomeStatus::kInfeasible;
  bool feas_match = false;
  double objective_first = 0.0;  // +inf infeasible, -inf unbounded
  double objective_second = 0.0;
  bool obj_match = false;
  // Empty when either LP lacks an optimum.
  std::optional<bool> solu_match;
  std::vector<double> min_norm_first;
  std::vector<double> min_norm_second;
  // sigma with min_norm_second[j] ~ min_norm_first[sigma[j]], when found.
  std::vector<int> matching_permutation;
  // False when n exceeded the exhaustive-search limit and only the sorted
  // comparison was run.
  bool exhaustive_search = false;
  std::vector<std::string> details;

  // True iff WL-indistinguishability implies every applicable clause holds.
  bool TheoremHolds() const;
  bool AllMatch() const;
};

// Compares two LPs of equal size: WL verdict, feasibility, optimal value, and
// minimum-norm solutions up to a variable permutation that respects the joint
// WL colors.
TwinReport CheckTwinProperties(const LpInstance& first,
                               const LpInstance& second, double tol);

}  // namespace lpgraph

#endif  // LPGRAPH_FOLD_VERIFY_H_
