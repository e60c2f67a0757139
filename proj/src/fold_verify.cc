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

#include "lpgraph/fold_verify.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "lpgraph/errors.h"
#include "lpgraph/min_norm.h"

namespace lpgraph {
namespace {

constexpr int kExhaustiveLimit = 8;
constexpr double kFoldTolerance = 1e-7;

// Returns owner[u] = class index; throws unless `classes` partitions
// {0..size-1} into nonempty classes.
std::vector<int> ClassOwners(const std::vector<std::vector<int>>& classes,
                             int size, const char* what) {
  std::vector<int> owner(size, -1);
  for (size_t k = 0; k < classes.size(); ++k) {
    if (classes[k].empty()) {
      throw InvalidArgument(std::string(what) + " has an empty class");
    }
    for (int u : classes[k]) {
      if (u < 0 || u >= size) {
        throw InvalidArgument(std::string(what) + " index out of range");
      }
      if (owner[u] >= 0) {
        throw InvalidArgument(std::string(what) + " classes overlap");
      }
      owner[u] = static_cast<int>(k);
    }
  }
  for (int u = 0; u < size; ++u) {
    if (owner[u] < 0) {
      throw InvalidArgument(std::string(what) + " does not cover index " +
                            std::to_string(u));
    }
  }
  return owner;
}

template <typename Feature>
bool ConstantOnClasses(const std::vector<Feature>& features,
                       const std::vector<std::vector<int>>& classes) {
  for (const auto& cls : classes) {
    for (int u : cls) {
      if (!(features[u] == features[cls.front()])) return false;
    }
  }
  return true;
}

// sums[u][k] = exact total weight from vertex u into class k of the other
// side.
using SumTable = std::vector<std::map<int, ExactWeight>>;

bool SumsConstantOnClasses(const SumTable& sums,
                           const std::vector<std::vector<int>>& classes) {
  for (const auto& cls : classes) {
    const auto& reference = sums[cls.front()];
    for (int u : cls) {
      if (sums[u] != reference) return false;
    }
  }
  return true;
}

// Drops zero entries so that a missing class and a zero sum compare equal.
void Prune(SumTable& table) {
  for (auto& row : table) {
    std::erase_if(row, [](const auto& kv) { return sgn(kv.second) == 0; });
  }
}

bool Close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// Backtracking search for sigma with second[j] ~ first[sigma[j]] and matching
// colors.
bool SearchPermutation(const std::vector<double>& first,
                       const std::vector<double>& second,
                       const std::vector<int>& first_colors,
                       const std::vector<int>& second_colors, double tol,
                       size_t j, std::vector<bool>& used,
                       std::vector<int>& sigma) {
  if (j == second.size()) return true;
  for (size_t k = 0; k < first.size(); ++k) {
    if (used[k] || first_colors[k] != second_colors[j] ||
        !Close(first[k], second[j], tol)) {
      continue;
    }
    used[k] = true;
    sigma[j] = static_cast<int>(k);
    if (SearchPermutation(first, second, first_colors, second_colors, tol,
                          j + 1, used, sigma)) {
      return true;
    }
    used[k] = false;
  }
  return false;
}

}  // namespace

bool IsStablePartition(const LpGraph& graph, const PartitionPair& partition) {
  const int m = graph.num_constraints();
  const int n = graph.num_variables();
  const std::vector<int> i_owner = ClassOwners(partition.i_classes, m, "I");
  const std::vector<int> j_owner = ClassOwners(partition.j_classes, n, "J");

  if (!ConstantOnClasses(graph.constraint_features(), partition.i_classes) ||
      !ConstantOnClasses(graph.variable_features(), partition.j_classes)) {
    return false;
  }

  SumTable row_sums(m), col_sums(n);
  for (const Triplet& t : graph.edges()) {
    const ExactWeight w = ToExact(t.value);
    row_sums[t.row][j_owner[t.col]] += w;
    col_sums[t.col][i_owner[t.row]] += w;
  }
  Prune(row_sums);
  Prune(col_sums);
  return SumsConstantOnClasses(row_sums, partition.i_classes) &&
         SumsConstantOnClasses(col_sums, partition.j_classes);
}

std::vector<double> FoldSolution(const std::vector<double>& x,
                                 const std::vector<std::vector<int>>& classes) {
  ClassOwners(classes, static_cast<int>(x.size()), "J");
  std::vector<double> folded(x.size());
  for (const auto& cls : classes) {
    double sum = 0.0;
    for (int j : cls) sum += x[j];
    const double mean = sum / static_cast<double>(cls.size());
    for (int j : cls) folded[j] = mean;
  }
  return folded;
}

bool VerifyFoldLemma(const LpInstance& lp) {
  const LpOutcome outcome = Solve(lp);
  const auto& optimal = outcome.optimal();
  const PartitionPair stable = RunWl(Encode(lp)).stable;
  const std::vector<double> folded =
      FoldSolution(optimal.solution, stable.j_classes);
  return Violation(lp, folded) <= kFoldTolerance &&
         std::abs(Objective(lp, folded) - Objective(lp, optimal.solution)) <=
             kFoldTolerance;
}

bool TwinReport::TheoremHolds() const {
  if (!wl_indistinguishable) return true;
  return feas_match && obj_match && solu_match.value_or(true);
}

bool TwinReport::AllMatch() const {
  return wl_indistinguishable && feas_match && obj_match &&
         solu_match.value_or(true);
}

TwinReport CheckTwinProperties(const LpInstance& first,
                               const LpInstance& second, double tol) {
  if (first.num_constraints() != second.num_constraints() ||
      first.num_variables() != second.num_variables()) {
    throw InvalidArgument("twin check requires LPs of equal size");
  }
  TwinReport report;
  const LpGraph g1 = Encode(first);
  const LpGraph g2 = Encode(second);
  report.wl_indistinguishable = !Distinguishable(g1, g2);

  const LpOutcome o1 = Solve(first);
  const LpOutcome o2 = Solve(second);
  report.status_first = o1.status();
  report.status_second = o2.status();
  report.feas_match = o1.feasible() == o2.feasible();
  report.objective_first = o1.ExtendedValue();
  report.objective_second = o2.ExtendedValue();
  if (std::isinf(report.objective_first) ||
      std::isinf(report.objective_second)) {
    report.obj_match = report.objective_first == report.objective_second;
  } else {
    report.obj_match =
        Close(report.objective_first, report.objective_second, tol);
  }
  if (!report.feas_match) report.details.push_back("feasibility differs");
  if (!report.obj_match) report.details.push_back("optimal values differ");

  if (!o1.is_optimal() || !o2.is_optimal()) return report;

  report.min_norm_first = MinNormOptimal(first, o1).solution;
  report.min_norm_second = MinNormOptimal(second, o2).solution;
  std::vector<double> s1 = report.min_norm_first;
  std::vector<double> s2 = report.min_norm_second;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  bool sorted_match = true;
  for (size_t j = 0; j < s1.size(); ++j) {
    sorted_match = sorted_match && Close(s1[j], s2[j], tol);
  }
  if (!sorted_match) {
    report.solu_match = false;
    report.details.push_back("sorted minimum-norm solutions differ");
    return report;
  }
  const int n = first.num_variables();
  if (n > kExhaustiveLimit) {
    report.solu_match = true;
    report.details.push_back(
        "n exceeds exhaustive-search limit; sorted comparison only");
    return report;
  }
  report.exhaustive_search = true;
  const JointColoring joint = RunJointWl(g1, g2);
  std::vector<bool> used(n, false);
  std::vector<int> sigma(n, -1);
  const bool found =
      SearchPermutation(report.min_norm_first, report.min_norm_second,
                        joint.first.cw, joint.second.cw, tol, 0, used, sigma);
  report.solu_match = found;
  if (found) {
    report.matching_permutation = std::move(sigma);
  } else {
    report.details.push_back("no color-preserving matching permutation");
  }
  return report;
}

}  // namespace lpgraph
