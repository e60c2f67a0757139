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

#ifndef LPGRAPH_LP_INSTANCE_H_
#define LPGRAPH_LP_INSTANCE_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace lpgraph {

// Sense of one row of A x (sense) b.
enum class Comparison { kLessEqual, kEqual, kGreaterEqual };

std::string_view ComparisonSymbol(Comparison comparison);  // "<=", "=", ">="
Comparison ParseComparison(std::string_view symbol);

// A variable bound. std::nullopt is the infinite bound: -inf for lower bounds
// and +inf for upper bounds.
using Bound = std::optional<double>;

struct Triplet {
  int row = 0;
  int col = 0;
  double value = 0.0;

  bool operator==(const Triplet&) const = default;
};

// The linear program
//
//   min  c^T x   s.t.  A x (sense) b,  l <= x <= u.
//
// Instances are immutable once built. The constructor validates every
// invariant and stores A in canonical form: triplets sorted by (row, col) with
// explicit zeros dropped. Duplicate (row, col) pairs are rejected.
class LpInstance {
 public:
  LpInstance(int num_constraints, int num_variables,
             std::vector<Triplet> coefficients, std::vector<double> rhs,
             std::vector<Comparison> comparisons, std::vector<double> objective,
             std::vector<Bound> lower, std::vector<Bound> upper);

  int num_constraints() const { return num_constraints_; }
  int num_variables() const { return num_variables_; }
  const std::vector<Triplet>& coefficients() const { return coefficients_; }
  const std::vector<double>& rhs() const { return rhs_; }
  const std::vector<Comparison>& comparisons() const { return comparisons_; }
  const std::vector<double>& objective() const { return objective_; }
  const std::vector<Bound>& lower() const { return lower_; }
  const std::vector<Bound>& upper() const { return upper_; }

  // Triplets of row `row`, in ascending column order.
  std::span<const Triplet> Row(int row) const;

  // Dense copy of A, row-major as a vector of rows.
  std::vector<std::vector<double>> DenseMatrix() const;

  bool HasOnlyFiniteBounds() const;

  bool operator==(const LpInstance&) const = default;

 private:
  int num_constraints_;
  int num_variables_;
  std::vector<Triplet> coefficients_;
  std::vector<int> row_start_;
  std::vector<double> rhs_;
  std::vector<Comparison> comparisons_;
  std::vector<double> objective_;
  std::vector<Bound> lower_;
  std::vector<Bound> upper_;
};

// c^T x summed in ascending index order.
double Objective(const LpInstance& lp, std::span<const double> x);

// Largest constraint or bound violation of x; zero iff x is exactly feasible.
double Violation(const LpInstance& lp, std::span<const double> x);

// a_i^T x for every row, each summed in ascending column order.
std::vector<double> RowActivities(const LpInstance& lp,
                                  std::span<const double> x);

}  // namespace lpgraph

#endif  // LPGRAPH_LP_INSTANCE_H_
