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

#ifndef LPGRAPH_LP_SOLVER_H_
#define LPGRAPH_LP_SOLVER_H_

#include <string_view>
#include <variant>
#include <vector>

#include "lpgraph/lp_instance.h"

namespace lpgraph {

enum class OutcomeStatus { kInfeasible, kUnbounded, kOptimal };

std::string_view OutcomeStatusName(OutcomeStatus status);

// Solver verdict. Exactly one of the three cases holds.
class LpOutcome {
 public:
  struct Infeasible {};
  struct Unbounded {};
  struct Optimal {
    double value = 0.0;
    std::vector<double> solution;
  };

  static LpOutcome MakeInfeasible() { return LpOutcome(Infeasible{}); }
  static LpOutcome MakeUnbounded() { return LpOutcome(Unbounded{}); }
  static LpOutcome MakeOptimal(double value, std::vector<double> solution) {
    return LpOutcome(Optimal{value, std::move(solution)});
  }

  OutcomeStatus status() const;
  bool is_optimal() const { return std::holds_alternative<Optimal>(state_); }
  bool feasible() const { return status() != OutcomeStatus::kInfeasible; }

  // Requires is_optimal().
  const Optimal& optimal() const;

  // Optimal value with the infeasible = +inf, unbounded = -inf convention.
  double ExtendedValue() const;

 private:
  explicit LpOutcome(std::variant<Infeasible, Unbounded, Optimal> state)
      : state_(std::move(state)) {}

  std::variant<Infeasible, Unbounded, Optimal> state_;
};

struct SolverOptions {
  double pivot_tolerance = 1e-9;
  double feasibility_tolerance = 1e-9;
  double optimality_tolerance = 1e-9;
  // Pivot budget is max_pivots_per_dimension * (m + n).
  int max_pivots_per_dimension = 50;
};

// Two-phase primal simplex with Bland's rule. Deterministic. Throws
// SolverStall when the pivot budget runs out.
LpOutcome Solve(const LpInstance& lp, const SolverOptions& options = {});

}  // namespace lpgraph

#endif  // LPGRAPH_LP_SOLVER_H_
