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

#ifndef LPGRAPH_MIN_NORM_H_
#define LPGRAPH_MIN_NORM_H_

#include <vector>

#include "lpgraph/lp_instance.h"
#include "lpgraph/lp_solver.h"

namespace lpgraph {

struct MinNormOptions {
  double qp_tolerance = 1e-8;
  int max_iterations = 200;
  // The optimal face is {x feasible : c^T x <= v* + slack * (1 + |v*|)}.
  double objective_slack = 1e-9;
  // Tikhonov term used by the anti-cycling fallback.
  double ridge = 1e-10;
  SolverOptions solver;
};

struct MinNormResult {
  std::vector<double> solution;
  double kkt_residual = 0.0;
  int iterations = 0;
  // True when the plain active-set run cycled and the ridge-regularized,
  // smallest-index rerun produced the answer.
  bool used_fallback = false;
};

// Minimum l2-norm point of the optimal face, found by a primal active-set QP
// warm-started at the simplex vertex in `outcome`. Throws NotOptimal unless
// the outcome is optimal and QpNonConvergence if both runs exhaust their
// iteration budget.
MinNormResult MinNormOptimal(const LpInstance& lp, const LpOutcome& outcome,
                             const MinNormOptions& options = {});

// Convenience overload that solves the LP first.
MinNormResult MinNormOptimal(const LpInstance& lp,
                             const MinNormOptions& options = {});

}  // namespace lpgraph

#endif  // LPGRAPH_MIN_NORM_H_
