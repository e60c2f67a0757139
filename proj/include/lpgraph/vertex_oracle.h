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

#ifndef LPGRAPH_VERTEX_ORACLE_H_
#define LPGRAPH_VERTEX_ORACLE_H_

#include "lpgraph/lp_instance.h"
#include "lpgraph/lp_solver.h"

namespace lpgraph {

// Brute-force LP outcome by enumerating every basic solution: choose k rows
// to hold with equality, k variables to be basic, and pin every other
// variable at one of its bounds. Shares no code with the simplex path.
//
// Limited to m, n <= 8. Infinite bounds are handled by boxing them at
// +-1e4 and +-1e6: an LP is reported unbounded when widening the box lowers
// the optimum, which is exact whenever every bounded optimum fits inside the
// smaller box.
LpOutcome EnumerateOutcomeOracle(const LpInstance& lp);

}  // namespace lpgraph

#endif  // LPGRAPH_VERTEX_ORACLE_H_
