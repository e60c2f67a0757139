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

#include "lpgraph/vertex_oracle.h"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <optional>

#include "lpgraph/errors.h"

namespace lpgraph {
namespace {

constexpr int kMaxSize = 8;
constexpr double kFeasibilityTolerance = 1e-9;

struct Best {
  std::optional<double> value;
  std::vector<double> point;
};

// Enumerates basic solutions of an LP whose bounds are all finite.
Best EnumerateBoxed(const LpInstance& lp) {
  const int m = lp.num_constraints();
  const int n = lp.num_variables();
  const auto dense = lp.DenseMatrix();
  double scale = 1.0;
  for (double b : lp.rhs()) scale = std::max(scale, std::abs(b));

  Best best;
  std::vector<double> x(n);
  std::vector<int> rows, basic;
  std::vector<bool> is_basic(n);

  auto consider = [&]() {
    double magnitude = 0.0;
    for (double v : x) magnitude = std::max(magnitude, std::abs(v));
    const double tol = kFeasibilityTolerance * scale + 1e-13 * magnitude;
    if (Violation(lp, x) > tol) return;
    const double value = Objective(lp, x);
    if (!best.value || value < *best.value) {
      best.value = value;
      best.point = x;
    }
  };

  // For a fixed (rows, basic) choice, walk all 2^(n-k) bound patterns.
  auto solve_pattern = [&]() {
    const int k = static_cast<int>(rows.size());
    std::vector<int> nonbasic;
    for (int j = 0; j < n; ++j) {
      if (!is_basic[j]) nonbasic.push_back(j);
    }
    Eigen::MatrixXd basis(k, k);
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) basis(r, c) = dense[rows[r]][basic[c]];
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu;
    if (k > 0) {
      lu.compute(basis);
      lu.setThreshold(1e-10);
      if (lu.rank() < k) return;
    }
    const int patterns = 1 << nonbasic.size();
    for (int mask = 0; mask < patterns; ++mask) {
      for (size_t t = 0; t < nonbasic.size(); ++t) {
        const int j = nonbasic[t];
        x[j] = (mask >> t) & 1 ? *lp.upper()[j] : *lp.lower()[j];
      }
      if (k > 0) {
        Eigen::VectorXd rhs(k);
        for (int r = 0; r < k; ++r) {
          double s = lp.rhs()[rows[r]];
          for (int j : nonbasic) s -= dense[rows[r]][j] * x[j];
          rhs(r) = s;
        }
        const Eigen::VectorXd xb = lu.solve(rhs);
        for (int c = 0; c < k; ++c) x[basic[c]] = xb(c);
      }
      consider();
    }
  };

  // Recursively choose `count` basic variables starting at `from`.
  auto choose_basic = [&](auto&& self, int from, int count) -> void {
    if (count == 0) {
      solve_pattern();
      return;
    }
    for (int j = from; j <= n - count; ++j) {
      is_basic[j] = true;
      basic.push_back(j);
      self(self, j + 1, count - 1);
      basic.pop_back();
      is_basic[j] = false;
    }
  };

  for (int mask = 0; mask < (1 << m); ++mask) {
    rows.clear();
    for (int i = 0; i < m; ++i) {
      if ((mask >> i) & 1) rows.push_back(i);
    }
    if (static_cast<int>(rows.size()) > n) continue;
    choose_basic(choose_basic, 0, static_cast<int>(rows.size()));
  }
  return best;
}

LpInstance Boxed(const LpInstance& lp, double radius) {
  std::vector<Bound> lower = lp.lower();
  std::vector<Bound> upper = lp.upper();
  for (int j = 0; j < lp.num_variables(); ++j) {
    if (!lower[j]) lower[j] = std::min(-radius, upper[j].value_or(-radius));
    if (!upper[j]) upper[j] = std::max(radius, lower[j].value_or(radius));
  }
  return LpInstance(lp.num_constraints(), lp.num_variables(), lp.coefficients(),
                    lp.rhs(), lp.comparisons(), lp.objective(),
                    std::move(lower), std::move(upper));
}

}  // namespace

LpOutcome EnumerateOutcomeOracle(const LpInstance& lp) {
  if (lp.num_constraints() > kMaxSize || lp.num_variables() > kMaxSize) {
    throw InvalidArgument("vertex oracle is limited to m, n <= 8");
  }
  if (lp.HasOnlyFiniteBounds()) {
    Best best = EnumerateBoxed(lp);
    if (!best.value) return LpOutcome::MakeInfeasible();
    return LpOutcome::MakeOptimal(*best.value, std::move(best.point));
  }
  Best narrow = EnumerateBoxed(Boxed(lp, 1e4));
  Best wide = EnumerateBoxed(Boxed(lp, 1e6));
  if (!wide.value) return LpOutcome::MakeInfeasible();
  if (!narrow.value ||
      *wide.value < *narrow.value - 1e-6 * (1.0 + std::abs(*narrow.value))) {
    return LpOutcome::MakeUnbounded();
  }
  return LpOutcome::MakeOptimal(*narrow.value, std::move(narrow.point));
}

}  // namespace lpgraph
