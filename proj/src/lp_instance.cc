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

#include "lpgraph/lp_instance.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "lpgraph/errors.h"

namespace lpgraph {
namespace {

void CheckFinite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw InvalidArgument(std::string(what) + " must be a finite number");
  }
}

void CheckLength(std::span<const double> x, const LpInstance& lp) {
  if (static_cast<int>(x.size()) != lp.num_variables()) {
    throw InvalidArgument("point has " + std::to_string(x.size()) +
                          " entries, LP has " +
                          std::to_string(lp.num_variables()) + " variables");
  }
}

}  // namespace

std::string_view ComparisonSymbol(Comparison comparison) {
  switch (comparison) {
    case Comparison::kLessEqual:
      return "<=";
    case Comparison::kEqual:
      return "=";
    case Comparison::kGreaterEqual:
      return ">=";
  }
  return "?";
}

Comparison ParseComparison(std::string_view symbol) {
  if (symbol == "<=") return Comparison::kLessEqual;
  if (symbol == "=") return Comparison::kEqual;
  if (symbol == ">=") return Comparison::kGreaterEqual;
  throw InvalidArgument("unknown comparison '" + std::string(symbol) + "'");
}

LpInstance::LpInstance(int num_constraints, int num_variables,
                       std::vector<Triplet> coefficients,
                       std::vector<double> rhs,
                       std::vector<Comparison> comparisons,
                       std::vector<double> objective, std::vector<Bound> lower,
                       std::vector<Bound> upper)
    : num_constraints_(num_constraints),
      num_variables_(num_variables),
      rhs_(std::move(rhs)),
      comparisons_(std::move(comparisons)),
      objective_(std::move(objective)),
      lower_(std::move(lower)),
      upper_(std::move(upper)) {
  if (num_constraints_ < 0) throw InvalidArgument("negative constraint count");
  if (num_variables_ < 1) throw InvalidArgument("an LP needs a variable");
  const auto m = static_cast<size_t>(num_constraints_);
  const auto n = static_cast<size_t>(num_variables_);
  if (rhs_.size() != m || comparisons_.size() != m) {
    throw InvalidArgument("b and the comparison vector must have length m");
  }
  if (objective_.size() != n || lower_.size() != n || upper_.size() != n) {
    throw InvalidArgument("c, l and u must have length n");
  }
  for (double v : rhs_) CheckFinite(v, "b entry");
  for (double v : objective_) CheckFinite(v, "c entry");
  for (size_t j = 0; j < n; ++j) {
    if (lower_[j]) CheckFinite(*lower_[j], "lower bound");
    if (upper_[j]) CheckFinite(*upper_[j], "upper bound");
    if (lower_[j] && upper_[j] && *lower_[j] > *upper_[j]) {
      throw InvalidArgument("lower bound exceeds upper bound for variable " +
                            std::to_string(j));
    }
  }

  for (const Triplet& t : coefficients) {
    if (t.row < 0 || t.row >= num_constraints_ || t.col < 0 ||
        t.col >= num_variables_) {
      throw InvalidArgument("coefficient index out of range");
    }
    CheckFinite(t.value, "coefficient");
  }
  std::sort(coefficients.begin(), coefficients.end(),
            [](const Triplet& a, const Triplet& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
  for (size_t k = 1; k < coefficients.size(); ++k) {
    if (coefficients[k].row == coefficients[k - 1].row &&
        coefficients[k].col == coefficients[k - 1].col) {
      throw InvalidArgument("duplicate coefficient at (" +
                            std::to_string(coefficients[k].row) + ", " +
                            std::to_string(coefficients[k].col) + ")");
    }
  }
  std::erase_if(coefficients, [](const Triplet& t) { return t.value == 0.0; });
  coefficients_ = std::move(coefficients);

  row_start_.assign(m + 1, 0);
  for (const Triplet& t : coefficients_) ++row_start_[t.row + 1];
  for (size_t i = 0; i < m; ++i) row_start_[i + 1] += row_start_[i];
}

std::span<const Triplet> LpInstance::Row(int row) const {
  return std::span<const Triplet>(coefficients_)
      .subspan(row_start_[row], row_start_[row + 1] - row_start_[row]);
}

std::vector<std::vector<double>> LpInstance::DenseMatrix() const {
  std::vector<std::vector<double>> dense(
      num_constraints_, std::vector<double>(num_variables_, 0.0));
  for (const Triplet& t : coefficients_) dense[t.row][t.col] = t.value;
  return dense;
}

bool LpInstance::HasOnlyFiniteBounds() const {
  return std::all_of(lower_.begin(), lower_.end(),
                     [](const Bound& b) { return b.has_value(); }) &&
         std::all_of(upper_.begin(), upper_.end(),
                     [](const Bound& b) { return b.has_value(); });
}

double Objective(const LpInstance& lp, std::span<const double> x) {
  CheckLength(x, lp);
  double sum = 0.0;
  for (int j = 0; j < lp.num_variables(); ++j) sum += lp.objective()[j] * x[j];
  return sum;
}

std::vector<double> RowActivities(const LpInstance& lp,
                                  std::span<const double> x) {
  CheckLength(x, lp);
  std::vector<double> activity(lp.num_constraints(), 0.0);
  for (int i = 0; i < lp.num_constraints(); ++i) {
    double sum = 0.0;
    for (const Triplet& t : lp.Row(i)) sum += t.value * x[t.col];
    activity[i] = sum;
  }
  return activity;
}

double Violation(const LpInstance& lp, std::span<const double> x) {
  const std::vector<double> activity = RowActivities(lp, x);
  double worst = 0.0;
  for (int i = 0; i < lp.num_constraints(); ++i) {
    const double diff = activity[i] - lp.rhs()[i];
    switch (lp.comparisons()[i]) {
      case Comparison::kLessEqual:
        worst = std::max(worst, diff);
        break;
      case Comparison::kEqual:
        worst = std::max(worst, std::abs(diff));
        break;
      case Comparison::kGreaterEqual:
        worst = std::max(worst, -diff);
        break;
    }
  }
  for (int j = 0; j < lp.num_variables(); ++j) {
    if (lp.lower()[j]) worst = std::max(worst, *lp.lower()[j] - x[j]);
    if (lp.upper()[j]) worst = std::max(worst, x[j] - *lp.upper()[j]);
  }
  return worst;
}

}  // namespace lpgraph
