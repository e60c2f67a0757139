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

#include "lpgraph/lp_solver.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lpgraph/errors.h"

namespace lpgraph {

std::string_view OutcomeStatusName(OutcomeStatus status) {
  switch (status) {
    case OutcomeStatus::kInfeasible:
      return "infeasible";
    case OutcomeStatus::kUnbounded:
      return "unbounded";
    case OutcomeStatus::kOptimal:
      return "optimal";
  }
  return "?";
}

OutcomeStatus LpOutcome::status() const {
  if (std::holds_alternative<Infeasible>(state_)) {
    return OutcomeStatus::kInfeasible;
  }
  if (std::holds_alternative<Unbounded>(state_)) {
    return OutcomeStatus::kUnbounded;
  }
  return OutcomeStatus::kOptimal;
}

const LpOutcome::Optimal& LpOutcome::optimal() const {
  if (!is_optimal()) throw NotOptimal("LP outcome is not optimal");
  return std::get<Optimal>(state_);
}

double LpOutcome::ExtendedValue() const {
  switch (status()) {
    case OutcomeStatus::kInfeasible:
      return std::numeric_limits<double>::infinity();
    case OutcomeStatus::kUnbounded:
      return -std::numeric_limits<double>::infinity();
    case OutcomeStatus::kOptimal:
      return std::get<Optimal>(state_).value;
  }
  return 0.0;
}

namespace {

// How an original variable x_j is expressed through nonnegative columns.
enum class VarMap { kShiftLower, kFlipUpper, kSplitFree };

struct ColumnMap {
  VarMap kind;
  int column;     // first standard-form column
  double offset;  // x_j = offset + sign * y (or y+ - y- when free)
};

// Standard-form problem  min cost^T y  s.t.  M y = rhs,  y >= 0,  rhs >= 0,
// where M already includes slack and surplus columns.
struct StandardForm {
  int num_rows = 0;
  int num_structural = 0;  // columns that carry original variables
  int num_columns = 0;     // structural + slack/surplus
  Eigen::MatrixXd matrix;
  Eigen::VectorXd rhs;
  Eigen::VectorXd cost;
  double cost_offset = 0.0;
  std::vector<int> slack_basis;  // per row: a +1 slack column or -1
  std::vector<ColumnMap> maps;
};

StandardForm BuildStandardForm(const LpInstance& lp) {
  const int m = lp.num_constraints();
  const int n = lp.num_variables();
  StandardForm sf;
  sf.maps.reserve(n);

  int structural = 0;
  int bound_rows = 0;
  for (int j = 0; j < n; ++j) {
    const Bound& l = lp.lower()[j];
    const Bound& u = lp.upper()[j];
    if (l) {
      sf.maps.push_back({VarMap::kShiftLower, structural, *l});
      structural += 1;
      if (u) ++bound_rows;
    } else if (u) {
      sf.maps.push_back({VarMap::kFlipUpper, structural, *u});
      structural += 1;
    } else {
      sf.maps.push_back({VarMap::kSplitFree, structural, 0.0});
      structural += 2;
    }
  }

  // Every original inequality row and every bound row gets a slack column.
  int slacks = bound_rows;
  for (Comparison cmp : lp.comparisons()) {
    if (cmp != Comparison::kEqual) ++slacks;
  }

  sf.num_rows = m + bound_rows;
  sf.num_structural = structural;
  sf.num_columns = structural + slacks;
  sf.matrix = Eigen::MatrixXd::Zero(sf.num_rows, sf.num_columns);
  sf.rhs = Eigen::VectorXd::Zero(sf.num_rows);
  sf.cost = Eigen::VectorXd::Zero(sf.num_columns);
  sf.slack_basis.assign(sf.num_rows, -1);

  for (int j = 0; j < n; ++j) {
    const ColumnMap& map = sf.maps[j];
    const double c = lp.objective()[j];
    sf.cost_offset += c * map.offset;
    switch (map.kind) {
      case VarMap::kShiftLower:
        sf.cost(map.column) = c;
        break;
      case VarMap::kFlipUpper:
        sf.cost(map.column) = -c;
        break;
      case VarMap::kSplitFree:
        sf.cost(map.column) = c;
        sf.cost(map.column + 1) = -c;
        break;
    }
  }

  int next_slack = structural;
  std::vector<double> slack_sign(sf.num_rows, 0.0);
  std::vector<int> slack_col(sf.num_rows, -1);
  for (int i = 0; i < m; ++i) {
    double rhs = lp.rhs()[i];
    for (const Triplet& t : lp.Row(i)) {
      const ColumnMap& map = sf.maps[t.col];
      rhs -= t.value * map.offset;
      switch (map.kind) {
        case VarMap::kShiftLower:
          sf.matrix(i, map.column) += t.value;
          break;
        case VarMap::kFlipUpper:
          sf.matrix(i, map.column) -= t.value;
          break;
        case VarMap::kSplitFree:
          sf.matrix(i, map.column) += t.value;
          sf.matrix(i, map.column + 1) -= t.value;
          break;
      }
    }
    sf.rhs(i) = rhs;
    const Comparison cmp = lp.comparisons()[i];
    if (cmp != Comparison::kEqual) {
      const double sign = cmp == Comparison::kLessEqual ? 1.0 : -1.0;
      sf.matrix(i, next_slack) = sign;
      slack_sign[i] = sign;
      slack_col[i] = next_slack++;
    }
  }
  int row = m;
  for (int j = 0; j < n; ++j) {
    const ColumnMap& map = sf.maps[j];
    if (map.kind == VarMap::kShiftLower && lp.upper()[j]) {
      sf.matrix(row, map.column) = 1.0;
      sf.rhs(row) = *lp.upper()[j] - *lp.lower()[j];
      sf.matrix(row, next_slack) = 1.0;
      slack_sign[row] = 1.0;
      slack_col[row] = next_slack++;
      ++row;
    }
  }

  for (int i = 0; i < sf.num_rows; ++i) {
    if (sf.rhs(i) < 0.0) {
      sf.rhs(i) = -sf.rhs(i);
      sf.matrix.row(i) *= -1.0;
      slack_sign[i] = -slack_sign[i];
    }
    if (slack_sign[i] > 0.0) sf.slack_basis[i] = slack_col[i];
  }
  return sf;
}

// Dense tableau simplex with Bland's rule. Columns [0, num_columns) are the
// standard-form columns, followed by one artificial column per row that has
// no usable slack. The last row holds reduced costs, the last column the
// basic values.
class Tableau {
 public:
  Tableau(const StandardForm& sf, const SolverOptions& options, int budget)
      : sf_(sf), options_(options), budget_(budget) {
    rows_ = sf.num_rows;
    for (int i = 0; i < rows_; ++i) {
      if (sf.slack_basis[i] < 0) artificial_rows_.push_back(i);
    }
    first_artificial_ = sf.num_columns;
    cols_ = sf.num_columns + static_cast<int>(artificial_rows_.size());
    t_ = Eigen::MatrixXd::Zero(rows_ + 1, cols_ + 1);
    t_.topLeftCorner(rows_, sf.num_columns) = sf.matrix;
    t_.col(cols_).head(rows_) = sf.rhs;
    basis_.assign(rows_, -1);
    for (int i = 0; i < rows_; ++i) basis_[i] = sf.slack_basis[i];
    for (size_t k = 0; k < artificial_rows_.size(); ++k) {
      const int i = artificial_rows_[k];
      t_(i, first_artificial_ + static_cast<int>(k)) = 1.0;
      basis_[i] = first_artificial_ + static_cast<int>(k);
    }
    active_row_.assign(rows_, true);
  }

  // Returns false if the feasible set is empty.
  bool PhaseOne() {
    if (artificial_rows_.empty()) return true;
    Eigen::VectorXd cost = Eigen::VectorXd::Zero(cols_);
    for (int k = first_artificial_; k < cols_; ++k) cost(k) = 1.0;
    SetObjective(cost);
    if (!Iterate(cols_)) {
      // Phase one is bounded below by zero; an unbounded ray means numerical
      // trouble.
      throw SolverStall("phase one reported an unbounded ray");
    }
    const double infeasibility = -t_(rows_, cols_);
    const double scale = 1.0 + sf_.rhs.cwiseAbs().maxCoeff();
    if (infeasibility > options_.feasibility_tolerance * scale) return false;
    DriveOutArtificials();
    return true;
  }

  // Returns false if the objective is unbounded below.
  bool PhaseTwo() {
    Eigen::VectorXd cost = Eigen::VectorXd::Zero(cols_);
    cost.head(sf_.num_columns) = sf_.cost;
    SetObjective(cost);
    return Iterate(first_artificial_);
  }

  const std::vector<int>& basis() const { return basis_; }
  const std::vector<bool>& active_rows() const { return active_row_; }
  double BasicValue(int row) const { return t_(row, cols_); }
  int first_artificial() const { return first_artificial_; }

 private:
  void SetObjective(const Eigen::VectorXd& cost) {
    t_.row(rows_).setZero();
    t_.row(rows_).head(cols_) = cost.transpose();
    for (int i = 0; i < rows_; ++i) {
      if (!active_row_[i]) continue;
      const double cb = cost(basis_[i]);
      if (cb != 0.0) t_.row(rows_) -= cb * t_.row(i);
    }
  }

  void Pivot(int row, int col) {
    if (++pivots_ > budget_) {
      throw SolverStall("simplex exceeded " + std::to_string(budget_) +
                        " pivots");
    }
    t_.row(row) /= t_(row, col);
    t_(row, col) = 1.0;
    for (int i = 0; i <= rows_; ++i) {
      if (i == row || (i < rows_ && !active_row_[i])) continue;
      const double factor = t_(i, col);
      if (factor != 0.0) {
        t_.row(i) -= factor * t_.row(row);
        t_(i, col) = 0.0;
      }
    }
    basis_[row] = col;
  }

  // Runs Bland's rule over entering columns [0, column_limit). Returns false
  // on an unbounded ray.
  bool Iterate(int column_limit) {
    for (;;) {
      int entering = -1;
      for (int j = 0; j < column_limit; ++j) {
        if (t_(rows_, j) < -options_.optimality_tolerance) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;

      int leaving = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < rows_; ++i) {
        if (!active_row_[i]) continue;
        const double a = t_(i, entering);
        if (a <= options_.pivot_tolerance) continue;
        const double ratio = std::max(t_(i, cols_), 0.0) / a;
        if (leaving < 0 || ratio < best_ratio - 1e-12) {
          best_ratio = ratio;
          leaving = i;
        } else if (ratio <= best_ratio + 1e-12 && basis_[i] < basis_[leaving]) {
          best_ratio = std::min(best_ratio, ratio);
          leaving = i;
        }
      }
      if (leaving < 0) return false;
      Pivot(leaving, entering);
    }
  }

  void DriveOutArtificials() {
    for (int i = 0; i < rows_; ++i) {
      if (!active_row_[i] || basis_[i] < first_artificial_) continue;
      int col = -1;
      for (int j = 0; j < first_artificial_; ++j) {
        if (std::abs(t_(i, j)) > options_.pivot_tolerance) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        Pivot(i, col);
      } else {
        active_row_[i] = false;  // redundant equality
      }
    }
  }

  const StandardForm& sf_;
  const SolverOptions& options_;
  int budget_;
  int pivots_ = 0;
  int rows_ = 0;
  int cols_ = 0;
  int first_artificial_ = 0;
  std::vector<int> artificial_rows_;
  std::vector<int> basis_;
  std::vector<bool> active_row_;
  Eigen::MatrixXd t_;
};

std::vector<double> RecoverPoint(const StandardForm& sf,
                                 const Eigen::VectorXd& y) {
  std::vector<double> x(sf.maps.size());
  for (size_t j = 0; j < sf.maps.size(); ++j) {
    const ColumnMap& map = sf.maps[j];
    switch (map.kind) {
      case VarMap::kShiftLower:
        x[j] = map.offset + y(map.column);
        break;
      case VarMap::kFlipUpper:
        x[j] = map.offset - y(map.column);
        break;
      case VarMap::kSplitFree:
        x[j] = y(map.column) - y(map.column + 1);
        break;
    }
  }
  return x;
}

}  // namespace

LpOutcome Solve(const LpInstance& lp, const SolverOptions& options) {
  const StandardForm sf = BuildStandardForm(lp);
  const int budget = options.max_pivots_per_dimension *
                     (lp.num_constraints() + lp.num_variables());
  Tableau tableau(sf, options, budget);
  if (!tableau.PhaseOne()) return LpOutcome::MakeInfeasible();
  if (!tableau.PhaseTwo()) return LpOutcome::MakeUnbounded();

  Eigen::VectorXd y = Eigen::VectorXd::Zero(sf.num_columns);
  std::vector<int> basic_columns;
  for (int i = 0; i < sf.num_rows; ++i) {
    if (!tableau.active_rows()[i]) continue;
    const int col = tableau.basis()[i];
    if (col < sf.num_columns) {
      y(col) = std::max(tableau.BasicValue(i), 0.0);
      basic_columns.push_back(col);
    }
  }
  std::vector<double> x = RecoverPoint(sf, y);

  // Re-solve the final basis against the original data to shed the
  // round-off accumulated by the tableau updates.
  if (!basic_columns.empty()) {
    Eigen::MatrixXd basis_matrix(sf.num_rows, basic_columns.size());
    for (size_t k = 0; k < basic_columns.size(); ++k) {
      basis_matrix.col(k) = sf.matrix.col(basic_columns[k]);
    }
    const Eigen::VectorXd yb = basis_matrix.colPivHouseholderQr().solve(sf.rhs);
    Eigen::VectorXd refined = Eigen::VectorXd::Zero(sf.num_columns);
    bool usable = yb.allFinite();
    for (size_t k = 0; k < basic_columns.size() && usable; ++k) {
      refined(basic_columns[k]) = std::max(yb(k), 0.0);
    }
    if (usable) {
      std::vector<double> candidate = RecoverPoint(sf, refined);
      if (Violation(lp, candidate) <= Violation(lp, x))
        x = std::move(candidate);
    }
  }
  const double value = Objective(lp, x);
  return LpOutcome::MakeOptimal(value, std::move(x));
}

}  // namespace lpgraph
