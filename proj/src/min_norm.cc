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

#include "lpgraph/min_norm.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "lpgraph/errors.h"

namespace lpgraph {
namespace {

// min 1/2 |x|^2  s.t.  eq_matrix x = eq_rhs,  ineq_matrix x <= ineq_rhs.
struct FaceQp {
  Eigen::MatrixXd eq_matrix;
  Eigen::VectorXd eq_rhs;
  Eigen::MatrixXd ineq_matrix;
  Eigen::VectorXd ineq_rhs;
};

FaceQp BuildFaceQp(const LpInstance& lp, double optimal_value,
                   double objective_slack) {
  const int m = lp.num_constraints();
  const int n = lp.num_variables();
  const auto dense = lp.DenseMatrix();
  std::vector<Eigen::VectorXd> eq_rows, ineq_rows;
  std::vector<double> eq_rhs, ineq_rhs;
  auto to_vector = [n](const std::vector<double>& row) {
    return Eigen::Map<const Eigen::VectorXd>(row.data(), n).eval();
  };
  for (int i = 0; i < m; ++i) {
    const Eigen::VectorXd a = to_vector(dense[i]);
    switch (lp.comparisons()[i]) {
      case Comparison::kEqual:
        eq_rows.push_back(a);
        eq_rhs.push_back(lp.rhs()[i]);
        break;
      case Comparison::kLessEqual:
        ineq_rows.push_back(a);
        ineq_rhs.push_back(lp.rhs()[i]);
        break;
      case Comparison::kGreaterEqual:
        ineq_rows.push_back(-a);
        ineq_rhs.push_back(-lp.rhs()[i]);
        break;
    }
  }
  for (int j = 0; j < n; ++j) {
    if (lp.lower()[j]) {
      ineq_rows.push_back(-Eigen::VectorXd::Unit(n, j));
      ineq_rhs.push_back(-*lp.lower()[j]);
    }
    if (lp.upper()[j]) {
      ineq_rows.push_back(Eigen::VectorXd::Unit(n, j));
      ineq_rhs.push_back(*lp.upper()[j]);
    }
  }
  const Eigen::VectorXd c = to_vector(lp.objective());
  if (c.cwiseAbs().maxCoeff() > 0.0) {
    ineq_rows.push_back(c);
    ineq_rhs.push_back(optimal_value +
                       objective_slack * (1.0 + std::abs(optimal_value)));
  }

  FaceQp qp;
  qp.eq_matrix.resize(eq_rows.size(), n);
  qp.eq_rhs.resize(eq_rows.size());
  for (size_t k = 0; k < eq_rows.size(); ++k) {
    qp.eq_matrix.row(k) = eq_rows[k].transpose();
    qp.eq_rhs(k) = eq_rhs[k];
  }
  qp.ineq_matrix.resize(ineq_rows.size(), n);
  qp.ineq_rhs.resize(ineq_rows.size());
  for (size_t k = 0; k < ineq_rows.size(); ++k) {
    qp.ineq_matrix.row(k) = ineq_rows[k].transpose();
    qp.ineq_rhs(k) = ineq_rhs[k];
  }
  return qp;
}

// Working-set row: equality rows are indexed [0, num_eq), inequality rows
// follow.
class ActiveSetSolver {
 public:
  ActiveSetSolver(const FaceQp& qp, const MinNormOptions& options,
                  bool fallback)
      : qp_(qp),
        options_(options),
        fallback_(fallback),
        n_(static_cast<int>(qp.ineq_matrix.cols())) {}

  std::optional<MinNormResult> Run(Eigen::VectorXd x) {
    const int num_eq = static_cast<int>(qp_.eq_matrix.rows());
    std::vector<int> working;
    // Keep a linearly independent subset of the equality rows.
    for (int k = 0; k < num_eq; ++k) {
      working.push_back(k);
      if (WorkingRank(working) < static_cast<int>(working.size())) {
        working.pop_back();
      }
    }

    const double step_tol = options_.qp_tolerance * 1e-2;
    for (int iter = 1; iter <= options_.max_iterations; ++iter) {
      const Eigen::MatrixXd a = WorkingMatrix(working);
      Eigen::VectorXd p;
      if (a.rows() == 0) {
        p = -x;
      } else {
        p = -(x - Project(a, x));
      }
      if (p.norm() <= step_tol * (1.0 + x.norm())) {
        const Eigen::VectorXd lambda = Multipliers(a, x);
        int drop = -1;
        double most_negative = -options_.qp_tolerance * (1.0 + x.norm());
        for (size_t k = 0; k < working.size(); ++k) {
          if (working[k] < num_eq) continue;
          if (fallback_) {
            if (lambda(k) < most_negative &&
                (drop < 0 || working[k] < working[drop])) {
              drop = static_cast<int>(k);
            }
          } else if (lambda(k) < most_negative) {
            most_negative = lambda(k);
            drop = static_cast<int>(k);
          }
        }
        if (drop < 0) {
          MinNormResult result;
          result.solution.assign(x.data(), x.data() + x.size());
          result.iterations = iter;
          result.used_fallback = fallback_;
          Eigen::VectorXd stationarity = x;
          if (a.rows() > 0) stationarity += a.transpose() * lambda;
          result.kkt_residual = stationarity.cwiseAbs().maxCoeff();
          return result;
        }
        working.erase(working.begin() + drop);
        continue;
      }

      double alpha = 1.0;
      int blocking = -1;
      const Eigen::VectorXd gp = qp_.ineq_matrix * p;
      const Eigen::VectorXd slack = qp_.ineq_rhs - qp_.ineq_matrix * x;
      for (int r = 0; r < gp.size(); ++r) {
        if (gp(r) <= 1e-14 * p.norm()) continue;
        if (std::find(working.begin(), working.end(), num_eq + r) !=
            working.end()) {
          continue;
        }
        const double ratio = std::max(slack(r), 0.0) / gp(r);
        if (ratio < alpha) {
          alpha = ratio;
          blocking = r;
        }
      }
      x += alpha * p;
      if (blocking >= 0) working.push_back(num_eq + blocking);
    }
    return std::nullopt;
  }

 private:
  Eigen::MatrixXd WorkingMatrix(const std::vector<int>& working) const {
    const int num_eq = static_cast<int>(qp_.eq_matrix.rows());
    Eigen::MatrixXd a(working.size(), n_);
    for (size_t k = 0; k < working.size(); ++k) {
      a.row(k) = working[k] < num_eq ? qp_.eq_matrix.row(working[k])
                                     : qp_.ineq_matrix.row(working[k] - num_eq);
    }
    return a;
  }

  int WorkingRank(const std::vector<int>& working) const {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(
        WorkingMatrix(working).transpose());
    qr.setThreshold(1e-10);
    return static_cast<int>(qr.rank());
  }

  // Orthogonal projection of x onto the row space of a.
  Eigen::VectorXd Project(const Eigen::MatrixXd& a,
                          const Eigen::VectorXd& x) const {
    if (fallback_) {
      const Eigen::MatrixXd gram =
          a * a.transpose() +
          options_.ridge * Eigen::MatrixXd::Identity(a.rows(), a.rows());
      return a.transpose() * gram.ldlt().solve(a * x);
    }
    // Rank-revealing: the working rows may be linearly dependent, and the
    // leading columns of an unpivoted Q would then span too large a space.
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a.transpose());
    qr.setThreshold(1e-10);
    const Eigen::MatrixXd q =
        qr.householderQ() * Eigen::MatrixXd::Identity(n_, qr.rank());
    return q * (q.transpose() * x);
  }

  // Solves x + a^T lambda = 0 in the least-squares sense.
  Eigen::VectorXd Multipliers(const Eigen::MatrixXd& a,
                              const Eigen::VectorXd& x) const {
    if (a.rows() == 0) return Eigen::VectorXd();
    return a.transpose().colPivHouseholderQr().solve(-x);
  }

  const FaceQp& qp_;
  const MinNormOptions& options_;
  bool fallback_;
  int n_;
};

}  // namespace

MinNormResult MinNormOptimal(const LpInstance& lp, const LpOutcome& outcome,
                             const MinNormOptions& options) {
  if (!outcome.is_optimal()) {
    throw NotOptimal("minimum-norm solution requested for an " +
                     std::string(OutcomeStatusName(outcome.status())) + " LP");
  }
  const auto& optimal = outcome.optimal();
  const FaceQp qp = BuildFaceQp(lp, optimal.value, options.objective_slack);
  const Eigen::VectorXd start = Eigen::Map<const Eigen::VectorXd>(
      optimal.solution.data(), optimal.solution.size());
  if (auto result = ActiveSetSolver(qp, options, false).Run(start)) {
    return *std::move(result);
  }
  if (auto result = ActiveSetSolver(qp, options, true).Run(start)) {
    return *std::move(result);
  }
  throw QpNonConvergence("active-set QP did not converge in " +
                         std::to_string(options.max_iterations) +
                         " iterations");
}

MinNormResult MinNormOptimal(const LpInstance& lp,
                             const MinNormOptions& options) {
  return MinNormOptimal(lp, Solve(lp, options.solver), options);
}

}  // namespace lpgraph
