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

#ifndef LPGRAPH_GNN_H_
#define LPGRAPH_GNN_H_

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpgraph/lp_graph.h"

namespace lpgraph {

enum class OutputMode { kScalar, kVertex };

// Learning targets: feasibility (scalar, {0, 1}), optimal value (scalar) and
// optimal solution (one value per variable).
enum class Task { kFeas, kObj, kSolu };

std::string_view TaskName(Task task);
Task ParseTask(std::string_view name);
OutputMode OutputModeFor(Task task);

// Message-passing network on LP graphs. Every learnable function is an MLP
// with ReLU hidden layers and a linear output layer; the input encoders have
// one hidden layer, every other MLP has two. All hidden and embedding widths
// equal embed_dim.
struct GnnConfig {
  int layers = 2;
  int embed_dim = 64;
  OutputMode output_mode = OutputMode::kScalar;

  void Validate() const;
  bool operator==(const GnnConfig&) const = default;
};

inline constexpr int kConstraintInputDim = 4;
inline constexpr int kVariableInputDim = 5;

// (b, [sense == "<="], [sense == "="], [sense == ">="]).
std::array<double, kConstraintInputDim> EncodeConstraintFeature(
    const ConstraintFeature& feature);
// (c, finite part of l, [l == -inf], finite part of u, [u == +inf]); an
// infinite bound contributes 0 to its finite slot.
std::array<double, kVariableInputDim> EncodeVariableFeature(
    const VariableFeature& feature);

struct DenseShape {
  int in = 0;
  int out = 0;
  int weight_offset = 0;  // in x out, column-major
  int bias_offset = 0;
};

struct MlpShape {
  std::string name;
  std::vector<DenseShape> layers;
};

// Offsets of every weight and bias inside the flat parameter vector, in
// declaration order: f_in_v, f_in_w, then for l = 1..L: f_l_v, f_l_w, g_l_v,
// g_l_w, then f_out (scalar) or f_out_w (vertex).
class ParamLayout {
 public:
  explicit ParamLayout(const GnnConfig& config);

  const std::vector<MlpShape>& mlps() const { return mlps_; }
  int size() const { return size_; }
  const MlpShape& f_in_v() const { return mlps_[0]; }
  const MlpShape& f_in_w() const { return mlps_[1]; }
  const MlpShape& f_v(int layer) const { return mlps_[2 + 4 * (layer - 1)]; }
  const MlpShape& f_w(int layer) const { return mlps_[3 + 4 * (layer - 1)]; }
  const MlpShape& g_v(int layer) const { return mlps_[4 + 4 * (layer - 1)]; }
  const MlpShape& g_w(int layer) const { return mlps_[5 + 4 * (layer - 1)]; }
  const MlpShape& f_out() const { return mlps_.back(); }

 private:
  MlpShape AddMlp(std::string name, std::vector<int> widths);

  std::vector<MlpShape> mlps_;
  int size_ = 0;
};

// Learnable state of a network (or a gradient with the same shape).
struct GnnParams {
  GnnConfig config;
  Eigen::VectorXd values;

  GnnParams() = default;
  GnnParams(const GnnConfig& config, Eigen::VectorXd values);

  static GnnParams Zeros(const GnnConfig& config);
  ParamLayout Layout() const { return ParamLayout(config); }
  int size() const { return static_cast<int>(values.size()); }
};

// Weights ~ U[-1/sqrt(fan_in), 1/sqrt(fan_in)] drawn in layout order; biases
// zero. Deterministic per (config, seed).
GnnParams InitParams(const GnnConfig& config, uint64_t seed);

// Several graphs stacked into one block-diagonal graph.
struct GraphBatch {
  int num_graphs = 0;
  Eigen::MatrixXd constraint_inputs;  // total m x 4
  Eigen::MatrixXd variable_inputs;    // total n x 5
  using Sparse = Eigen::SparseMatrix<double, Eigen::RowMajor>;
  Sparse edges;             // total m x total n
  Sparse edges_transposed;  // total n x total m
  Sparse pool_v;            // num_graphs x total m, ones
  Sparse pool_w;            // num_graphs x total n, ones
  Sparse spread_v;          // pool_v^T
  Sparse spread_w;          // pool_w^T
  std::vector<int>
      w_offset;  // graph g owns variables [w_offset[g], w_offset[g+1])

  static GraphBatch Build(std::span<const LpGraph* const> graphs);
  static GraphBatch Build(std::span<const LpGraph> graphs);
};

// Raw network outputs: one row per graph (scalar mode) or per variable
// vertex of the batch (vertex mode).
Eigen::VectorXd Forward(const GnnParams& params, const GraphBatch& batch);

double ForwardScalar(const GnnParams& params, const LpGraph& graph);
std::vector<double> ForwardVertex(const GnnParams& params,
                                  const LpGraph& graph);

// Per-batch targets in the layout of Forward's output.
struct LossAndGradient {
  double loss = 0.0;
  GnnParams gradient;
  Eigen::VectorXd outputs;
};

// Mean over graphs of the squared error (squared l2 error for kSolu), with
// the exact reverse-mode gradient.
LossAndGradient LossAndGrad(const GnnParams& params, const GraphBatch& batch,
                            const Eigen::VectorXd& targets, Task task);

// (graph, target) form: targets hold one value for kFeas/kObj and n values
// for kSolu. kFeas targets must be 0 or 1.
struct Sample {
  const LpGraph* graph = nullptr;
  std::vector<double> target;
};

LossAndGradient LossAndGrad(const GnnParams& params,
                            std::span<const Sample> batch, Task task);

}  // namespace lpgraph

#endif  // LPGRAPH_GNN_H_
