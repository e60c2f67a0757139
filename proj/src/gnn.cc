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

#include "lpgraph/gnn.h"

#include <cmath>
#include <string>

#include "lpgraph/errors.h"
#include "lpgraph/rng.h"

namespace lpgraph {

using Eigen::MatrixXd;
using Eigen::VectorXd;

std::string_view TaskName(Task task) {
  switch (task) {
    case Task::kFeas:
      return "feas";
    case Task::kObj:
      return "obj";
    case Task::kSolu:
      return "solu";
  }
  return "?";
}

Task ParseTask(std::string_view name) {
  if (name == "feas") return Task::kFeas;
  if (name == "obj") return Task::kObj;
  if (name == "solu") return Task::kSolu;
  throw InvalidArgument("unknown task '" + std::string(name) + "'");
}

OutputMode OutputModeFor(Task task) {
  return task == Task::kSolu ? OutputMode::kVertex : OutputMode::kScalar;
}

void GnnConfig::Validate() const {
  if (layers < 1) throw InvalidArgument("GNN needs at least one layer");
  if (embed_dim < 1) throw InvalidArgument("embedding size must be positive");
}

std::array<double, kConstraintInputDim> EncodeConstraintFeature(
    const ConstraintFeature& feature) {
  return {feature.rhs, feature.comparison == Comparison::kLessEqual ? 1.0 : 0.0,
          feature.comparison == Comparison::kEqual ? 1.0 : 0.0,
          feature.comparison == Comparison::kGreaterEqual ? 1.0 : 0.0};
}

std::array<double, kVariableInputDim> EncodeVariableFeature(
    const VariableFeature& feature) {
  return {feature.cost, feature.lower.value_or(0.0), feature.lower ? 0.0 : 1.0,
          feature.upper.value_or(0.0), feature.upper ? 0.0 : 1.0};
}

ParamLayout::ParamLayout(const GnnConfig& config) {
  config.Validate();
  const int d = config.embed_dim;
  mlps_.push_back(AddMlp("f_in_v", {kConstraintInputDim, d, d}));
  mlps_.push_back(AddMlp("f_in_w", {kVariableInputDim, d, d}));
  for (int l = 1; l <= config.layers; ++l) {
    const std::string suffix = std::to_string(l);
    mlps_.push_back(AddMlp("f_" + suffix + "_v", {d, d, d, d}));
    mlps_.push_back(AddMlp("f_" + suffix + "_w", {d, d, d, d}));
    mlps_.push_back(AddMlp("g_" + suffix + "_v", {2 * d, d, d, d}));
    mlps_.push_back(AddMlp("g_" + suffix + "_w", {2 * d, d, d, d}));
  }
  if (config.output_mode == OutputMode::kScalar) {
    mlps_.push_back(AddMlp("f_out", {2 * d, d, d, 1}));
  } else {
    mlps_.push_back(AddMlp("f_out_w", {3 * d, d, d, 1}));
  }
}

MlpShape ParamLayout::AddMlp(std::string name, std::vector<int> widths) {
  MlpShape mlp{std::move(name), {}};
  for (size_t k = 0; k + 1 < widths.size(); ++k) {
    DenseShape layer;
    layer.in = widths[k];
    layer.out = widths[k + 1];
    layer.weight_offset = size_;
    size_ += layer.in * layer.out;
    layer.bias_offset = size_;
    size_ += layer.out;
    mlp.layers.push_back(layer);
  }
  return mlp;
}

GnnParams::GnnParams(const GnnConfig& config, Eigen::VectorXd values)
    : config(config), values(std::move(values)) {
  if (this->values.size() != ParamLayout(config).size()) {
    throw InvalidArgument("parameter vector has " +
                          std::to_string(this->values.size()) +
                          " entries, configuration needs " +
                          std::to_string(ParamLayout(config).size()));
  }
}

GnnParams GnnParams::Zeros(const GnnConfig& config) {
  return GnnParams(config, VectorXd::Zero(ParamLayout(config).size()));
}

GnnParams InitParams(const GnnConfig& config, uint64_t seed) {
  GnnParams params = GnnParams::Zeros(config);
  Rng rng(seed);
  const ParamLayout layout(config);
  for (const MlpShape& mlp : layout.mlps()) {
    for (const DenseShape& layer : mlp.layers) {
      const double scale = 1.0 / std::sqrt(static_cast<double>(layer.in));
      for (int k = 0; k < layer.in * layer.out; ++k) {
        params.values(layer.weight_offset + k) = rng.Uniform(-scale, scale);
      }
    }
  }
  return params;
}

GraphBatch GraphBatch::Build(std::span<const LpGraph* const> graphs) {
  GraphBatch batch;
  batch.num_graphs = static_cast<int>(graphs.size());
  int total_m = 0;
  int total_n = 0;
  for (const LpGraph* g : graphs) {
    total_m += g->num_constraints();
    total_n += g->num_variables();
  }
  batch.constraint_inputs.resize(total_m, kConstraintInputDim);
  batch.variable_inputs.resize(total_n, kVariableInputDim);
  std::vector<Eigen::Triplet<double>> edges, pool_v, pool_w;
  batch.w_offset.assign(1, 0);
  int v0 = 0;
  int w0 = 0;
  for (int g = 0; g < batch.num_graphs; ++g) {
    const LpGraph& graph = *graphs[g];
    for (int i = 0; i < graph.num_constraints(); ++i) {
      const auto x = EncodeConstraintFeature(graph.constraint_features()[i]);
      for (int k = 0; k < kConstraintInputDim; ++k) {
        batch.constraint_inputs(v0 + i, k) = x[k];
      }
      pool_v.emplace_back(g, v0 + i, 1.0);
    }
    for (int j = 0; j < graph.num_variables(); ++j) {
      const auto x = EncodeVariableFeature(graph.variable_features()[j]);
      for (int k = 0; k < kVariableInputDim; ++k) {
        batch.variable_inputs(w0 + j, k) = x[k];
      }
      pool_w.emplace_back(g, w0 + j, 1.0);
    }
    for (const Triplet& t : graph.edges()) {
      edges.emplace_back(v0 + t.row, w0 + t.col, t.value);
    }
    v0 += graph.num_constraints();
    w0 += graph.num_variables();
    batch.w_offset.push_back(w0);
  }
  batch.edges.resize(total_m, total_n);
  batch.edges.setFromTriplets(edges.begin(), edges.end());
  batch.edges_transposed = Sparse(batch.edges.transpose());
  batch.pool_v.resize(batch.num_graphs, total_m);
  batch.pool_v.setFromTriplets(pool_v.begin(), pool_v.end());
  batch.pool_w.resize(batch.num_graphs, total_n);
  batch.pool_w.setFromTriplets(pool_w.begin(), pool_w.end());
  batch.spread_v = Sparse(batch.pool_v.transpose());
  batch.spread_w = Sparse(batch.pool_w.transpose());
  return batch;
}

GraphBatch GraphBatch::Build(std::span<const LpGraph> graphs) {
  std::vector<const LpGraph*> pointers;
  pointers.reserve(graphs.size());
  for (const LpGraph& g : graphs) pointers.push_back(&g);
  return Build(std::span<const LpGraph* const>(pointers));
}

namespace {

// Inputs of every dense layer of one MLP evaluation.
struct MlpTape {
  std::vector<MatrixXd> inputs;
};

MatrixXd MlpForward(const VectorXd& values, const MlpShape& mlp,
                    const MatrixXd& x, MlpTape* tape) {
  MatrixXd h = x;
  for (size_t k = 0; k < mlp.layers.size(); ++k) {
    const DenseShape& layer = mlp.layers[k];
    const Eigen::Map<const MatrixXd> w(values.data() + layer.weight_offset,
                                       layer.in, layer.out);
    const Eigen::Map<const VectorXd> b(values.data() + layer.bias_offset,
                                       layer.out);
    MatrixXd z = h * w;
    z.rowwise() += b.transpose();
    if (tape != nullptr) tape->inputs.push_back(std::move(h));
    if (k + 1 < mlp.layers.size()) z = z.cwiseMax(0.0);
    h = std::move(z);
  }
  return h;
}

// Accumulates parameter gradients into `grad` and returns d loss / d input.
MatrixXd MlpBackward(const VectorXd& values, const MlpShape& mlp,
                     const MlpTape& tape, MatrixXd upstream, VectorXd& grad) {
  for (int k = static_cast<int>(mlp.layers.size()) - 1; k >= 0; --k) {
    const DenseShape& layer = mlp.layers[k];
    const MatrixXd& input = tape.inputs[k];
    Eigen::Map<MatrixXd> dw(grad.data() + layer.weight_offset, layer.in,
                            layer.out);
    Eigen::Map<VectorXd> db(grad.data() + layer.bias_offset, layer.out);
    dw.noalias() += input.transpose() * upstream;
    db += upstream.colwise().sum().transpose();
    const Eigen::Map<const MatrixXd> w(values.data() + layer.weight_offset,
                                       layer.in, layer.out);
    MatrixXd down = upstream * w.transpose();
    if (k > 0) {
      // input = relu(previous pre-activation); its derivative is input > 0.
      down = (input.array() > 0.0).select(down, 0.0);
    }
    upstream = std::move(down);
  }
  return upstream;
}

MatrixXd Concat(const MatrixXd& a, const MatrixXd& b) {
  MatrixXd out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

MatrixXd Concat(const MatrixXd& a, const MatrixXd& b, const MatrixXd& c) {
  MatrixXd out(a.rows(), a.cols() + b.cols() + c.cols());
  out << a, b, c;
  return out;
}

struct LayerTape {
  MlpTape f_v, f_w, g_v, g_w;
};

struct ForwardTape {
  MlpTape in_v, in_w, out;
  std::vector<LayerTape> layers;
};

VectorXd RunForward(const GnnParams& params, const ParamLayout& layout,
                    const GraphBatch& batch, ForwardTape* tape) {
  const VectorXd& p = params.values;
  const int layers = params.config.layers;
  if (tape != nullptr) tape->layers.resize(layers);
  auto slot = [tape](MlpTape LayerTape::* member, int l) -> MlpTape* {
    return tape == nullptr ? nullptr : &(tape->layers[l].*member);
  };

  MatrixXd hv = MlpForward(p, layout.f_in_v(), batch.constraint_inputs,
                           tape ? &tape->in_v : nullptr);
  MatrixXd hw = MlpForward(p, layout.f_in_w(), batch.variable_inputs,
                           tape ? &tape->in_w : nullptr);
  for (int l = 1; l <= layers; ++l) {
    const MatrixXd messages_w =
        MlpForward(p, layout.f_w(l), hw, slot(&LayerTape::f_w, l - 1));
    const MatrixXd messages_v =
        MlpForward(p, layout.f_v(l), hv, slot(&LayerTape::f_v, l - 1));
    const MatrixXd sum_v = batch.edges * messages_w;
    const MatrixXd sum_w = batch.edges_transposed * messages_v;
    MatrixXd next_v = MlpForward(p, layout.g_v(l), Concat(hv, sum_v),
                                 slot(&LayerTape::g_v, l - 1));
    MatrixXd next_w = MlpForward(p, layout.g_w(l), Concat(hw, sum_w),
                                 slot(&LayerTape::g_w, l - 1));
    hv = std::move(next_v);
    hw = std::move(next_w);
  }
  const MatrixXd pooled_v = batch.pool_v * hv;
  const MatrixXd pooled_w = batch.pool_w * hw;
  MatrixXd out;
  if (params.config.output_mode == OutputMode::kScalar) {
    out = MlpForward(p, layout.f_out(), Concat(pooled_v, pooled_w),
                     tape ? &tape->out : nullptr);
  } else {
    out = MlpForward(
        p, layout.f_out(),
        Concat(batch.spread_w * pooled_v, batch.spread_w * pooled_w, hw),
        tape ? &tape->out : nullptr);
  }
  return out.col(0);
}

void RunBackward(const GnnParams& params, const ParamLayout& layout,
                 const GraphBatch& batch, const ForwardTape& tape,
                 const VectorXd& d_outputs, VectorXd& grad) {
  const VectorXd& p = params.values;
  const int d = params.config.embed_dim;
  MatrixXd d_in = MlpBackward(p, layout.f_out(), tape.out, d_outputs, grad);
  MatrixXd d_hv, d_hw;
  if (params.config.output_mode == OutputMode::kScalar) {
    d_hv = batch.spread_v * d_in.leftCols(d);
    d_hw = batch.spread_w * d_in.rightCols(d);
  } else {
    d_hv = batch.spread_v * (batch.pool_w * d_in.leftCols(d));
    d_hw = batch.spread_w * (batch.pool_w * d_in.middleCols(d, d)) +
           d_in.rightCols(d);
  }
  for (int l = params.config.layers; l >= 1; --l) {
    const LayerTape& lt = tape.layers[l - 1];
    const MatrixXd d_gv = MlpBackward(p, layout.g_v(l), lt.g_v, d_hv, grad);
    const MatrixXd d_gw = MlpBackward(p, layout.g_w(l), lt.g_w, d_hw, grad);
    MatrixXd prev_v = d_gv.leftCols(d);
    MatrixXd prev_w = d_gw.leftCols(d);
    // sum_v = E messages_w, sum_w = E^T messages_v.
    const MatrixXd d_messages_w = batch.edges_transposed * d_gv.rightCols(d);
    const MatrixXd d_messages_v = batch.edges * d_gw.rightCols(d);
    prev_w += MlpBackward(p, layout.f_w(l), lt.f_w, d_messages_w, grad);
    prev_v += MlpBackward(p, layout.f_v(l), lt.f_v, d_messages_v, grad);
    d_hv = std::move(prev_v);
    d_hw = std::move(prev_w);
  }
  MlpBackward(p, layout.f_in_v(), tape.in_v, d_hv, grad);
  MlpBackward(p, layout.f_in_w(), tape.in_w, d_hw, grad);
}

void CheckTargets(const GnnParams& params, const GraphBatch& batch,
                  const VectorXd& targets, Task task) {
  if (OutputModeFor(task) != params.config.output_mode) {
    throw InvalidArgument("task " + std::string(TaskName(task)) +
                          " does not match the network's output mode");
  }
  const Eigen::Index expected = params.config.output_mode == OutputMode::kScalar
                                    ? batch.num_graphs
                                    : batch.variable_inputs.rows();
  if (targets.size() != expected) {
    throw InvalidArgument("expected " + std::to_string(expected) +
                          " targets, got " + std::to_string(targets.size()));
  }
  if (task == Task::kFeas) {
    for (double t : targets) {
      if (t != 0.0 && t != 1.0) {
        throw InvalidArgument("feasibility targets must be 0 or 1");
      }
    }
  }
}

}  // namespace

VectorXd Forward(const GnnParams& params, const GraphBatch& batch) {
  return RunForward(params, params.Layout(), batch, nullptr);
}

double ForwardScalar(const GnnParams& params, const LpGraph& graph) {
  if (params.config.output_mode != OutputMode::kScalar) {
    throw InvalidArgument("network is not a scalar-output network");
  }
  const LpGraph* one[] = {&graph};
  return Forward(params, GraphBatch::Build(one))(0);
}

std::vector<double> ForwardVertex(const GnnParams& params,
                                  const LpGraph& graph) {
  if (params.config.output_mode != OutputMode::kVertex) {
    throw InvalidArgument("network is not a vertex-output network");
  }
  const LpGraph* one[] = {&graph};
  const VectorXd out = Forward(params, GraphBatch::Build(one));
  return std::vector<double>(out.data(), out.data() + out.size());
}

LossAndGradient LossAndGrad(const GnnParams& params, const GraphBatch& batch,
                            const VectorXd& targets, Task task) {
  CheckTargets(params, batch, targets, task);
  const ParamLayout layout = params.Layout();
  ForwardTape tape;
  LossAndGradient result;
  result.outputs = RunForward(params, layout, batch, &tape);
  const VectorXd residual = result.outputs - targets;
  const double graphs = static_cast<double>(batch.num_graphs);
  result.loss = residual.squaredNorm() / graphs;
  result.gradient = GnnParams::Zeros(params.config);
  RunBackward(params, layout, batch, tape, (2.0 / graphs) * residual,
              result.gradient.values);
  return result;
}

LossAndGradient LossAndGrad(const GnnParams& params,
                            std::span<const Sample> batch, Task task) {
  if (batch.empty()) throw InvalidArgument("empty batch");
  std::vector<const LpGraph*> graphs;
  std::vector<double> flat;
  for (const Sample& sample : batch) {
    graphs.push_back(sample.graph);
    const size_t expected =
        task == Task::kSolu ? sample.graph->num_variables() : 1;
    if (sample.target.size() != expected) {
      throw InvalidArgument("target length does not match task " +
                            std::string(TaskName(task)));
    }
    flat.insert(flat.end(), sample.target.begin(), sample.target.end());
  }
  return LossAndGrad(params, GraphBatch::Build(graphs),
                     Eigen::Map<const VectorXd>(flat.data(), flat.size()),
                     task);
}

}  // namespace lpgraph
