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

#include "lpgraph/trainer.h"

#include <cmath>
#include <string>
#include <utility>

#include "lpgraph/errors.h"
#include "lpgraph/rng.h"

namespace lpgraph {

std::vector<Sample> TrainingSet::Samples() const {
  std::vector<Sample> samples;
  samples.reserve(graphs.size());
  for (size_t k = 0; k < graphs.size(); ++k) {
    samples.push_back({&graphs[k], targets[k]});
  }
  return samples;
}

TrainingSet MakeTrainingSet(std::span<const LabeledRecord> records, Task task,
                            SoluLabel solu_label) {
  TrainingSet data;
  data.task = task;
  for (const LabeledRecord& record : records) {
    if (task == Task::kFeas) {
      data.targets.push_back({record.feasible ? 1.0 : 0.0});
    } else if (!record.bounded) {
      continue;
    } else if (task == Task::kObj) {
      data.targets.push_back({*record.objective});
    } else if (solu_label == SoluLabel::kSimplex) {
      data.targets.push_back(*record.solution);
    } else {
      if (!record.min_norm_solution) {
        throw InvalidArgument("record has no min-norm solution label");
      }
      data.targets.push_back(*record.min_norm_solution);
    }
    data.graphs.push_back(Encode(record.lp));
  }
  return data;
}

double Metric(Task task, std::span<const std::vector<double>> outputs,
              std::span<const std::vector<double>> targets) {
  if (outputs.size() != targets.size()) {
    throw InvalidArgument("metric needs as many outputs as targets");
  }
  if (outputs.empty()) throw InvalidArgument("metric of an empty set");
  double total = 0.0;
  for (size_t k = 0; k < outputs.size(); ++k) {
    const std::vector<double>& y = outputs[k];
    const std::vector<double>& t = targets[k];
    if (y.size() != t.size() || (task != Task::kSolu && y.size() != 1)) {
      throw InvalidArgument("output " + std::to_string(k) +
                            " does not match its target length");
    }
    switch (task) {
      case Task::kFeas:
        total += ((y[0] > 0.5) != (t[0] > 0.5)) ? 1.0 : 0.0;
        break;
      case Task::kObj:
        total += std::abs(y[0] - t[0]) / (std::abs(t[0]) + 1);
        break;
      case Task::kSolu: {
        double diff = 0.0;
        double norm = 0.0;
        for (size_t j = 0; j < y.size(); ++j) {
          diff += (y[j] - t[j]) * (y[j] - t[j]);
          norm += t[j] * t[j];
        }
        total += std::sqrt(diff) / (std::sqrt(norm) + 1);
        break;
      }
    }
  }
  return total / static_cast<double>(outputs.size());
}

namespace {

struct PreparedBatch {
  GraphBatch batch;
  Eigen::VectorXd targets;
  std::vector<int> members;
};

PreparedBatch Prepare(const TrainingSet& data, std::vector<int> members) {
  PreparedBatch out;
  std::vector<const LpGraph*> graphs;
  std::vector<double> flat;
  for (int k : members) {
    graphs.push_back(&data.graphs[k]);
    flat.insert(flat.end(), data.targets[k].begin(), data.targets[k].end());
  }
  out.batch = GraphBatch::Build(graphs);
  out.targets = Eigen::Map<const Eigen::VectorXd>(flat.data(), flat.size());
  out.members = std::move(members);
  return out;
}

// Splits batched outputs back into one vector per member graph.
void Scatter(const TrainingSet& data, const PreparedBatch& prepared,
             const Eigen::VectorXd& outputs,
             std::vector<std::vector<double>>& per_graph) {
  int offset = 0;
  for (int k : prepared.members) {
    const int len = static_cast<int>(data.targets[k].size());
    per_graph[k].assign(outputs.data() + offset, outputs.data() + offset + len);
    offset += len;
  }
}

void CheckData(const TrainingSet& data) {
  if (data.graphs.empty()) throw InvalidArgument("empty training set");
  if (data.graphs.size() != data.targets.size()) {
    throw InvalidArgument("training set has unequal graph and target counts");
  }
}

}  // namespace

Evaluation Evaluate(const GnnParams& params, const TrainingSet& data) {
  CheckData(data);
  std::vector<int> all(data.size());
  for (int k = 0; k < data.size(); ++k) all[k] = k;
  const PreparedBatch prepared = Prepare(data, std::move(all));
  Evaluation eval;
  const Eigen::VectorXd y = Forward(params, prepared.batch);
  if (y.size() != prepared.targets.size()) {
    throw InvalidArgument("network output mode does not fit the task");
  }
  eval.loss = (y - prepared.targets).squaredNorm() / data.size();
  eval.outputs.resize(data.size());
  Scatter(data, prepared, y, eval.outputs);
  eval.metric = Metric(data.task, eval.outputs, data.targets);
  return eval;
}

TrainResult Train(const TrainConfig& config, const TrainingSet& data,
                  const std::function<void(const EpochRecord&)>& on_epoch) {
  CheckData(data);
  if (config.epochs < 0) throw InvalidArgument("negative epoch count");
  if (config.batch_size < 0) throw InvalidArgument("negative batch size");
  if (OutputModeFor(data.task) != config.gnn.output_mode) {
    throw InvalidArgument("output mode does not fit task " +
                          std::string(TaskName(data.task)));
  }
  TrainResult result;
  result.params = InitParams(config.gnn, StreamSeed(config.seed, 0));
  AdamState adam = AdamState::Zeros(result.params.size());
  Rng shuffle_rng(StreamSeed(config.seed, 1));

  const int count = data.size();
  const int batch_size = config.batch_size == 0 || config.batch_size >= count
                             ? count
                             : config.batch_size;
  std::vector<int> order(count);
  for (int k = 0; k < count; ++k) order[k] = k;
  std::vector<PreparedBatch> batches;
  auto make_batches = [&] {
    batches.clear();
    for (int start = 0; start < count; start += batch_size) {
      const int end = std::min(count, start + batch_size);
      batches.push_back(Prepare(
          data, std::vector<int>(order.begin() + start, order.begin() + end)));
    }
  };
  make_batches();

  std::vector<std::vector<double>> outputs(count);
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    if (batch_size < count) {
      shuffle_rng.Shuffle(order);
      make_batches();
    }
    double loss = 0.0;
    for (const PreparedBatch& prepared : batches) {
      const LossAndGradient step = LossAndGrad(result.params, prepared.batch,
                                               prepared.targets, data.task);
      loss += step.loss * static_cast<double>(prepared.members.size());
      Scatter(data, prepared, step.outputs, outputs);
      AdamStep(config.adam, step.gradient.values, adam, result.params.values);
    }
    EpochRecord record{epoch, loss / count,
                       Metric(data.task, outputs, data.targets)};
    result.history.push_back(record);
    if (on_epoch) on_epoch(record);
    if (config.stop_metric && record.metric <= *config.stop_metric) break;
  }
  result.final = Evaluate(result.params, data);
  return result;
}

}  // namespace lpgraph
