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

#ifndef LPGRAPH_TRAINER_H_
#define LPGRAPH_TRAINER_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lpgraph/adam.h"
#include "lpgraph/gnn.h"
#include "lpgraph/instance_forge.h"
#include "lpgraph/lp_graph.h"

namespace lpgraph {

// Graphs with one target vector each (length 1 for kFeas/kObj, n for kSolu).
struct TrainingSet {
  Task task = Task::kFeas;
  std::vector<LpGraph> graphs;
  std::vector<std::vector<double>> targets;

  int size() const { return static_cast<int>(graphs.size()); }
  std::vector<Sample> Samples() const;
};

enum class SoluLabel { kSimplex, kMinNorm };

// Targets from labeled records. kFeas uses every record; kObj and kSolu keep
// only records with an optimum. kMinNorm requires min-norm labels.
TrainingSet MakeTrainingSet(std::span<const LabeledRecord> records, Task task,
                            SoluLabel solu_label = SoluLabel::kSimplex);

// Task metric over aligned output/target lists.
//   kFeas: fraction of graphs with [output > 1/2] != target.
//   kObj:  mean of |output - target| / (|target| + 1).
//   kSolu: mean of ||output - target|| / (||target|| + 1).
double Metric(Task task, std::span<const std::vector<double>> outputs,
              std::span<const std::vector<double>> targets);

struct TrainConfig {
  GnnConfig gnn;
  int epochs = 1000;
  uint64_t seed = 0;
  // 0 means one full batch per epoch.
  int batch_size = 0;
  AdamOptions adam;
  // Stop once the training metric of an epoch is at or below this value.
  std::optional<double> stop_metric;
};

struct EpochRecord {
  int epoch = 0;  // 1-based
  double loss = 0.0;
  // Metric of the parameters the epoch started from.
  double metric = 0.0;
};

struct Evaluation {
  double loss = 0.0;
  double metric = 0.0;
  std::vector<std::vector<double>> outputs;
};

Evaluation Evaluate(const GnnParams& params, const TrainingSet& data);

struct TrainResult {
  GnnParams params;
  std::vector<EpochRecord> history;
  // Evaluation of the returned parameters on the training set.
  Evaluation final;
};

// Deterministic per config.seed. `on_epoch` (optional) sees every record as
// it is produced.
TrainResult Train(const TrainConfig& config, const TrainingSet& data,
                  const std::function<void(const EpochRecord&)>& on_epoch = {});

}  // namespace lpgraph

#endif  // LPGRAPH_TRAINER_H_
