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
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "lpgraph/adam.h"
#include "lpgraph/errors.h"
#include "lpgraph/instance_forge.h"
#include "lpgraph/lp_graph.h"
#include "lpgraph/rng.h"
#include "test_instances.h"

namespace lpgraph {
namespace {

using ::lpgraph::testing::ExampleLp;
using ::lpgraph::testing::SmallRandomLp;

TEST(AdamTest, ZeroGradientLeavesParameters) {
  Eigen::VectorXd params(3);
  params << 1, -2, 3;
  const Eigen::VectorXd before = params;
  AdamState state = AdamState::Zeros(3);
  AdamStep(AdamOptions{}, Eigen::VectorXd::Zero(3), state, params);
  EXPECT_EQ(params, before);
  EXPECT_EQ(state.step, 1);
}

TEST(AdamTest, FirstStepMovesByLearningRate) {
  Eigen::VectorXd params = Eigen::VectorXd::Zero(3);
  Eigen::VectorXd grad(3);
  grad << 0.5, -4.0, 1e-3;
  AdamState state = AdamState::Zeros(3);
  AdamStep(AdamOptions{}, grad, state, params);
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(params(k), -3e-4 * grad(k) / (std::abs(grad(k)) + 1e-8), 1e-15);
  }
}

// Scalar transcription of the update rule, run for a few steps.
TEST(AdamTest, MatchesScalarRecurrence) {
  const AdamOptions options{0.01, 0.8, 0.95, 1e-6};
  const double grads[] = {1.0, -0.5, 2.0, 0.25};
  double x = 1.0, m = 0.0, v = 0.0;
  Eigen::VectorXd params = Eigen::VectorXd::Constant(1, 1.0);
  AdamState state = AdamState::Zeros(1);
  for (int t = 1; t <= 4; ++t) {
    const double g = grads[t - 1];
    m = 0.8 * m + 0.2 * g;
    v = 0.95 * v + 0.05 * g * g;
    const double m_hat = m / (1 - std::pow(0.8, t));
    const double v_hat = v / (1 - std::pow(0.95, t));
    x -= 0.01 * m_hat / (std::sqrt(v_hat) + 1e-6);
    AdamStep(options, Eigen::VectorXd::Constant(1, g), state, params);
    EXPECT_NEAR(params(0), x, 1e-14) << t;
  }
}

TEST(AdamTest, SizeMismatchThrows) {
  Eigen::VectorXd params = Eigen::VectorXd::Zero(3);
  AdamState state = AdamState::Zeros(2);
  EXPECT_THROW(AdamStep({}, Eigen::VectorXd::Zero(3), state, params),
               InvalidArgument);
}

TEST(MetricTest, ExactOutputsScoreZero) {
  const std::vector<std::vector<double>> scalar{{1.0}, {0.0}, {-3.5}};
  const std::vector<std::vector<double>> vertex{{1.0, 2.0}, {0.0}};
  EXPECT_EQ(Metric(Task::kFeas, {scalar.data(), 2}, {scalar.data(), 2}), 0.0);
  EXPECT_EQ(Metric(Task::kObj, scalar, scalar), 0.0);
  EXPECT_EQ(Metric(Task::kSolu, vertex, vertex), 0.0);
}

TEST(MetricTest, FeasibilityThresholdIsOneHalf) {
  const std::vector<std::vector<double>> outputs{{0.6}, {0.6}, {0.5}, {0.4}};
  const std::vector<std::vector<double>> labels{{1.0}, {1.0}, {1.0}, {0.0}};
  EXPECT_DOUBLE_EQ(Metric(Task::kFeas, outputs, labels), 0.25);
}

TEST(MetricTest, RelativeErrors) {
  const std::vector<std::vector<double>> two{{2.0}};
  const std::vector<std::vector<double>> one{{1.0}};
  EXPECT_DOUBLE_EQ(Metric(Task::kObj, two, one), 0.5);
  const std::vector<std::vector<double>> y{{1.0, 1.0}, {3.0, 4.0}};
  const std::vector<std::vector<double>> t{{0.0, 0.0}, {0.0, 0.0}};
  EXPECT_DOUBLE_EQ(Metric(Task::kSolu, y, t), (std::sqrt(2.0) + 5.0) / 2);
}

TEST(MetricTest, LengthMismatchThrows) {
  const std::vector<std::vector<double>> a{{1.0}, {2.0}};
  const std::vector<std::vector<double>> b{{1.0}};
  const std::vector<std::vector<double>> c{{1.0, 2.0}, {2.0}};
  EXPECT_THROW(Metric(Task::kObj, a, b), InvalidArgument);
  EXPECT_THROW(Metric(Task::kSolu, a, c), InvalidArgument);
  EXPECT_THROW(Metric(Task::kObj, c, c), InvalidArgument);
  EXPECT_THROW(Metric(Task::kObj, {}, {}), InvalidArgument);
}

std::vector<LabeledRecord> SmallRecords(int count, bool min_norm = false) {
  std::vector<LpInstance> lps;
  for (int s = 0; s < count; ++s) lps.push_back(SmallRandomLp(s, 5));
  return LabelDataset(lps, LabelOptions{min_norm});
}

TEST(TrainingSetTest, FiltersByTask) {
  const std::vector<LabeledRecord> records = SmallRecords(40, true);
  int optimal = 0;
  for (const LabeledRecord& r : records) optimal += r.bounded;
  ASSERT_GT(optimal, 0);
  ASSERT_LT(optimal, 40);
  const TrainingSet feas = MakeTrainingSet(records, Task::kFeas);
  EXPECT_EQ(feas.size(), static_cast<int>(records.size()));
  for (size_t k = 0; k < records.size(); ++k) {
    EXPECT_EQ(feas.targets[k][0], records[k].feasible ? 1.0 : 0.0);
    EXPECT_EQ(feas.graphs[k], Encode(records[k].lp));
  }
  const TrainingSet obj = MakeTrainingSet(records, Task::kObj);
  EXPECT_EQ(obj.size(), optimal);
  const TrainingSet solu = MakeTrainingSet(records, Task::kSolu);
  const TrainingSet solu_mn =
      MakeTrainingSet(records, Task::kSolu, SoluLabel::kMinNorm);
  ASSERT_EQ(solu.size(), optimal);
  ASSERT_EQ(solu_mn.size(), optimal);
  for (int k = 0; k < optimal; ++k) {
    EXPECT_EQ(solu.targets[k].size(),
              static_cast<size_t>(solu.graphs[k].num_variables()));
  }
  EXPECT_THROW(
      MakeTrainingSet(SmallRecords(10), Task::kSolu, SoluLabel::kMinNorm),
      InvalidArgument);
}

TrainingSet SingleGraphSet(Task task) {
  TrainingSet data;
  data.task = task;
  data.graphs.push_back(Encode(ExampleLp()));
  if (task == Task::kSolu) {
    data.targets.push_back({1.0, 0.0});
  } else {
    data.targets.push_back({1.0});
  }
  return data;
}

TEST(TrainTest, MemorizesOneInstance) {
  for (Task task : {Task::kFeas, Task::kObj, Task::kSolu}) {
    TrainConfig config;
    config.gnn = GnnConfig{2, 8, OutputModeFor(task)};
    config.epochs = 3000;
    config.seed = 4;
    config.adam.learning_rate = 3e-3;
    const TrainResult result = Train(config, SingleGraphSet(task));
    EXPECT_LT(result.final.loss, 1e-8) << TaskName(task);
    EXPECT_LT(result.final.loss, result.history.front().loss);
  }
}

TEST(TrainTest, DeterministicHistory) {
  const TrainingSet data = MakeTrainingSet(SmallRecords(12), Task::kFeas);
  for (int batch_size : {0, 5}) {
    TrainConfig config;
    config.gnn = GnnConfig{2, 6};
    config.epochs = 30;
    config.seed = 9;
    config.batch_size = batch_size;
    const TrainResult a = Train(config, data);
    const TrainResult b = Train(config, data);
    ASSERT_EQ(a.history.size(), 30u);
    for (size_t e = 0; e < a.history.size(); ++e) {
      EXPECT_EQ(a.history[e].loss, b.history[e].loss);
      EXPECT_EQ(a.history[e].metric, b.history[e].metric);
    }
    EXPECT_EQ(a.params.values, b.params.values);
    config.seed = 10;
    EXPECT_NE(Train(config, data).params.values, a.params.values);
  }
}

TEST(TrainTest, HistoryStartsFromInitialParameters) {
  const TrainingSet data = MakeTrainingSet(SmallRecords(8), Task::kObj);
  TrainConfig config;
  config.gnn = GnnConfig{2, 4};
  config.epochs = 3;
  config.seed = 2;
  const TrainResult result = Train(config, data);
  const GnnParams initial = InitParams(config.gnn, StreamSeed(config.seed, 0));
  const Evaluation before = Evaluate(initial, data);
  EXPECT_DOUBLE_EQ(result.history[0].loss, before.loss);
  EXPECT_DOUBLE_EQ(result.history[0].metric, before.metric);
  EXPECT_EQ(result.history[2].epoch, 3);
}

TEST(TrainTest, StopsAtTargetMetric) {
  TrainConfig config;
  config.gnn = GnnConfig{1, 4};
  config.epochs = 100;
  config.stop_metric = 1.0;
  const TrainResult result = Train(config, SingleGraphSet(Task::kFeas));
  EXPECT_EQ(result.history.size(), 1u);
}

TEST(TrainTest, CallbackSeesEveryEpoch) {
  TrainConfig config;
  config.gnn = GnnConfig{1, 2};
  config.epochs = 7;
  int seen = 0;
  Train(config, SingleGraphSet(Task::kObj),
        [&seen](const EpochRecord& r) { EXPECT_EQ(r.epoch, ++seen); });
  EXPECT_EQ(seen, 7);
}

TEST(TrainTest, RejectsBadInput) {
  TrainConfig config;
  config.gnn = GnnConfig{1, 2};
  TrainingSet empty;
  EXPECT_THROW(Train(config, empty), InvalidArgument);
  EXPECT_THROW(Train(config, SingleGraphSet(Task::kSolu)), InvalidArgument);
  EXPECT_THROW(Evaluate(InitParams(config.gnn, 0), SingleGraphSet(Task::kSolu)),
               InvalidArgument);
  config.epochs = -1;
  EXPECT_THROW(Train(config, SingleGraphSet(Task::kObj)), InvalidArgument);
}

}  // namespace
}  // namespace lpgraph
