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

// End-to-end acceptance checks. Each test prints one PASS/FAIL line and
// appends it to acceptance_results.txt in the working directory.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "lpgraph/fold_verify.h"
#include "lpgraph/gnn.h"
#include "lpgraph/instance_forge.h"
#include "lpgraph/lp_graph.h"
#include "lpgraph/lp_solver.h"
#include "lpgraph/rng.h"
#include "lpgraph/trainer.h"
#include "lpgraph/vertex_oracle.h"
#include "lpgraph/wl_refine.h"
#include "test_instances.h"

namespace lpgraph {
namespace {

using ::lpgraph::testing::SmallRandomLp;
using json = nlohmann::json;

void Report(int criterion, const std::string& title, bool pass,
            const std::string& detail) {
  std::ostringstream line;
  line << "[" << criterion << "] " << (pass ? "PASS" : "FAIL") << " " << title
       << ": " << detail;
  std::cout << line.str() << std::endl;
  std::ofstream("acceptance_results.txt", std::ios::app) << line.str() << "\n";
  EXPECT_TRUE(pass) << "criterion " << criterion;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string Fmt(double value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

GnnParams RandomParams(const GnnConfig& config, uint64_t seed) {
  GnnParams params = InitParams(config, seed);
  Rng rng(StreamSeed(seed, 99));
  const ParamLayout layout = params.Layout();
  for (const MlpShape& mlp : layout.mlps()) {
    for (const DenseShape& layer : mlp.layers) {
      for (int k = 0; k < layer.out; ++k) {
        params.values(layer.bias_offset + k) = rng.Uniform(-0.3, 0.3);
      }
    }
  }
  return params;
}

double MaxAbs(const std::vector<double>& values) {
  double out = 0.0;
  for (double v : values) out = std::max(out, std::abs(v));
  return out;
}

TEST(AcceptanceTest, CycleSplitTwinsCertified) {
  const auto start = std::chrono::steady_clock::now();
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "lpgraph_acceptance_twin";
  std::filesystem::create_directories(dir);
  bool pass = true;
  std::string detail;
  for (const std::string variant : {"infeasible", "unbounded", "bounded"}) {
    const std::string report_path = (dir / (variant + ".json")).string();
    std::ostringstream out, err;
    const int code =
        cli::Run({"lpgraph", "twin", "--family", "cycle-split", "--k", "4",
                  "--variant", variant, "--report", report_path},
                 out, err);
    std::ifstream in(report_path);
    std::string header;
    std::getline(in, header);
    const json r = json::parse(in);
    bool ok = code == cli::kExitOk && r["wl_indistinguishable"] == true &&
              r["feas_match"] == true && r["obj_match"] == true;
    if (variant == "infeasible") {
      ok = ok && r["status_first"] == "infeasible" &&
           r["status_second"] == "infeasible";
    } else if (variant == "unbounded") {
      ok = ok && r["status_first"] == "unbounded" &&
           r["status_second"] == "unbounded";
    } else {
      ok = ok && r["status_first"] == "optimal" &&
           r["status_second"] == "optimal" &&
           std::abs(r["objective_first"].get<double>() - 2.0) <= 1e-9 &&
           std::abs(r["objective_second"].get<double>() - 2.0) <= 1e-9 &&
           r["solu_match"] == true;
      for (const char* key : {"min_norm_first", "min_norm_second"}) {
        const auto x = r[key].get<std::vector<double>>();
        ok = ok && x.size() == 4;
        for (double v : x) ok = ok && std::abs(v - 0.5) <= 1e-8;
      }
    }
    detail += variant + (ok ? " ok, " : " MISMATCH, ");
    pass = pass && ok;
  }
  std::filesystem::remove_all(dir);
  const double seconds = Seconds(start);
  pass = pass && seconds < 1.0;
  Report(1, "cycle-split twins (k=4) through the twin command", pass,
         detail + "runtime " + Fmt(seconds) + " s (< 1 s)");
}

TEST(AcceptanceTest, LiftedTwinsShareProperties) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(31337);
  int passed = 0;
  for (int s = 0; s < 200; ++s) {
    const int r = 2 + static_cast<int>(rng.UniformInt(2));
    const LiftPattern pattern =
        s % 2 == 0 ? LiftPattern::kCycle : LiftPattern::kDisjoint;
    const LpInstance base = SmallRandomLp(StreamSeed(2, s), 5);
    const auto [a, b] = LiftReplicate(base, r, pattern, s);
    const TwinReport report = CheckTwinProperties(a, b, 1e-6);
    passed += report.AllMatch();
  }
  const double seconds = Seconds(start);
  Report(2, "lifted twin pairs share feasibility, value, min-norm solution",
         passed == 200 && seconds < 60.0,
         std::to_string(passed) + "/200 pairs, runtime " + Fmt(seconds) +
             " s (< 60 s)");
}

TEST(AcceptanceTest, SimplexAgreesWithEnumeration) {
  const auto start = std::chrono::steady_clock::now();
  int agree = 0;
  for (int s = 0; s < 500; ++s) {
    const LpInstance lp = SmallRandomLp(StreamSeed(3, s), 6);
    const LpOutcome simplex = Solve(lp);
    const LpOutcome oracle = EnumerateOutcomeOracle(lp);
    bool ok = simplex.status() == oracle.status();
    if (ok && simplex.is_optimal()) {
      ok = std::abs(simplex.optimal().value - oracle.optimal().value) <= 1e-8;
    }
    agree += ok;
  }
  const double seconds = Seconds(start);
  Report(3, "simplex matches the vertex-enumeration oracle",
         agree == 500 && seconds < 30.0,
         std::to_string(agree) + "/500 LPs, runtime " + Fmt(seconds) +
             " s (< 30 s)");
}

TEST(AcceptanceTest, NetworksRespectRelabelling) {
  Rng rng(404);
  int ok_count = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int d = trial % 2 == 0 ? 4 : 32;
    const LpGraph g = Encode(SmallRandomLp(StreamSeed(4, trial), 8, 0.2));
    const PermPair p{rng.Permutation(g.num_constraints()),
                     rng.Permutation(g.num_variables())};
    const LpGraph gp = ApplyPermutation(g, p);

    const GnnParams scalar =
        RandomParams(GnnConfig{2, d, OutputMode::kScalar}, trial);
    const double y = ForwardScalar(scalar, g);
    bool ok = std::abs(y - ForwardScalar(scalar, gp)) <=
              1e-6 * std::max(1.0, std::abs(y));

    const GnnParams vertex =
        RandomParams(GnnConfig{2, d, OutputMode::kVertex}, trial + 500);
    const std::vector<double> v = ForwardVertex(vertex, g);
    const std::vector<double> expected = PermuteVariables(v, p.sigma_w);
    const std::vector<double> actual = ForwardVertex(vertex, gp);
    const double scale = std::max(1.0, MaxAbs(v));
    for (size_t j = 0; j < v.size(); ++j) {
      ok = ok && std::abs(actual[j] - expected[j]) <= 1e-6 * scale;
    }
    ok_count += ok;
  }
  Report(4, "scalar invariance and vertex equivariance (d in {4, 32})",
         ok_count == 100, std::to_string(ok_count) + "/100 triples");
}

TEST(AcceptanceTest, NetworksCannotSeparateTwins) {
  int ok_count = 0;
  int total = 0;
  for (TwinVariant variant : {TwinVariant::kInfeasible, TwinVariant::kUnbounded,
                              TwinVariant::kBounded}) {
    const auto [first, second] = GenTwinPair({4, variant});
    const LpGraph g1 = Encode(first);
    const LpGraph g2 = Encode(second);
    for (int draw = 0; draw < 100; ++draw) {
      const int d = 2 + draw % 31;
      const GnnParams scalar =
          RandomParams(GnnConfig{2, d, OutputMode::kScalar}, 7000 + draw);
      const double y1 = ForwardScalar(scalar, g1);
      bool ok = std::abs(y1 - ForwardScalar(scalar, g2)) <=
                1e-6 * std::max(1.0, std::abs(y1));
      const GnnParams vertex =
          RandomParams(GnnConfig{2, d, OutputMode::kVertex}, 8000 + draw);
      std::vector<double> v1 = ForwardVertex(vertex, g1);
      std::vector<double> v2 = ForwardVertex(vertex, g2);
      std::sort(v1.begin(), v1.end());
      std::sort(v2.begin(), v2.end());
      const double scale = std::max(1.0, MaxAbs(v1));
      for (size_t j = 0; j < v1.size(); ++j) {
        ok = ok && std::abs(v1[j] - v2[j]) <= 1e-6 * scale;
      }
      ok_count += ok;
      ++total;
    }
  }
  Report(5, "random networks give twin pairs equal outputs", ok_count == total,
         std::to_string(ok_count) + "/" + std::to_string(total) +
             " (100 draws x 3 pairs)");
}

// Relative error |a - f| / max(|a|, |f|, 1e-6), best over the difference
// steps and worst over all parameters.
double MaxGradientError(const GnnParams& params, std::span<const Sample> batch,
                        Task task) {
  const Eigen::VectorXd analytic =
      LossAndGrad(params, batch, task).gradient.values;
  // Two steps: round-off in f(p + h) - f(p - h) grows like
  // eps_machine * |f| / h, while a large h may straddle a ReLU kink. A wrong
  // gradient disagrees at both.
  const double steps[] = {1e-4, 1e-5};
  double worst = 0.0;
  GnnParams probe = params;
  for (int k = 0; k < params.size(); ++k) {
    double best = std::numeric_limits<double>::infinity();
    for (double h : steps) {
      probe.values(k) = params.values(k) + h;
      const double up = LossAndGrad(probe, batch, task).loss;
      probe.values(k) = params.values(k) - h;
      const double down = LossAndGrad(probe, batch, task).loss;
      probe.values(k) = params.values(k);
      const double numeric = (up - down) / (2 * h);
      const double scale =
          std::max({std::abs(analytic(k)), std::abs(numeric), 1e-6});
      best = std::min(best, std::abs(analytic(k) - numeric) / scale);
    }
    worst = std::max(worst, best);
  }
  return worst;
}

TEST(AcceptanceTest, GradientsMatchCentralDifferences) {
  double worst = 0.0;
  for (Task task : {Task::kFeas, Task::kObj, Task::kSolu}) {
    for (int net = 0; net < 10; ++net) {
      const GnnConfig config{2, 1 + net % 8, OutputModeFor(task)};
      const GnnParams params = RandomParams(config, 6000 + 10 * net);
      std::vector<LpGraph> graphs;
      for (int s = 0; s < 2; ++s) {
        graphs.push_back(Encode(SmallRandomLp(StreamSeed(6, 2 * net + s), 5)));
      }
      Rng rng(net);
      std::vector<Sample> batch;
      for (const LpGraph& g : graphs) {
        Sample sample{&g, {}};
        if (task == Task::kFeas) {
          sample.target = {static_cast<double>(rng.UniformInt(2))};
        } else if (task == Task::kObj) {
          sample.target = {rng.Normal()};
        } else {
          for (int j = 0; j < g.num_variables(); ++j) {
            sample.target.push_back(rng.Normal());
          }
        }
        batch.push_back(std::move(sample));
      }
      worst = std::max(worst, MaxGradientError(params, batch, task));
    }
  }
  Report(6, "reverse-mode gradients vs central differences", worst <= 1e-4,
         "10 nets per task, d <= 8, L = 2, worst relative error " + Fmt(worst) +
             " (<= 1e-4)");
}

// Records k = 0, 1, ... of the default generator under `seed`; keeps the
// first `count` usable for `task`.
TrainingSet DefaultRecipeSet(uint64_t seed, int count, Task task) {
  std::vector<LpInstance> lps;
  TrainingSet set;
  int next = 0;
  while (set.size() < count) {
    lps.clear();
    for (int k = 0; k < 4 * count; ++k, ++next) {
      GenConfig config;
      config.seed = StreamSeed(seed, next);
      lps.push_back(GenRandomLp(config));
    }
    TrainingSet chunk = MakeTrainingSet(LabelDataset(lps), task);
    for (int k = 0; k < chunk.size() && set.size() < count; ++k) {
      set.graphs.push_back(chunk.graphs[k]);
      set.targets.push_back(chunk.targets[k]);
    }
  }
  set.task = task;
  return set;
}

struct FitResult {
  double metric = 0.0;
  double cpu_seconds = 0.0;
};

FitResult Fit(const TrainingSet& data, int d, int epochs, int batch_size) {
  TrainConfig config;
  config.gnn = GnnConfig{2, d, OutputModeFor(data.task)};
  config.epochs = epochs;
  config.seed = 17;
  config.batch_size = batch_size;
  const std::clock_t start = std::clock();
  const TrainResult result = Train(config, data);
  return {result.final.metric,
          static_cast<double>(std::clock() - start) / CLOCKS_PER_SEC};
}

TEST(AcceptanceTest, DeskScaleTraining) {
  struct Plan {
    Task task;
    int epochs;
    int batch_size;  // 0 = full batch
    double target;
  };
  const Plan plans[] = {{Task::kFeas, 300, 0, 0.0},
                        {Task::kObj, 600, 0, 0.05},
                        {Task::kSolu, 1000, 10, 0.25}};
  bool pass = true;
  std::ostringstream detail;
  for (const Plan& plan : plans) {
    const TrainingSet data = DefaultRecipeSet(70, 100, plan.task);
    const FitResult big = Fit(data, 64, plan.epochs, plan.batch_size);
    const FitResult mid = Fit(data, 8, plan.epochs, plan.batch_size);
    const FitResult small = Fit(data, 2, plan.epochs, plan.batch_size);
    const bool fits = big.metric <= plan.target;
    const bool in_budget = big.cpu_seconds <= 600.0;
    const bool trend = big.metric <= mid.metric && mid.metric <= small.metric;
    pass = pass && fits && in_budget && trend;
    detail << TaskName(plan.task) << " " << (fits ? "" : "MISSED ")
           << big.metric << " (<= " << plan.target << ", " << big.cpu_seconds
           << " s CPU" << (in_budget ? "" : " OVER BUDGET") << ", "
           << plan.epochs << " epochs, batch "
           << (plan.batch_size == 0 ? std::string("full")
                                    : std::to_string(plan.batch_size))
           << "), d=2/8/64 " << small.metric << " / " << mid.metric << " / "
           << big.metric << (trend ? "" : " NOT MONOTONE") << "; ";
  }
  Report(7, "desk-scale fits at d=64 and metric non-increasing in d", pass,
         detail.str() + "budget 600 s CPU per task");
}

TEST(AcceptanceTest, MoreFeasibilityDataGeneralizesBetter) {
  const TrainingSet test = DefaultRecipeSet(91, 1000, Task::kFeas);
  const TrainingSet large = DefaultRecipeSet(92, 500, Task::kFeas);
  TrainingSet small = large;
  small.graphs.erase(small.graphs.begin() + 100, small.graphs.end());
  small.targets.erase(small.targets.begin() + 100, small.targets.end());
  auto test_error = [&test](const TrainingSet& data) {
    TrainConfig config;
    config.gnn = GnnConfig{2, 64, OutputMode::kScalar};
    config.epochs = 100;
    config.seed = 17;
    config.batch_size = 50;
    return Evaluate(Train(config, data).params, test).metric;
  };
  const double error_small = test_error(small);
  const double error_large = test_error(large);
  Report(8, "feasibility test error with 500 vs 100 training samples",
         error_large <= error_small,
         "test error " + Fmt(error_large) + " (500) vs " + Fmt(error_small) +
             " (100) on 1000 fresh instances");
}

TEST(AcceptanceTest, WlTerminatesStableAndPermutationBlind) {
  Rng rng(909);
  int ok_count = 0;
  for (int s = 0; s < 200; ++s) {
    // Half plain random graphs, half lifts, which carry many symmetries.
    const LpInstance lp =
        s % 2 == 0
            ? SmallRandomLp(StreamSeed(9, s), 12, 0.2)
            : Lift(SmallRandomLp(StreamSeed(9, s), 4), 3,
                   s % 4 == 1 ? LiftPattern::kCycle : LiftPattern::kDisjoint);
    const LpGraph g = Encode(lp);
    const WlResult wl = RunWl(g);
    const PermPair p{rng.Permutation(g.num_constraints()),
                     rng.Permutation(g.num_variables())};
    const bool ok =
        wl.refining_steps() <= g.num_constraints() + g.num_variables() &&
        IsStablePartition(g, wl.stable) &&
        !Distinguishable(g, ApplyPermutation(g, p));
    ok_count += ok;
  }
  Report(9, "WL terminates within m+n steps, is stable, ignores relabelling",
         ok_count == 200, std::to_string(ok_count) + "/200 graphs");
}

}  // namespace
}  // namespace lpgraph

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  std::ofstream("acceptance_results.txt", std::ios::trunc);
  return RUN_ALL_TESTS();
}
