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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpgraph/errors.h"
#include "lpgraph/fold_verify.h"
#include "lpgraph/gnn.h"
#include "lpgraph/instance_forge.h"
#include "lpgraph/io.h"
#include "lpgraph/lp_graph.h"
#include "lpgraph/lp_solver.h"
#include "lpgraph/report.h"
#include "lpgraph/rng.h"
#include "lpgraph/trainer.h"
#include "lpgraph/wl_refine.h"

namespace lpgraph::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Thrown by a command that finished but must report a theorem violation.
struct TheoremViolation {};

struct GenFlags {
  int count = 0;
  std::string config_path;
  std::string out_path;
  uint64_t seed = 0;
  bool min_norm = false;
  bool optimal_only = false;
};

struct TwinFlags {
  std::string family = "cycle-split";
  int k = 4;
  std::string variant = "bounded";
  int r = 2;
  std::string pattern = "disjoint";
  std::string config_path;
  uint64_t seed = 0;
  double tol = 1e-6;
  std::string report_path;
  std::string out_path;
};

struct WlFlags {
  std::string in_path;
  std::optional<int> index;
  bool pair = false;
  bool dump_partitions = false;
};

struct TrainFlags {
  std::string task;
  std::string data_path;
  int d = 64;
  int layers = 2;
  int epochs = 1000;
  uint64_t seed = 0;
  double lr = 3e-4;
  int batch_size = 0;
  std::optional<double> stop_metric;
  std::string solu_label = "simplex";
  std::string checkpoint_path;
  std::string metrics_path;
  int log_every = 0;
  bool stamp = false;
};

struct EvalFlags {
  std::string checkpoint_path;
  std::string data_path;
  std::string metrics_path;
  std::string solu_label = "simplex";
  std::string split = "test";
};

struct ReportFlags {
  std::string metrics_path;
  std::string svg_out;
};

SoluLabel ParseSoluLabel(const std::string& name) {
  if (name == "simplex") return SoluLabel::kSimplex;
  if (name == "min-norm") return SoluLabel::kMinNorm;
  throw InvalidArgument("unknown solution label '" + name + "'");
}

GenConfig LoadGenConfig(const std::string& path) {
  return path.empty() ? GenConfig{} : GenConfigFromJson(ReadFile(path));
}

std::string Join(const std::vector<int>& values) {
  std::string out = "{";
  for (size_t k = 0; k < values.size(); ++k) {
    out += (k ? "," : "") + std::to_string(values[k]);
  }
  return out + "}";
}

std::string FormatClasses(const std::vector<std::vector<int>>& classes) {
  std::string out;
  for (size_t k = 0; k < classes.size(); ++k) {
    out += (k ? " " : "") + Join(classes[k]);
  }
  return out;
}

json ExtendedValueJson(double value) {
  if (std::isinf(value)) return value > 0 ? "+inf" : "-inf";
  return value;
}

int RunGen(const GenFlags& flags, std::ostream& out) {
  GenConfig base = LoadGenConfig(flags.config_path);
  base.seed = flags.seed;
  base.Validate();
  Dataset dataset;
  dataset.header.generator = base;
  dataset.header.optimal_only = flags.optimal_only;
  const LabelOptions options{flags.min_norm};
  // Instance k is drawn from StreamSeed(seed, k); drawing proceeds in
  // chunks so --optimal-only can keep going until enough optima were found.
  int drawn = 0;
  while (static_cast<int>(dataset.records.size()) < flags.count) {
    const int missing = flags.count - static_cast<int>(dataset.records.size());
    const int chunk = flags.optimal_only ? std::max(2 * missing, 16) : missing;
    std::vector<LpInstance> lps;
    for (int k = 0; k < chunk; ++k) {
      GenConfig config = base;
      config.seed = StreamSeed(flags.seed, static_cast<uint64_t>(drawn + k));
      lps.push_back(GenRandomLp(config));
    }
    std::vector<int> stalled;
    std::vector<LabeledRecord> labeled = LabelDataset(lps, options, &stalled);
    // Walk the chunk in draw order, interleaving stalled positions.
    size_t next_record = 0;
    size_t next_stalled = 0;
    for (int k = 0; k < chunk; ++k) {
      if (static_cast<int>(dataset.records.size()) == flags.count) break;
      ++drawn;
      if (next_stalled < stalled.size() && stalled[next_stalled] == k) {
        ++next_stalled;
        ++dataset.header.discarded;
        continue;
      }
      LabeledRecord& record = labeled[next_record++];
      if (flags.optimal_only && !record.bounded) {
        ++dataset.header.discarded;
        continue;
      }
      dataset.records.push_back(std::move(record));
    }
    if (flags.optimal_only && drawn > 1000 * std::max(flags.count, 1)) {
      throw Error("too few optimal instances under this configuration");
    }
  }
  dataset.header.count = static_cast<int>(dataset.records.size());
  WriteDataset(flags.out_path, dataset);
  int feasible = 0;
  for (const LabeledRecord& r : dataset.records) feasible += r.feasible;
  out << "wrote " << dataset.records.size() << " records to " << flags.out_path
      << " (feasible " << feasible << ", discarded " << dataset.header.discarded
      << ")\n";
  return kExitOk;
}

json TwinReportJson(const TwinReport& report) {
  json j{{"wl_indistinguishable", report.wl_indistinguishable},
         {"status_first", OutcomeStatusName(report.status_first)},
         {"status_second", OutcomeStatusName(report.status_second)},
         {"feas_match", report.feas_match},
         {"objective_first", ExtendedValueJson(report.objective_first)},
         {"objective_second", ExtendedValueJson(report.objective_second)},
         {"obj_match", report.obj_match},
         {"solu_match",
          report.solu_match ? json(*report.solu_match) : json(nullptr)},
         {"min_norm_first", report.min_norm_first},
         {"min_norm_second", report.min_norm_second},
         {"matching_permutation", report.matching_permutation},
         {"exhaustive_search", report.exhaustive_search},
         {"theorem_holds", report.TheoremHolds()},
         {"all_match", report.AllMatch()},
         {"details", report.details}};
  return j;
}

int RunTwin(const TwinFlags& flags, std::ostream& out) {
  std::pair<LpInstance, LpInstance> pair = [&flags] {
    if (flags.family == "cycle-split") {
      return GenTwinPair({flags.k, ParseTwinVariant(flags.variant)});
    }
    if (flags.family == "lift") {
      GenConfig config;
      if (!flags.config_path.empty()) config = LoadGenConfig(flags.config_path);
      config.seed = flags.seed;
      return LiftReplicate(GenRandomLp(config), flags.r,
                           ParseLiftPattern(flags.pattern),
                           StreamSeed(flags.seed, 1));
    }
    throw InvalidArgument("unknown family '" + flags.family +
                          "' (expected cycle-split or lift)");
  }();
  const TwinReport report =
      CheckTwinProperties(pair.first, pair.second, flags.tol);
  json j = TwinReportJson(report);
  j["family"] = flags.family;
  if (flags.family == "cycle-split") {
    j["k"] = flags.k;
    j["variant"] = flags.variant;
  } else {
    j["r"] = flags.r;
    j["pattern"] = flags.pattern;
    j["seed"] = flags.seed;
  }
  if (!flags.report_path.empty()) {
    WriteFileAtomic(flags.report_path,
                    std::string(kFormatLine) + "\n" + j.dump(2) + "\n");
  }
  if (!flags.out_path.empty()) {
    const std::vector<LpInstance> lps{pair.first, pair.second};
    Dataset dataset;
    dataset.records = LabelDataset(lps, LabelOptions{true});
    dataset.header.count = static_cast<int>(dataset.records.size());
    dataset.header.discarded = 2 - dataset.header.count;
    WriteDataset(flags.out_path, dataset);
  }
  out << "wl: "
      << (report.wl_indistinguishable ? "indistinguishable" : "distinguishable")
      << "\nstatus: " << OutcomeStatusName(report.status_first) << " / "
      << OutcomeStatusName(report.status_second)
      << "\nfeas_match: " << (report.feas_match ? "true" : "false")
      << "\nobjective: " << ExtendedValueJson(report.objective_first).dump()
      << " / " << ExtendedValueJson(report.objective_second).dump()
      << "\nobj_match: " << (report.obj_match ? "true" : "false")
      << "\nsolu_match: "
      << (report.solu_match ? (*report.solu_match ? "true" : "false") : "n/a")
      << "\n";
  if (!report.min_norm_first.empty()) {
    out << "min_norm_first: " << json(report.min_norm_first).dump() << "\n"
        << "min_norm_second: " << json(report.min_norm_second).dump() << "\n";
  }
  for (const std::string& line : report.details)
    out << "note: " << line << "\n";
  if (!report.TheoremHolds()) {
    out << "THEOREM VIOLATION: indistinguishable pair with differing "
           "properties\n";
    throw TheoremViolation{};
  }
  return kExitOk;
}

int RunWlCommand(const WlFlags& flags, std::ostream& out) {
  const Dataset dataset = ReadDataset(flags.in_path);
  const int count = static_cast<int>(dataset.records.size());
  if (count == 0)
    throw InvalidArgument("'" + flags.in_path + "' has no records");
  int first = 0;
  int last = count;
  if (flags.index) {
    if (*flags.index < 0 || *flags.index >= count) {
      throw InvalidArgument("--index out of range");
    }
    first = *flags.index;
    last = first + 1;
  }
  for (int k = first; k < last; ++k) {
    const LpGraph graph = Encode(dataset.records[k].lp);
    const WlResult wl = RunWl(graph);
    out << "record " << k << ": m=" << graph.num_constraints()
        << " n=" << graph.num_variables()
        << " refining_steps=" << wl.refining_steps()
        << " constraint_classes=" << wl.stable.i_classes.size()
        << " variable_classes=" << wl.stable.j_classes.size() << "\n";
    if (flags.dump_partitions) {
      out << "  I: " << FormatClasses(wl.stable.i_classes) << "\n"
          << "  J: " << FormatClasses(wl.stable.j_classes) << "\n";
    }
  }
  if (flags.pair) {
    const int a = first;
    const int b = first + 1;
    if (b >= count) throw InvalidArgument("--pair needs two records");
    const LpGraph ga = Encode(dataset.records[a].lp);
    const LpGraph gb = Encode(dataset.records[b].lp);
    out << "pair " << a << "," << b << ": ";
    if (ga.num_constraints() != gb.num_constraints() ||
        ga.num_variables() != gb.num_variables()) {
      out << "distinguishable (different sizes)\n";
    } else {
      out << (Distinguishable(ga, gb) ? "distinguishable" : "indistinguishable")
          << "\n";
    }
  }
  return kExitOk;
}

int RunTrain(const TrainFlags& flags, std::ostream& out) {
  const Task task = ParseTask(flags.task);
  const Dataset dataset = ReadDataset(flags.data_path);
  const TrainingSet data =
      MakeTrainingSet(dataset.records, task, ParseSoluLabel(flags.solu_label));
  if (data.size() == 0) {
    throw InvalidArgument("no usable records for task " + flags.task);
  }
  TrainConfig config;
  config.gnn = GnnConfig{flags.layers, flags.d, OutputModeFor(task)};
  config.epochs = flags.epochs;
  config.seed = flags.seed;
  config.batch_size = flags.batch_size;
  config.adam.learning_rate = flags.lr;
  config.stop_metric = flags.stop_metric;
  const auto start = std::chrono::steady_clock::now();
  const TrainResult result =
      Train(config, data, [&](const EpochRecord& record) {
        if (flags.log_every > 0 && record.epoch % flags.log_every == 0) {
          out << "epoch " << record.epoch << " loss " << record.loss
              << " metric " << record.metric << "\n";
        }
      });
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const int epochs = static_cast<int>(result.history.size());
  if (!flags.checkpoint_path.empty()) {
    WriteCheckpoint(flags.checkpoint_path,
                    Checkpoint{result.params, task, flags.seed, epochs});
  }
  if (!flags.metrics_path.empty()) {
    const MetricsRow row{std::string(TaskName(task)),
                         flags.d,
                         result.params.size(),
                         data.size(),
                         epochs,
                         result.final.metric,
                         std::nullopt,
                         flags.stamp ? seconds : 0.0};
    AppendMetrics(flags.metrics_path, std::span(&row, 1));
  }
  out << "task " << TaskName(task) << " d " << flags.d << " params "
      << result.params.size() << " samples " << data.size() << " epochs "
      << epochs << " loss " << result.final.loss << " train_metric "
      << result.final.metric << "\n";
  return kExitOk;
}

int RunEval(const EvalFlags& flags, std::ostream& out) {
  if (flags.split != "train" && flags.split != "test") {
    throw InvalidArgument("--split must be train or test");
  }
  const Checkpoint checkpoint = ReadCheckpoint(flags.checkpoint_path);
  const Dataset dataset = ReadDataset(flags.data_path);
  const TrainingSet data = MakeTrainingSet(dataset.records, checkpoint.task,
                                           ParseSoluLabel(flags.solu_label));
  if (data.size() == 0) {
    throw InvalidArgument("'" + flags.data_path +
                          "' has no usable records for task " +
                          std::string(TaskName(checkpoint.task)));
  }
  const Evaluation eval = Evaluate(checkpoint.params, data);
  if (!flags.metrics_path.empty()) {
    MetricsRow row{std::string(TaskName(checkpoint.task)),
                   checkpoint.params.config.embed_dim,
                   checkpoint.params.size(),
                   data.size(),
                   checkpoint.epochs,
                   std::nullopt,
                   std::nullopt,
                   0.0};
    (flags.split == "train" ? row.train_metric : row.test_metric) = eval.metric;
    AppendMetrics(flags.metrics_path, std::span(&row, 1));
  }
  out << "task " << TaskName(checkpoint.task) << " samples " << data.size()
      << " loss " << eval.loss << " metric " << eval.metric << "\n";
  return kExitOk;
}

int RunReport(const ReportFlags& flags, std::ostream& out) {
  if (!fs::exists(flags.metrics_path)) {
    throw IoError("metrics file '" + flags.metrics_path + "' not found");
  }
  const std::vector<MetricsRow> rows = ReadMetrics(flags.metrics_path);
  if (rows.empty()) throw InvalidArgument("metrics file has no rows");
  fs::create_directories(flags.svg_out);
  for (const std::string& task : TasksIn(rows)) {
    const fs::path path = fs::path(flags.svg_out) / (task + ".svg");
    WriteFileAtomic(path, RenderMetricsSvg(task, rows));
    out << "wrote " << path.string() << "\n";
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Linear programs as graphs: instances, WL tests and GNNs"};
  app.require_subcommand(1);

  GenFlags gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a labeled dataset");
  gen_cmd->add_option("--count", gen.count, "Number of records")
      ->required()
      ->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--config", gen.config_path,
                      "JSON generator config (missing keys use defaults)");
  gen_cmd->add_option("--out", gen.out_path, "Output dataset file")->required();
  gen_cmd->add_option("--seed", gen.seed, "Base seed");
  gen_cmd->add_flag("--min-norm", gen.min_norm,
                    "Also label minimum-norm optimal solutions");
  gen_cmd->add_flag("--optimal-only", gen.optimal_only,
                    "Keep only instances with an optimum");

  TwinFlags twin;
  CLI::App* twin_cmd =
      app.add_subcommand("twin", "Check a WL-indistinguishable pair");
  twin_cmd->add_option("--family", twin.family, "cycle-split or lift");
  twin_cmd->add_option("--k", twin.k, "Cycle length (cycle-split)");
  twin_cmd->add_option("--variant", twin.variant,
                       "infeasible, unbounded or bounded (cycle-split)");
  twin_cmd->add_option("--r", twin.r, "Number of copies (lift)");
  twin_cmd->add_option("--pattern", twin.pattern, "cycle or disjoint (lift)");
  twin_cmd->add_option("--config", twin.config_path,
                       "Generator config of the lifted base LP (lift)");
  twin_cmd->add_option("--seed", twin.seed, "Seed (lift)");
  twin_cmd->add_option("--tol", twin.tol, "Comparison tolerance");
  twin_cmd->add_option("--report", twin.report_path, "Write a JSON report");
  twin_cmd->add_option("--out", twin.out_path,
                       "Write the pair as a two-record dataset");

  WlFlags wl;
  CLI::App* wl_cmd = app.add_subcommand("wl", "Run WL refinement on a dataset");
  wl_cmd->add_option("--in", wl.in_path, "Dataset file")->required();
  wl_cmd->add_option("--index", wl.index, "Only this record (0-based)");
  wl_cmd->add_flag("--pair", wl.pair,
                   "Test the selected record against the next one");
  wl_cmd->add_flag("--dump-partitions", wl.dump_partitions,
                   "Print the stable classes (0-based indices)");

  TrainFlags train;
  CLI::App* train_cmd = app.add_subcommand("train", "Train a GNN");
  train_cmd->add_option("--task", train.task, "feas, obj or solu")->required();
  train_cmd->add_option("--data", train.data_path, "Dataset file")->required();
  train_cmd->add_option("--d", train.d, "Embedding width")
      ->check(CLI::PositiveNumber);
  train_cmd->add_option("--layers", train.layers, "Message-passing rounds")
      ->check(CLI::PositiveNumber);
  train_cmd->add_option("--epochs", train.epochs, "Epoch budget")
      ->check(CLI::NonNegativeNumber);
  train_cmd->add_option("--seed", train.seed, "Seed");
  train_cmd->add_option("--lr", train.lr, "Adam learning rate");
  train_cmd->add_option("--batch-size", train.batch_size, "0 = full batch")
      ->check(CLI::NonNegativeNumber);
  train_cmd->add_option("--stop-metric", train.stop_metric,
                        "Stop once the training metric reaches this value");
  train_cmd->add_option("--solu-label", train.solu_label,
                        "simplex or min-norm");
  train_cmd->add_option("--checkpoint", train.checkpoint_path,
                        "Checkpoint output");
  train_cmd->add_option("--metrics", train.metrics_path,
                        "Metrics CSV to append to");
  train_cmd->add_option("--log-every", train.log_every,
                        "Print progress every N epochs");
  train_cmd->add_flag("--stamp", train.stamp,
                      "Record wall-clock seconds in the metrics row");

  EvalFlags eval;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a checkpoint");
  eval_cmd->add_option("--checkpoint", eval.checkpoint_path, "Checkpoint")
      ->required();
  eval_cmd->add_option("--data", eval.data_path, "Dataset file")->required();
  eval_cmd->add_option("--metrics", eval.metrics_path,
                       "Metrics CSV to append to");
  eval_cmd->add_option("--solu-label", eval.solu_label, "simplex or min-norm");
  eval_cmd->add_option("--split", eval.split,
                       "Column for the metric: train or test");

  ReportFlags report;
  CLI::App* report_cmd =
      app.add_subcommand("report", "Render metric-vs-parameters charts");
  report_cmd->add_option("--metrics", report.metrics_path, "Metrics CSV")
      ->required();
  report_cmd->add_option("--svg-out", report.svg_out, "Output directory")
      ->required();

  std::vector<const char*> argv;
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return RunGen(gen, out);
    if (*twin_cmd) return RunTwin(twin, out);
    if (*wl_cmd) return RunWlCommand(wl, out);
    if (*train_cmd) return RunTrain(train, out);
    if (*eval_cmd) return RunEval(eval, out);
    if (*report_cmd) return RunReport(report, out);
  } catch (const TheoremViolation&) {
    return kExitTheoremViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace lpgraph::cli
