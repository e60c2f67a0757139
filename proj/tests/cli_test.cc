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
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "lpgraph/io.h"
#include "lpgraph/report.h"

namespace lpgraph {
namespace {

namespace fs = std::filesystem;
using ::testing::HasSubstr;

struct CommandResult {
  int code;
  std::string out;
  std::string err;
};

CommandResult RunCommand(std::vector<std::string> args) {
  args.insert(args.begin(), "lpgraph");
  std::ostringstream out, err;
  const int code = cli::Run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ =
        fs::temp_directory_path() /
        ("lpgraph_cli_test_" +
         std::string(
             ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }

  fs::path dir_;
};

TEST_F(CliTest, GenIsDeterministic) {
  ASSERT_EQ(RunCommand({"gen", "--count", "30", "--seed", "1", "--out",
                        Path("a.jsonl")})
                .code,
            0);
  ASSERT_EQ(RunCommand({"gen", "--count", "30", "--seed", "1", "--out",
                        Path("b.jsonl")})
                .code,
            0);
  EXPECT_EQ(ReadFile(Path("a.jsonl")), ReadFile(Path("b.jsonl")));
  ASSERT_EQ(RunCommand({"gen", "--count", "30", "--seed", "2", "--out",
                        Path("c.jsonl")})
                .code,
            0);
  EXPECT_NE(ReadFile(Path("a.jsonl")), ReadFile(Path("c.jsonl")));
  const Dataset dataset = ReadDataset(Path("a.jsonl"));
  EXPECT_EQ(dataset.records.size(), 30u);
  EXPECT_EQ(dataset.records[0].lp.num_variables(), 50);
  EXPECT_EQ(dataset.header.generator->seed, 1u);
}

TEST_F(CliTest, GenZeroCountWritesHeaderOnly) {
  ASSERT_EQ(RunCommand({"gen", "--count", "0", "--out", Path("e.jsonl")}).code,
            0);
  const std::string text = ReadFile(Path("e.jsonl"));
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
  EXPECT_TRUE(ReadDataset(Path("e.jsonl")).records.empty());
}

TEST_F(CliTest, GenOptimalOnlyWithConfig) {
  WriteFileAtomic(Path("cfg.json"), "{\"m\": 4, \"n\": 6, \"nnz\": 10}");
  const CommandResult r =
      RunCommand({"gen", "--count", "20", "--config", Path("cfg.json"),
                  "--optimal-only", "--min-norm", "--out", Path("o.jsonl")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Dataset dataset = ReadDataset(Path("o.jsonl"));
  ASSERT_EQ(dataset.records.size(), 20u);
  for (const LabeledRecord& record : dataset.records) {
    EXPECT_TRUE(record.bounded);
    EXPECT_TRUE(record.min_norm_solution.has_value());
    EXPECT_EQ(record.lp.num_constraints(), 4);
  }
  EXPECT_GT(dataset.header.discarded, 0);
  EXPECT_TRUE(dataset.header.optimal_only);
}

TEST_F(CliTest, GenErrors) {
  EXPECT_EQ(RunCommand({"gen", "--out", Path("x.jsonl")}).code,
            cli::kExitUsage);
  EXPECT_EQ(RunCommand({"gen", "--count", "3", "--config", Path("none.json"),
                        "--out", Path("x.jsonl")})
                .code,
            cli::kExitFailure);
  const CommandResult r =
      RunCommand({"gen", "--count", "3", "--out", Path("missing_dir/x.jsonl")});
  EXPECT_EQ(r.code, cli::kExitFailure);
  EXPECT_THAT(r.err, HasSubstr("error:"));
}

TEST_F(CliTest, TwinBoundedReport) {
  const CommandResult r = RunCommand(
      {"twin", "--k", "4", "--variant", "bounded", "--report", Path("r.json")});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_THAT(r.out, HasSubstr("wl: indistinguishable"));
  EXPECT_THAT(r.out, HasSubstr("solu_match: true"));
  const std::string report = ReadFile(Path("r.json"));
  EXPECT_EQ(report.substr(0, report.find('\n')), kFormatLine);
  EXPECT_THAT(report, HasSubstr("\"all_match\": true"));
}

TEST_F(CliTest, TwinInfeasibleAndUnbounded) {
  const CommandResult inf =
      RunCommand({"twin", "--k", "4", "--variant", "infeasible"});
  ASSERT_EQ(inf.code, 0);
  EXPECT_THAT(inf.out, HasSubstr("objective: \"+inf\" / \"+inf\""));
  const CommandResult unb =
      RunCommand({"twin", "--k", "6", "--variant", "unbounded"});
  ASSERT_EQ(unb.code, 0);
  EXPECT_THAT(unb.out, HasSubstr("objective: \"-inf\" / \"-inf\""));
  EXPECT_EQ(RunCommand({"twin", "--k", "5"}).code, cli::kExitFailure);
  EXPECT_EQ(RunCommand({"twin", "--family", "star"}).code, cli::kExitFailure);
}

TEST_F(CliTest, TwinLiftFamily) {
  for (const char* pattern : {"cycle", "disjoint"}) {
    const CommandResult r = RunCommand({"twin", "--family", "lift", "--r", "3",
                                        "--pattern", pattern, "--seed", "4"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_THAT(r.out, HasSubstr("indistinguishable"));
  }
}

TEST_F(CliTest, WlOnTwinPairAndSelfPair) {
  ASSERT_EQ(
      RunCommand({"twin", "--variant", "bounded", "--out", Path("pair.jsonl")})
          .code,
      0);
  const CommandResult pair =
      RunCommand({"wl", "--in", Path("pair.jsonl"), "--pair"});
  ASSERT_EQ(pair.code, 0) << pair.err;
  EXPECT_THAT(pair.out, HasSubstr("pair 0,1: indistinguishable"));

  // The example LP has four singleton classes.
  Dataset dataset = ReadDataset(Path("pair.jsonl"));
  dataset.records.erase(dataset.records.begin() + 1, dataset.records.end());
  dataset.records[0].lp =
      LpInstance(2, 2, {{0, 0, 1}, {0, 1, 2}, {1, 0, 2}, {1, 1, 1}}, {1, 2},
                 {Comparison::kGreaterEqual, Comparison::kEqual}, {1, 2},
                 {0.0, -1.0}, {std::nullopt, std::nullopt});
  dataset.records[0].solution = std::vector<double>{1.0, 0.0};
  dataset.records[0].min_norm_solution.reset();
  dataset.records[0].objective = 1.0;
  dataset.records.push_back(dataset.records[0]);
  dataset.header.count = 2;
  WriteDataset(Path("example.jsonl"), dataset);
  const CommandResult self = RunCommand(
      {"wl", "--in", Path("example.jsonl"), "--pair", "--dump-partitions"});
  ASSERT_EQ(self.code, 0) << self.err;
  EXPECT_THAT(self.out, HasSubstr("constraint_classes=2 variable_classes=2"));
  EXPECT_THAT(self.out, HasSubstr("I: {0} {1}"));
  EXPECT_THAT(self.out, HasSubstr("J: {0} {1}"));
  EXPECT_THAT(self.out, HasSubstr("pair 0,1: indistinguishable"));

  EXPECT_EQ(RunCommand(
                {"wl", "--in", Path("example.jsonl"), "--index", "1", "--pair"})
                .code,
            cli::kExitFailure);
  EXPECT_EQ(RunCommand({"wl", "--in", Path("nothing.jsonl")}).code,
            cli::kExitFailure);
}

TEST_F(CliTest, TrainEvalReportRoundTrip) {
  ASSERT_EQ(RunCommand({"gen", "--count", "12", "--seed", "3", "--out",
                        Path("train.jsonl")})
                .code,
            0);
  const std::vector<std::string> train_args{"train",
                                            "--task",
                                            "obj",
                                            "--data",
                                            Path("train.jsonl"),
                                            "--d",
                                            "4",
                                            "--epochs",
                                            "20",
                                            "--seed",
                                            "5",
                                            "--checkpoint",
                                            Path("m.ckpt"),
                                            "--metrics",
                                            Path("metrics.csv")};
  const CommandResult train = RunCommand(train_args);
  ASSERT_EQ(train.code, 0) << train.err;
  const CommandResult again = RunCommand(train_args);
  ASSERT_EQ(again.code, 0);
  EXPECT_EQ(train.out, again.out);

  std::vector<MetricsRow> rows = ReadMetrics(Path("metrics.csv"));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], rows[1]);
  EXPECT_EQ(rows[0].task, "obj");
  EXPECT_EQ(rows[0].epoch, 20);
  EXPECT_EQ(rows[0].wall_seconds, 0.0);

  const CommandResult eval = RunCommand(
      {"eval", "--checkpoint", Path("m.ckpt"), "--data", Path("train.jsonl"),
       "--metrics", Path("metrics.csv"), "--split", "train"});
  ASSERT_EQ(eval.code, 0) << eval.err;
  rows = ReadMetrics(Path("metrics.csv"));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[2].train_metric, rows[0].train_metric);
  EXPECT_EQ(rows[2].num_params, rows[0].num_params);

  const CommandResult report = RunCommand(
      {"report", "--metrics", Path("metrics.csv"), "--svg-out", Path("svg")});
  ASSERT_EQ(report.code, 0) << report.err;
  EXPECT_TRUE(fs::exists(dir_ / "svg" / "obj.svg"));
}

TEST_F(CliTest, TrainAndEvalErrors) {
  ASSERT_EQ(
      RunCommand({"gen", "--count", "0", "--out", Path("empty.jsonl")}).code,
      0);
  EXPECT_EQ(RunCommand({"train", "--task", "feas", "--data",
                        Path("empty.jsonl"), "--epochs", "1"})
                .code,
            cli::kExitFailure);
  EXPECT_EQ(
      RunCommand({"train", "--task", "nope", "--data", Path("empty.jsonl")})
          .code,
      cli::kExitFailure);
  ASSERT_EQ(RunCommand({"gen", "--count", "4", "--out", Path("d.jsonl")}).code,
            0);
  ASSERT_EQ(
      RunCommand({"train", "--task", "feas", "--data", Path("d.jsonl"), "--d",
                  "2", "--epochs", "1", "--checkpoint", Path("f.ckpt")})
          .code,
      0);
  const CommandResult empty_eval = RunCommand(
      {"eval", "--checkpoint", Path("f.ckpt"), "--data", Path("empty.jsonl")});
  EXPECT_EQ(empty_eval.code, cli::kExitFailure);
  EXPECT_THAT(empty_eval.err, HasSubstr("no usable records"));
  EXPECT_EQ(RunCommand({"report", "--metrics", Path("none.csv"), "--svg-out",
                        Path("svg")})
                .code,
            cli::kExitFailure);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(RunCommand({}).code, cli::kExitUsage);
  EXPECT_EQ(RunCommand({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(RunCommand({"--help"}).code, cli::kExitOk);
}

}  // namespace
}  // namespace lpgraph
