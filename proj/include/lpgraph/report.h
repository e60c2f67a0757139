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

#ifndef LPGRAPH_REPORT_H_
#define LPGRAPH_REPORT_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lpgraph {

// One row of a metrics CSV. Absent metrics are empty cells.
struct MetricsRow {
  std::string task;
  int d = 0;
  int num_params = 0;
  int num_samples = 0;
  int epoch = 0;
  std::optional<double> train_metric;
  std::optional<double> test_metric;
  double wall_seconds = 0.0;

  bool operator==(const MetricsRow&) const = default;
};

inline constexpr std::string_view kMetricsColumns =
    "task,d,num_params,num_samples,epoch,train_metric,test_metric,"
    "wall_seconds";

// "# lpgraph-format v1", the column line, then rows.
std::string SerializeMetrics(std::span<const MetricsRow> rows);
std::vector<MetricsRow> ParseMetrics(std::string_view text);
std::vector<MetricsRow> ReadMetrics(const std::filesystem::path& path);
// Appends to an existing metrics file or creates one; atomic.
void AppendMetrics(const std::filesystem::path& path,
                   std::span<const MetricsRow> rows);

// Line chart of metric against parameter count (log-scaled x axis) for the
// rows of one task. Train and test metrics become separate series; when
// several rows share a parameter count the last one wins.
std::string RenderMetricsSvg(std::string_view task,
                             std::span<const MetricsRow> rows);

// Tasks in order of first appearance.
std::vector<std::string> TasksIn(std::span<const MetricsRow> rows);

}  // namespace lpgraph

#endif  // LPGRAPH_REPORT_H_
