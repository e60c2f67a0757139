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

#ifndef LPGRAPH_IO_H_
#define LPGRAPH_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpgraph/gnn.h"
#include "lpgraph/instance_forge.h"

namespace lpgraph {

// First line of every file this library writes.
inline constexpr std::string_view kFormatLine = "lpgraph-format v1";

// Writes `content` to a temporary sibling of `path` and renames it over
// `path`. Throws IoError.
void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view content);
std::string ReadFile(const std::filesystem::path& path);

std::string GenConfigToJson(const GenConfig& config);
// Missing keys keep their defaults; unknown keys are an error.
GenConfig GenConfigFromJson(std::string_view json);

// Dataset files: the format line, one JSON header line, then one JSON line
// per record:
//   {"m":..,"n":..,"a":[[i,j,v],..],"b":[..],"circ":["<=",..],"c":[..],
//    "l":[..],"u":[..],"labels":{"feasible":..,"bounded":..,"obj":..,
//    "solution":..,"min_norm_solution":..}}
// Infinite bounds and absent labels are null; min_norm_solution is omitted
// when absent. Doubles are written as shortest round-trip decimals.
struct DatasetHeader {
  std::optional<GenConfig> generator;
  int count = 0;
  // Instances drawn but left out (stalled solves, or not optimal when
  // optimal_only is set).
  int discarded = 0;
  bool optimal_only = false;

  bool operator==(const DatasetHeader&) const = default;
};

struct Dataset {
  DatasetHeader header;
  std::vector<LabeledRecord> records;

  bool operator==(const Dataset&) const = default;
};

std::string SerializeRecord(const LabeledRecord& record);
LabeledRecord ParseRecord(std::string_view line);
std::string SerializeDataset(const Dataset& dataset);
Dataset ParseDataset(std::string_view text);
void WriteDataset(const std::filesystem::path& path, const Dataset& dataset);
Dataset ReadDataset(const std::filesystem::path& path);

// Checkpoints: the format line, one JSON header line (configuration, MLP
// shapes, task, seed, parameter count), then the parameters as raw
// little-endian float64 in layout order.
struct Checkpoint {
  GnnParams params;
  Task task = Task::kFeas;
  uint64_t seed = 0;
  int epochs = 0;
};

std::string SerializeCheckpoint(const Checkpoint& checkpoint);
Checkpoint ParseCheckpoint(std::string_view bytes);
void WriteCheckpoint(const std::filesystem::path& path,
                     const Checkpoint& checkpoint);
Checkpoint ReadCheckpoint(const std::filesystem::path& path);

}  // namespace lpgraph

#endif  // LPGRAPH_IO_H_
