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

#include "lpgraph/io.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

#include "json.hpp"
#include "lpgraph/errors.h"

namespace lpgraph {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

json BoundsToJson(const std::vector<Bound>& bounds) {
  json out = json::array();
  for (const Bound& b : bounds) out.push_back(b ? json(*b) : json(nullptr));
  return out;
}

std::vector<Bound> BoundsFromJson(const json& j) {
  std::vector<Bound> out;
  for (const json& v : j) {
    out.push_back(v.is_null() ? Bound() : Bound(v.get<double>()));
  }
  return out;
}

json OptionalVector(const std::optional<std::vector<double>>& v) {
  return v ? json(*v) : json(nullptr);
}

std::optional<std::vector<double>> OptionalVectorFromJson(const json& j,
                                                          const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::vector<double>>();
}

json GenConfigJson(const GenConfig& c) {
  return json{{"m", c.m},
              {"n", c.n},
              {"nnz", c.nnz},
              {"c_scale", c.c_scale},
              {"bound_sigma", c.bound_sigma},
              {"p_le", c.p_le},
              {"p_eq", c.p_eq},
              {"p_ge", c.p_ge},
              {"p_infinite_bound", c.p_infinite_bound},
              {"seed", c.seed}};
}

GenConfig GenConfigFrom(const json& j) {
  if (!j.is_object())
    throw InvalidArgument("generator config must be an object");
  GenConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "m") {
      c.m = value.get<int>();
    } else if (key == "n") {
      c.n = value.get<int>();
    } else if (key == "nnz") {
      c.nnz = value.get<int>();
    } else if (key == "c_scale") {
      c.c_scale = value.get<double>();
    } else if (key == "bound_sigma") {
      c.bound_sigma = value.get<double>();
    } else if (key == "p_le") {
      c.p_le = value.get<double>();
    } else if (key == "p_eq") {
      c.p_eq = value.get<double>();
    } else if (key == "p_ge") {
      c.p_ge = value.get<double>();
    } else if (key == "p_infinite_bound") {
      c.p_infinite_bound = value.get<double>();
    } else if (key == "seed") {
      c.seed = value.get<uint64_t>();
    } else {
      throw InvalidArgument("unknown generator key '" + key + "'");
    }
  }
  c.Validate();
  return c;
}

json ParseJson(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw IoError("malformed " + std::string(what) + ": " + e.what());
  }
}

// Splits off the format line and the header line; returns the remainder.
std::string_view SplitHeader(std::string_view text, std::string_view what,
                             json& header) {
  const size_t first = text.find('\n');
  if (first == std::string_view::npos || text.substr(0, first) != kFormatLine) {
    throw IoError(std::string(what) + " does not start with '" +
                  std::string(kFormatLine) + "'");
  }
  text.remove_prefix(first + 1);
  const size_t second = text.find('\n');
  if (second == std::string_view::npos) {
    throw IoError(std::string(what) + " has no header line");
  }
  header = ParseJson(text.substr(0, second), what);
  return text.substr(second + 1);
}

}  // namespace

void WriteFileAtomic(const fs::path& path, std::string_view content) {
  fs::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + temp.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) throw IoError("write to '" + temp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(temp, path, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw IoError("cannot move output into '" + path.string() + "'");
  }
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string GenConfigToJson(const GenConfig& config) {
  return GenConfigJson(config).dump();
}

GenConfig GenConfigFromJson(std::string_view text) {
  try {
    return GenConfigFrom(ParseJson(text, "generator config"));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad generator config: ") + e.what());
  }
}

std::string SerializeRecord(const LabeledRecord& record) {
  const LpInstance& lp = record.lp;
  json a = json::array();
  for (const Triplet& t : lp.coefficients()) {
    a.push_back(json::array({t.row, t.col, t.value}));
  }
  json circ = json::array();
  for (Comparison c : lp.comparisons()) circ.push_back(ComparisonSymbol(c));
  json labels{
      {"feasible", record.feasible},
      {"bounded", record.bounded},
      {"obj", record.objective ? json(*record.objective) : json(nullptr)},
      {"solution", OptionalVector(record.solution)}};
  if (record.min_norm_solution) {
    labels["min_norm_solution"] = *record.min_norm_solution;
  }
  const json j{{"m", lp.num_constraints()},
               {"n", lp.num_variables()},
               {"a", std::move(a)},
               {"b", lp.rhs()},
               {"circ", std::move(circ)},
               {"c", lp.objective()},
               {"l", BoundsToJson(lp.lower())},
               {"u", BoundsToJson(lp.upper())},
               {"labels", std::move(labels)}};
  return j.dump();
}

LabeledRecord ParseRecord(std::string_view line) {
  const json j = ParseJson(line, "dataset record");
  try {
    std::vector<Triplet> a;
    for (const json& t : j.at("a")) {
      if (t.size() != 3) throw IoError("coefficient entries need 3 fields");
      a.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<double>()});
    }
    std::vector<Comparison> circ;
    for (const json& c : j.at("circ")) {
      circ.push_back(ParseComparison(c.get<std::string>()));
    }
    LpInstance lp(j.at("m").get<int>(), j.at("n").get<int>(), std::move(a),
                  j.at("b").get<std::vector<double>>(), std::move(circ),
                  j.at("c").get<std::vector<double>>(),
                  BoundsFromJson(j.at("l")), BoundsFromJson(j.at("u")));
    const json& labels = j.at("labels");
    LabeledRecord record{std::move(lp),
                         labels.at("feasible").get<bool>(),
                         labels.at("bounded").get<bool>(),
                         {},
                         OptionalVectorFromJson(labels, "solution"),
                         OptionalVectorFromJson(labels, "min_norm_solution")};
    if (!labels.at("obj").is_null()) {
      record.objective = labels.at("obj").get<double>();
    }
    const size_t n = record.lp.num_variables();
    if (record.bounded != record.objective.has_value() ||
        (record.bounded && !record.feasible) ||
        (record.solution && record.solution->size() != n) ||
        (record.min_norm_solution && record.min_norm_solution->size() != n)) {
      throw IoError("inconsistent labels");
    }
    return record;
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed dataset record: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw IoError(std::string("invalid LP in dataset record: ") + e.what());
  }
}

std::string SerializeDataset(const Dataset& dataset) {
  json header{{"kind", "dataset"},
              {"count", dataset.records.size()},
              {"discarded", dataset.header.discarded},
              {"optimal_only", dataset.header.optimal_only}};
  header["generator"] = dataset.header.generator
                            ? GenConfigJson(*dataset.header.generator)
                            : json(nullptr);
  std::string out(kFormatLine);
  out += '\n';
  out += header.dump();
  out += '\n';
  for (const LabeledRecord& record : dataset.records) {
    out += SerializeRecord(record);
    out += '\n';
  }
  return out;
}

Dataset ParseDataset(std::string_view text) {
  json header;
  std::string_view body = SplitHeader(text, "dataset", header);
  Dataset dataset;
  try {
    if (header.at("kind") != "dataset") throw IoError("not a dataset file");
    dataset.header.discarded = header.at("discarded").get<int>();
    dataset.header.optimal_only = header.at("optimal_only").get<bool>();
    if (!header.at("generator").is_null()) {
      dataset.header.generator = GenConfigFrom(header.at("generator"));
    }
    dataset.header.count = header.at("count").get<int>();
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed dataset header: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw IoError(std::string("malformed dataset header: ") + e.what());
  }
  while (!body.empty()) {
    const size_t end = body.find('\n');
    const std::string_view line = body.substr(0, end);
    if (!line.empty()) dataset.records.push_back(ParseRecord(line));
    if (end == std::string_view::npos) break;
    body.remove_prefix(end + 1);
  }
  if (static_cast<int>(dataset.records.size()) != dataset.header.count) {
    throw IoError("dataset header announces " +
                  std::to_string(dataset.header.count) + " records, found " +
                  std::to_string(dataset.records.size()));
  }
  return dataset;
}

void WriteDataset(const fs::path& path, const Dataset& dataset) {
  WriteFileAtomic(path, SerializeDataset(dataset));
}

Dataset ReadDataset(const fs::path& path) {
  return ParseDataset(ReadFile(path));
}

std::string SerializeCheckpoint(const Checkpoint& checkpoint) {
  const GnnParams& params = checkpoint.params;
  const ParamLayout layout = params.Layout();
  json shapes = json::array();
  for (const MlpShape& mlp : layout.mlps()) {
    json layers = json::array();
    for (const DenseShape& layer : mlp.layers) {
      layers.push_back(json::array({layer.in, layer.out}));
    }
    shapes.push_back(json{{"name", mlp.name}, {"layers", std::move(layers)}});
  }
  const json header{
      {"kind", "checkpoint"},
      {"layers", params.config.layers},
      {"embed_dim", params.config.embed_dim},
      {"output_mode",
       params.config.output_mode == OutputMode::kScalar ? "scalar" : "vertex"},
      {"task", TaskName(checkpoint.task)},
      {"seed", checkpoint.seed},
      {"epochs", checkpoint.epochs},
      {"num_params", params.size()},
      {"dtype", "float64-le"},
      {"shapes", std::move(shapes)}};
  std::string out(kFormatLine);
  out += '\n';
  out += header.dump();
  out += '\n';
  const size_t offset = out.size();
  out.resize(offset + 8 * static_cast<size_t>(params.size()));
  for (int k = 0; k < params.size(); ++k) {
    uint64_t bits = std::bit_cast<uint64_t>(params.values(k));
    for (int byte = 0; byte < 8; ++byte) {
      out[offset + 8 * k + byte] =
          static_cast<char>((bits >> (8 * byte)) & 0xff);
    }
  }
  return out;
}

Checkpoint ParseCheckpoint(std::string_view bytes) {
  json header;
  const std::string_view body = SplitHeader(bytes, "checkpoint", header);
  Checkpoint checkpoint;
  GnnConfig config;
  int count = 0;
  try {
    if (header.at("kind") != "checkpoint") throw IoError("not a checkpoint");
    if (header.at("dtype") != "float64-le") {
      throw IoError("unsupported checkpoint dtype");
    }
    config.layers = header.at("layers").get<int>();
    config.embed_dim = header.at("embed_dim").get<int>();
    const std::string mode = header.at("output_mode").get<std::string>();
    if (mode != "scalar" && mode != "vertex") {
      throw IoError("unknown output mode '" + mode + "'");
    }
    config.output_mode =
        mode == "scalar" ? OutputMode::kScalar : OutputMode::kVertex;
    config.Validate();
    checkpoint.task = ParseTask(header.at("task").get<std::string>());
    checkpoint.seed = header.at("seed").get<uint64_t>();
    checkpoint.epochs = header.at("epochs").get<int>();
    count = header.at("num_params").get<int>();
    const ParamLayout layout(config);
    const json& shapes = header.at("shapes");
    bool consistent =
        count == layout.size() && shapes.size() == layout.mlps().size();
    for (size_t k = 0; consistent && k < shapes.size(); ++k) {
      const MlpShape& mlp = layout.mlps()[k];
      const json& layers = shapes[k].at("layers");
      consistent = shapes[k].at("name") == mlp.name &&
                   layers.size() == mlp.layers.size();
      for (size_t q = 0; consistent && q < layers.size(); ++q) {
        consistent = layers[q][0] == mlp.layers[q].in &&
                     layers[q][1] == mlp.layers[q].out;
      }
    }
    if (!consistent) throw IoError("checkpoint shapes do not match its config");
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed checkpoint header: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw IoError(std::string("malformed checkpoint header: ") + e.what());
  }
  if (body.size() != 8 * static_cast<size_t>(count)) {
    throw IoError("checkpoint holds " + std::to_string(body.size()) +
                  " bytes of parameters, expected " +
                  std::to_string(8 * static_cast<size_t>(count)));
  }
  Eigen::VectorXd values(count);
  for (int k = 0; k < count; ++k) {
    uint64_t bits = 0;
    for (int byte = 0; byte < 8; ++byte) {
      bits |=
          static_cast<uint64_t>(static_cast<unsigned char>(body[8 * k + byte]))
          << (8 * byte);
    }
    values(k) = std::bit_cast<double>(bits);
  }
  checkpoint.params = GnnParams(config, std::move(values));
  return checkpoint;
}

void WriteCheckpoint(const fs::path& path, const Checkpoint& checkpoint) {
  WriteFileAtomic(path, SerializeCheckpoint(checkpoint));
}

Checkpoint ReadCheckpoint(const fs::path& path) {
  return ParseCheckpoint(ReadFile(path));
}

}  // namespace lpgraph
