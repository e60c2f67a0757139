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

#include "lpgraph/report.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "lpgraph/errors.h"
#include "lpgraph/io.h"

namespace lpgraph {
namespace {

std::string FormatDouble(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

template <typename T>
T ParseNumber(std::string_view cell, int line) {
  T value{};
  const auto result =
      std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (result.ec != std::errc() || result.ptr != cell.data() + cell.size()) {
    throw IoError("metrics line " + std::to_string(line) + ": bad number '" +
                  std::string(cell) + "'");
  }
  return value;
}

std::vector<std::string_view> SplitCells(std::string_view line) {
  std::vector<std::string_view> cells;
  while (true) {
    const size_t comma = line.find(',');
    cells.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return cells;
}

std::string MetricsHeader() {
  return "# " + std::string(kFormatLine) + "\n" + std::string(kMetricsColumns) +
         "\n";
}

std::string SerializeRows(std::span<const MetricsRow> rows) {
  std::string out;
  for (const MetricsRow& row : rows) {
    if (row.task.find_first_of(",\n") != std::string::npos) {
      throw InvalidArgument("task name may not contain ',' or newlines");
    }
    out += row.task + "," + std::to_string(row.d) + "," +
           std::to_string(row.num_params) + "," +
           std::to_string(row.num_samples) + "," + std::to_string(row.epoch) +
           "," + (row.train_metric ? FormatDouble(*row.train_metric) : "") +
           "," + (row.test_metric ? FormatDouble(*row.test_metric) : "") + "," +
           FormatDouble(row.wall_seconds) + "\n";
  }
  return out;
}

std::string Escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

}  // namespace

std::string SerializeMetrics(std::span<const MetricsRow> rows) {
  return MetricsHeader() + SerializeRows(rows);
}

std::vector<MetricsRow> ParseMetrics(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const size_t end = text.find('\n');
    lines.push_back(text.substr(0, end));
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  if (lines.size() < 2 || lines[0] != "# " + std::string(kFormatLine) ||
      lines[1] != kMetricsColumns) {
    throw IoError("not a metrics file");
  }
  std::vector<MetricsRow> rows;
  for (size_t k = 2; k < lines.size(); ++k) {
    if (lines[k].empty()) continue;
    const int line = static_cast<int>(k) + 1;
    const std::vector<std::string_view> cells = SplitCells(lines[k]);
    if (cells.size() != 8) {
      throw IoError("metrics line " + std::to_string(line) + " needs 8 cells");
    }
    MetricsRow row;
    row.task = std::string(cells[0]);
    row.d = ParseNumber<int>(cells[1], line);
    row.num_params = ParseNumber<int>(cells[2], line);
    row.num_samples = ParseNumber<int>(cells[3], line);
    row.epoch = ParseNumber<int>(cells[4], line);
    if (!cells[5].empty())
      row.train_metric = ParseNumber<double>(cells[5], line);
    if (!cells[6].empty())
      row.test_metric = ParseNumber<double>(cells[6], line);
    row.wall_seconds = ParseNumber<double>(cells[7], line);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<MetricsRow> ReadMetrics(const std::filesystem::path& path) {
  return ParseMetrics(ReadFile(path));
}

void AppendMetrics(const std::filesystem::path& path,
                   std::span<const MetricsRow> rows) {
  std::string content;
  if (std::filesystem::exists(path)) {
    content = ReadFile(path);
    ParseMetrics(content);
    if (!content.empty() && content.back() != '\n') content += '\n';
  } else {
    content = MetricsHeader();
  }
  content += SerializeRows(rows);
  WriteFileAtomic(path, content);
}

std::vector<std::string> TasksIn(std::span<const MetricsRow> rows) {
  std::vector<std::string> tasks;
  for (const MetricsRow& row : rows) {
    if (std::find(tasks.begin(), tasks.end(), row.task) == tasks.end()) {
      tasks.push_back(row.task);
    }
  }
  return tasks;
}

std::string RenderMetricsSvg(std::string_view task,
                             std::span<const MetricsRow> rows) {
  std::map<int, double> train, test;
  for (const MetricsRow& row : rows) {
    if (row.task != task || row.num_params <= 0) continue;
    if (row.train_metric) train[row.num_params] = *row.train_metric;
    if (row.test_metric) test[row.num_params] = *row.test_metric;
  }
  if (train.empty() && test.empty()) {
    throw InvalidArgument("no metrics rows for task '" + std::string(task) +
                          "'");
  }
  double x_lo = 1e300, x_hi = -1e300, y_hi = 0.0;
  for (const auto* series : {&train, &test}) {
    for (const auto& [params, metric] : *series) {
      x_lo = std::min(x_lo, std::log10(params));
      x_hi = std::max(x_hi, std::log10(params));
      y_hi = std::max(y_hi, metric);
    }
  }
  x_lo = std::floor(x_lo);
  x_hi = std::max(std::ceil(x_hi), x_lo + 1);
  y_hi = y_hi > 0 ? 1.1 * y_hi : 1.0;

  const double width = 640, height = 420;
  const double left = 70, right = 20, top = 40, bottom = 60;
  const double plot_w = width - left - right, plot_h = height - top - bottom;
  auto px = [&](double params) {
    return left + (std::log10(params) - x_lo) / (x_hi - x_lo) * plot_w;
  };
  auto py = [&](double metric) {
    return top + plot_h - metric / y_hi * plot_h;
  };

  std::ostringstream svg;
  svg << "<!-- " << kFormatLine << " -->\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" "
      << "font-size=\"15\">" << Escape(task) << "</text>\n"
      << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int e = static_cast<int>(x_lo); e <= static_cast<int>(x_hi); ++e) {
    const double x = left + (e - x_lo) / (x_hi - x_lo) * plot_w;
    svg << "<line x1=\"" << x << "\" y1=\"" << top + plot_h << "\" x2=\"" << x
        << "\" y2=\"" << top + plot_h + 5 << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << x << "\" y=\"" << top + plot_h + 20
        << "\" text-anchor=\"middle\">1e" << e << "</text>\n";
  }
  for (int k = 0; k <= 4; ++k) {
    const double metric = y_hi * k / 4;
    svg << "<line x1=\"" << left - 5 << "\" y1=\"" << py(metric) << "\" x2=\""
        << left << "\" y2=\"" << py(metric) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << left - 8 << "\" y=\"" << py(metric) + 4
        << "\" text-anchor=\"end\">"
        << FormatDouble(std::round(metric * 1e4) / 1e4) << "</text>\n";
  }
  svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 15
      << "\" text-anchor=\"middle\">number of parameters</text>\n"
      << "<text transform=\"translate(18 " << top + plot_h / 2
      << ") rotate(-90)\" text-anchor=\"middle\">metric</text>\n";

  struct Series {
    const std::map<int, double>* points;
    const char* name;
    const char* color;
  };
  int legend_row = 0;
  for (const Series& s :
       {Series{&train, "train", "#1f77b4"}, Series{&test, "test", "#d62728"}}) {
    if (s.points->empty()) continue;
    svg << "<polyline fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& [params, metric] : *s.points) {
      svg << (first ? "" : " ") << px(params) << "," << py(metric);
      first = false;
    }
    svg << "\"/>\n";
    for (const auto& [params, metric] : *s.points) {
      svg << "<circle cx=\"" << px(params) << "\" cy=\"" << py(metric)
          << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
    }
    const double ly = top + 15 + 16 * legend_row++;
    svg << "<line x1=\"" << left + plot_w - 70 << "\" y1=\"" << ly << "\" x2=\""
        << left + plot_w - 50 << "\" y2=\"" << ly << "\" stroke=\"" << s.color
        << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << left + plot_w - 45 << "\" y=\"" << ly + 4 << "\">"
        << s.name << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace lpgraph
