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

// Python bindings for the lpgraph core.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "lpgraph/errors.h"
#include "lpgraph/fold_verify.h"
#include "lpgraph/gnn.h"
#include "lpgraph/instance_forge.h"
#include "lpgraph/io.h"
#include "lpgraph/lp_graph.h"
#include "lpgraph/lp_instance.h"
#include "lpgraph/lp_solver.h"
#include "lpgraph/min_norm.h"
#include "lpgraph/trainer.h"
#include "lpgraph/wl_refine.h"

namespace py = pybind11;

namespace lpgraph {
namespace {

using TripletTuple = std::tuple<int, int, double>;

LpInstance MakeLp(int m, int n, const std::vector<TripletTuple>& a,
                  std::vector<double> b, const std::vector<std::string>& senses,
                  std::vector<double> c, std::vector<Bound> lower,
                  std::vector<Bound> upper) {
  std::vector<Triplet> triplets;
  triplets.reserve(a.size());
  for (const auto& [row, col, value] : a) triplets.push_back({row, col, value});
  std::vector<Comparison> comparisons;
  comparisons.reserve(senses.size());
  for (const std::string& s : senses) comparisons.push_back(ParseComparison(s));
  return LpInstance(m, n, std::move(triplets), std::move(b),
                    std::move(comparisons), std::move(c), std::move(lower),
                    std::move(upper));
}

std::vector<TripletTuple> Triplets(const LpInstance& lp) {
  std::vector<TripletTuple> out;
  for (const Triplet& t : lp.coefficients())
    out.emplace_back(t.row, t.col, t.value);
  return out;
}

std::vector<std::string> Senses(const LpInstance& lp) {
  std::vector<std::string> out;
  for (Comparison c : lp.comparisons()) out.emplace_back(ComparisonSymbol(c));
  return out;
}

py::dict SolveToDict(const LpInstance& lp) {
  const LpOutcome outcome = Solve(lp);
  py::dict result;
  result["status"] = std::string(OutcomeStatusName(outcome.status()));
  result["value"] = outcome.ExtendedValue();
  if (outcome.is_optimal()) {
    result["solution"] = outcome.optimal().solution;
  } else {
    result["solution"] = py::none();
  }
  return result;
}

py::dict WlToDict(const LpInstance& lp) {
  const WlResult wl = RunWl(Encode(lp));
  py::dict result;
  result["refining_steps"] = wl.refining_steps();
  result["constraint_classes"] = wl.stable.i_classes;
  result["variable_classes"] = wl.stable.j_classes;
  return result;
}

py::dict TwinToDict(const LpInstance& first, const LpInstance& second,
                    double tol) {
  const TwinReport report = CheckTwinProperties(first, second, tol);
  py::dict result;
  result["wl_indistinguishable"] = report.wl_indistinguishable;
  result["feas_match"] = report.feas_match;
  result["obj_match"] = report.obj_match;
  result["solu_match"] = report.solu_match;
  result["objective"] =
      std::make_pair(report.objective_first, report.objective_second);
  result["min_norm"] =
      std::make_pair(report.min_norm_first, report.min_norm_second);
  result["theorem_holds"] = report.TheoremHolds();
  result["all_match"] = report.AllMatch();
  result["details"] = report.details;
  return result;
}

GenConfig MakeGenConfig(int m, int n, int nnz, double c_scale,
                        double bound_sigma, double p_le, double p_eq,
                        double p_ge, double p_infinite_bound, uint64_t seed) {
  GenConfig config;
  config.m = m;
  config.n = n;
  config.nnz = nnz;
  config.c_scale = c_scale;
  config.bound_sigma = bound_sigma;
  config.p_le = p_le;
  config.p_eq = p_eq;
  config.p_ge = p_ge;
  config.p_infinite_bound = p_infinite_bound;
  config.seed = seed;
  return config;
}

py::dict RecordToDict(const LabeledRecord& record) {
  py::dict result;
  result["lp"] = record.lp;
  result["feasible"] = record.feasible;
  result["bounded"] = record.bounded;
  result["objective"] = record.objective;
  result["solution"] = record.solution;
  result["min_norm_solution"] = record.min_norm_solution;
  return result;
}

py::dict TrainOnDataset(const std::string& task_name,
                        const std::filesystem::path& data, int d, int layers,
                        int epochs, uint64_t seed, int batch_size,
                        double learning_rate) {
  const Task task = ParseTask(task_name);
  const Dataset dataset = ReadDataset(data);
  const TrainingSet set = MakeTrainingSet(dataset.records, task);
  TrainConfig config;
  config.gnn = GnnConfig{layers, d, OutputModeFor(task)};
  config.epochs = epochs;
  config.seed = seed;
  config.batch_size = batch_size;
  config.adam.learning_rate = learning_rate;
  TrainResult result;
  {
    py::gil_scoped_release release;
    result = Train(config, set);
  }
  std::vector<double> losses, metrics;
  for (const EpochRecord& r : result.history) {
    losses.push_back(r.loss);
    metrics.push_back(r.metric);
  }
  py::dict out;
  out["num_params"] = result.params.size();
  out["num_samples"] = set.size();
  out["loss"] = losses;
  out["metric"] = metrics;
  out["final_loss"] = result.final.loss;
  out["final_metric"] = result.final.metric;
  return out;
}

}  // namespace
}  // namespace lpgraph

PYBIND11_MODULE(_lpgraph, m) {
  using namespace lpgraph;
  m.doc() =
      "LP instances as weighted bipartite graphs: solver, WL test, "
      "twin certification, generators and GNN training.";

  // Translators run newest first, so the base class goes first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument",
                                          PyExc_ValueError);
  py::register_exception<NotOptimal>(m, "NotOptimal", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<LpInstance>(m, "LpInstance")
      .def(py::init(&MakeLp), py::arg("m"), py::arg("n"), py::arg("a"),
           py::arg("b"), py::arg("senses"), py::arg("c"), py::arg("lower"),
           py::arg("upper"),
           "a: list of (row, col, value); senses: '<=', '=' or '>='; "
           "None bounds are infinite.")
      .def_property_readonly("m", &LpInstance::num_constraints)
      .def_property_readonly("n", &LpInstance::num_variables)
      .def_property_readonly("a", &Triplets)
      .def_property_readonly("b", &LpInstance::rhs)
      .def_property_readonly("senses", &Senses)
      .def_property_readonly("c", &LpInstance::objective)
      .def_property_readonly("lower", &LpInstance::lower)
      .def_property_readonly("upper", &LpInstance::upper)
      .def("dense", &LpInstance::DenseMatrix)
      .def(py::self == py::self)
      .def("__repr__", [](const LpInstance& lp) {
        return "LpInstance(m=" + std::to_string(lp.num_constraints()) +
               ", n=" + std::to_string(lp.num_variables()) + ")";
      });

  m.def("solve", &SolveToDict, py::arg("lp"),
        "Simplex verdict: {'status', 'value', 'solution'}; value is +inf when "
        "infeasible and -inf when unbounded.");
  m.def(
      "min_norm_optimal",
      [](const LpInstance& lp) { return MinNormOptimal(lp).solution; },
      py::arg("lp"));
  m.def("violation", [](const LpInstance& lp, const std::vector<double>& x) {
    return Violation(lp, x);
  });

  m.def("wl", &WlToDict, py::arg("lp"),
        "Stable partition of the encoded graph.");
  m.def(
      "distinguishable",
      [](const LpInstance& a, const LpInstance& b) {
        return Distinguishable(Encode(a), Encode(b));
      },
      py::arg("first"), py::arg("second"));
  m.def("check_twin", &TwinToDict, py::arg("first"), py::arg("second"),
        py::arg("tol") = 1e-6);

  m.def(
      "gen_random_lp",
      [](int mm, int n, int nnz, double c_scale, double bound_sigma,
         double p_le, double p_eq, double p_ge, double p_infinite_bound,
         uint64_t seed) {
        return GenRandomLp(MakeGenConfig(mm, n, nnz, c_scale, bound_sigma, p_le,
                                         p_eq, p_ge, p_infinite_bound, seed));
      },
      py::arg("m") = 10, py::arg("n") = 50, py::arg("nnz") = 100,
      py::arg("c_scale") = 0.01, py::arg("bound_sigma") = 10.0,
      py::arg("p_le") = 0.7, py::arg("p_eq") = 0.3, py::arg("p_ge") = 0.0,
      py::arg("p_infinite_bound") = 0.0, py::arg("seed") = 0);
  m.def(
      "gen_twin_pair",
      [](int k, const std::string& variant) {
        return GenTwinPair({k, ParseTwinVariant(variant)});
      },
      py::arg("k") = 4, py::arg("variant") = "bounded");
  m.def(
      "lift_replicate",
      [](const LpInstance& base, int r, const std::string& pattern,
         uint64_t seed) {
        return LiftReplicate(base, r, ParseLiftPattern(pattern), seed);
      },
      py::arg("base"), py::arg("r") = 2, py::arg("pattern") = "disjoint",
      py::arg("seed") = 0);

  m.def(
      "read_dataset",
      [](const std::filesystem::path& path) {
        py::list records;
        for (const LabeledRecord& r : ReadDataset(path).records) {
          records.append(RecordToDict(r));
        }
        return records;
      },
      py::arg("path"));
  m.def(
      "write_dataset",
      [](const std::filesystem::path& path, const std::vector<LpInstance>& lps,
         bool min_norm) {
        std::vector<int> stalled;
        Dataset dataset;
        dataset.records = LabelDataset(lps, LabelOptions{min_norm}, &stalled);
        dataset.header.count = static_cast<int>(dataset.records.size());
        dataset.header.discarded = static_cast<int>(stalled.size());
        WriteDataset(path, dataset);
        return dataset.header.count;
      },
      py::arg("path"), py::arg("lps"), py::arg("min_norm") = false,
      "Labels the LPs with the solver and writes a dataset file; returns the "
      "number of records kept.");
  m.def("train", &TrainOnDataset, py::arg("task"), py::arg("data"),
        py::arg("d") = 64, py::arg("layers") = 2, py::arg("epochs") = 1000,
        py::arg("seed") = 0, py::arg("batch_size") = 0,
        py::arg("learning_rate") = 3e-4,
        "Trains on a dataset file and returns the per-epoch history.");
  m.def(
      "num_params",
      [](int d, int layers, const std::string& task) {
        return ParamLayout(GnnConfig{layers, d, OutputModeFor(ParseTask(task))})
            .size();
      },
      py::arg("d"), py::arg("layers") = 2, py::arg("task") = "feas");
}
