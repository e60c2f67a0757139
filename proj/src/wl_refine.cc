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

#include "lpgraph/wl_refine.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "lpgraph/errors.h"

namespace lpgraph {
namespace {

// One or more graphs laid side by side. Vertices of graph g occupy
// [v_offset[g], v_offset[g + 1]) and [w_offset[g], w_offset[g + 1]).
struct Structure {
  std::vector<ConstraintFeature> hv;
  std::vector<VariableFeature> hw;
  std::vector<std::vector<std::pair<int, ExactWeight>>> v_adj;
  std::vector<std::vector<std::pair<int, ExactWeight>>> w_adj;
  std::vector<int> v_offset{0};
  std::vector<int> w_offset{0};

  void Add(const LpGraph& graph) {
    const int v0 = static_cast<int>(hv.size());
    const int w0 = static_cast<int>(hw.size());
    hv.insert(hv.end(), graph.constraint_features().begin(),
              graph.constraint_features().end());
    hw.insert(hw.end(), graph.variable_features().begin(),
              graph.variable_features().end());
    v_adj.resize(hv.size());
    w_adj.resize(hw.size());
    for (const Triplet& t : graph.edges()) {
      const ExactWeight weight = ToExact(t.value);
      v_adj[v0 + t.row].emplace_back(w0 + t.col, weight);
      w_adj[w0 + t.col].emplace_back(v0 + t.row, weight);
    }
    v_offset.push_back(static_cast<int>(hv.size()));
    w_offset.push_back(static_cast<int>(hw.size()));
  }
};

int Rank(Comparison c) { return static_cast<int>(c); }

// nullopt sorts before every finite value.
bool BoundLess(const Bound& a, const Bound& b) {
  if (!a || !b) return !a && b;
  return *a < *b;
}

bool ConstraintFeatureLess(const ConstraintFeature& a,
                           const ConstraintFeature& b) {
  if (a.rhs != b.rhs) return a.rhs < b.rhs;
  return Rank(a.comparison) < Rank(b.comparison);
}

bool VariableFeatureLess(const VariableFeature& a, const VariableFeature& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  if (a.lower != b.lower) return BoundLess(a.lower, b.lower);
  return BoundLess(a.upper, b.upper);
}

// Assigns dense ids starting at `first_id` to items ordered by `less`; equal
// items share an id.
template <typename T, typename Less>
std::vector<int> Intern(const std::vector<T>& items, Less less, int first_id) {
  std::vector<int> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return less(items[a], items[b]); });
  std::vector<int> ids(items.size());
  int next = first_id - 1;
  for (size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || less(items[order[k - 1]], items[order[k]])) ++next;
    ids[order[k]] = next;
  }
  return ids;
}

int CountDistinct(const std::vector<int>& ids) {
  std::vector<int> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<int>(std::unique(sorted.begin(), sorted.end()) -
                          sorted.begin());
}

Coloring InitialColoringOf(const Structure& s) {
  Coloring c;
  c.cv = Intern(s.hv, ConstraintFeatureLess, 0);
  c.cw = Intern(s.hw, VariableFeatureLess, CountDistinct(c.cv));
  return c;
}

// (own color, sorted nonzero (neighbor color, exact weight sum) pairs).
struct Signature {
  int color = 0;
  std::vector<std::pair<int, ExactWeight>> sums;
};

bool SignatureLess(const Signature& a, const Signature& b) {
  if (a.color != b.color) return a.color < b.color;
  const size_t k = std::min(a.sums.size(), b.sums.size());
  for (size_t t = 0; t < k; ++t) {
    if (a.sums[t].first != b.sums[t].first) {
      return a.sums[t].first < b.sums[t].first;
    }
    if (a.sums[t].second != b.sums[t].second) {
      return a.sums[t].second < b.sums[t].second;
    }
  }
  return a.sums.size() < b.sums.size();
}

std::vector<Signature> Signatures(
    const std::vector<int>& own,
    const std::vector<std::vector<std::pair<int, ExactWeight>>>& adj,
    const std::vector<int>& other) {
  std::vector<Signature> out(own.size());
  for (size_t u = 0; u < own.size(); ++u) {
    std::map<int, ExactWeight> sums;
    for (const auto& [neighbor, weight] : adj[u]) {
      sums[other[neighbor]] += weight;
    }
    out[u].color = own[u];
    for (auto& [color, sum] : sums) {
      if (sgn(sum) != 0) out[u].sums.emplace_back(color, std::move(sum));
    }
  }
  return out;
}

Coloring RefineStepOf(const Structure& s, const Coloring& c) {
  Coloring next;
  next.cv = Intern(Signatures(c.cv, s.v_adj, c.cw), SignatureLess, 0);
  next.cw = Intern(Signatures(c.cw, s.w_adj, c.cv), SignatureLess,
                   CountDistinct(next.cv));
  return next;
}

// Iterates to the fixpoint. Every entry of the returned history is strictly
// finer than its predecessor.
std::vector<Coloring> RefineToFixpoint(const Structure& s) {
  std::vector<Coloring> history{InitialColoringOf(s)};
  for (;;) {
    Coloring next = RefineStepOf(s, history.back());
    if (next.NumColors() == history.back().NumColors()) break;
    history.push_back(std::move(next));
  }
  return history;
}

Structure Single(const LpGraph& graph) {
  Structure s;
  s.Add(graph);
  return s;
}

void CheckColoring(const LpGraph& graph, const Coloring& c) {
  if (static_cast<int>(c.cv.size()) != graph.num_constraints() ||
      static_cast<int>(c.cw.size()) != graph.num_variables()) {
    throw InvalidArgument("coloring does not match graph size");
  }
}

void CheckSameSize(const LpGraph& a, const LpGraph& b) {
  if (a.num_constraints() != b.num_constraints() ||
      a.num_variables() != b.num_variables()) {
    throw InvalidArgument("WL comparison requires graphs with equal (m, n)");
  }
}

std::vector<int> Sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::vector<int>> Classes(const std::vector<int>& ids) {
  std::map<int, std::vector<int>> by_color;
  for (size_t u = 0; u < ids.size(); ++u) {
    by_color[ids[u]].push_back(static_cast<int>(u));
  }
  std::vector<std::vector<int>> classes;
  for (auto& [color, members] : by_color) classes.push_back(std::move(members));
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

}  // namespace

ExactWeight ToExact(double value) {
  ExactWeight q(value);
  q.canonicalize();
  return q;
}

int Coloring::NumColors() const {
  return CountDistinct(cv) + CountDistinct(cw);
}

PartitionPair ToPartitionPair(const Coloring& coloring) {
  return {Classes(coloring.cv), Classes(coloring.cw)};
}

bool Refines(const PartitionPair& finer, const PartitionPair& coarser) {
  auto side = [](const std::vector<std::vector<int>>& fine,
                 const std::vector<std::vector<int>>& coarse) {
    std::map<int, int> owner;
    for (size_t k = 0; k < coarse.size(); ++k) {
      for (int u : coarse[k]) owner[u] = static_cast<int>(k);
    }
    for (const auto& cls : fine) {
      for (int u : cls) {
        if (owner.at(u) != owner.at(cls.front())) return false;
      }
    }
    return true;
  };
  return side(finer.i_classes, coarser.i_classes) &&
         side(finer.j_classes, coarser.j_classes);
}

Coloring InitialColoring(const LpGraph& graph) {
  return InitialColoringOf(Single(graph));
}

Coloring RefineStep(const LpGraph& graph, const Coloring& coloring) {
  CheckColoring(graph, coloring);
  return RefineStepOf(Single(graph), coloring);
}

WlResult RunWl(const LpGraph& graph) {
  WlResult result;
  result.history = RefineToFixpoint(Single(graph));
  result.stable = ToPartitionPair(result.history.back());
  return result;
}

JointColoring RunJointWl(const LpGraph& first, const LpGraph& second) {
  Structure s;
  s.Add(first);
  s.Add(second);
  const Coloring joint = RefineToFixpoint(s).back();
  const int m1 = first.num_constraints();
  const int n1 = first.num_variables();
  JointColoring out;
  out.first.cv.assign(joint.cv.begin(), joint.cv.begin() + m1);
  out.first.cw.assign(joint.cw.begin(), joint.cw.begin() + n1);
  out.second.cv.assign(joint.cv.begin() + m1, joint.cv.end());
  out.second.cw.assign(joint.cw.begin() + n1, joint.cw.end());
  return out;
}

bool Distinguishable(const LpGraph& first, const LpGraph& second) {
  CheckSameSize(first, second);
  const JointColoring joint = RunJointWl(first, second);
  return Sorted(joint.first.cv) != Sorted(joint.second.cv) ||
         Sorted(joint.first.cw) != Sorted(joint.second.cw);
}

bool WEquivalent(const LpGraph& first, const LpGraph& second) {
  CheckSameSize(first, second);
  const JointColoring joint = RunJointWl(first, second);
  return Sorted(joint.first.cv) == Sorted(joint.second.cv) &&
         joint.first.cw == joint.second.cw;
}

bool SameVertexColor(const LpGraph& graph, int j, int j2) {
  const int n = graph.num_variables();
  if (j < 0 || j >= n || j2 < 0 || j2 >= n) {
    throw InvalidArgument("variable index out of range");
  }
  const Coloring stable = RefineToFixpoint(Single(graph)).back();
  return stable.cw[j] == stable.cw[j2];
}

}  // namespace lpgraph
