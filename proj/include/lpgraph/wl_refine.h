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

#ifndef LPGRAPH_WL_REFINE_H_
#define LPGRAPH_WL_REFINE_H_

#include <gmpxx.h>

#include <vector>

#include "lpgraph/lp_graph.h"

namespace lpgraph {

// Exact edge weight. Every finite double is a dyadic rational, so the
// conversion is lossless and class sums never round.
using ExactWeight = mpq_class;

ExactWeight ToExact(double value);

// Vertex colors. Ids are dense over both sides: constraint colors occupy
// [0, kv) and variable colors [kv, kv + kw), so the two never collide.
struct Coloring {
  std::vector<int> cv;
  std::vector<int> cw;

  int NumColors() const;
  bool operator==(const Coloring&) const = default;
};

// Partition of constraint indices and of variable indices. Classes are
// sorted, and listed by their smallest member.
struct PartitionPair {
  std::vector<std::vector<int>> i_classes;
  std::vector<std::vector<int>> j_classes;

  bool operator==(const PartitionPair&) const = default;
};

PartitionPair ToPartitionPair(const Coloring& coloring);

// True iff every class of `finer` lies inside a class of `coarser`.
bool Refines(const PartitionPair& finer, const PartitionPair& coarser);

// Two vertices of the same side share a color iff their features are equal.
Coloring InitialColoring(const LpGraph& graph);

// One round of refinement: a vertex keeps company with exactly those
// vertices of its color whose exact edge-weight sums into every color class
// of the other side agree with its own.
Coloring RefineStep(const LpGraph& graph, const Coloring& coloring);

struct WlResult {
  PartitionPair stable;
  // Initial coloring followed by each strictly finer coloring; the last
  // entry is the fixpoint.
  std::vector<Coloring> history;

  int refining_steps() const { return static_cast<int>(history.size()) - 1; }
};

// Iterates RefineStep until the partition stops changing. The fixpoint is the
// coarsest stable partition pair of the graph.
WlResult RunWl(const LpGraph& graph);

// Colors of both graphs at the fixpoint of refinement on their disjoint
// union, so ids are comparable across the two.
struct JointColoring {
  Coloring first;
  Coloring second;
};

JointColoring RunJointWl(const LpGraph& first, const LpGraph& second);

// Whether the WL test tells the graphs apart: the joint-fixpoint color
// multisets differ on either side. Requires equal (m, n).
bool Distinguishable(const LpGraph& first, const LpGraph& second);

// The ordered relation: constraint color multisets agree and variable colors
// agree position by position.
bool WEquivalent(const LpGraph& first, const LpGraph& second);

// Whether variables j and j2 (0-based) share a class at the fixpoint.
bool SameVertexColor(const LpGraph& graph, int j, int j2);

}  // namespace lpgraph

#endif  // LPGRAPH_WL_REFINE_H_
