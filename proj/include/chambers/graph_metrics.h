// Copyright 2026 The chambers Authors
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

#ifndef CHAMBERS_GRAPH_METRICS_H_
#define CHAMBERS_GRAPH_METRICS_H_

#include <map>
#include <optional>
#include <vector>

#include "chambers/metric_graph.h"

namespace chambers {

inline constexpr int kUnreachable = -1;

// Shortest metric length of an embedded cycle; nullopt for forests.
std::optional<int> Girth(const MetricGraph& g);

// Girth counted in edges, ignoring lengths.
std::optional<int> CombinatorialGirth(const MetricGraph& g);

struct LengthSpectrum {
  // length -> number of maximal non-branching paths of that length
  std::map<int, int> counts;
  // Set when a component is a cycle with no branch vertex; it contributes a
  // single entry equal to its total length.
  bool has_bare_cycle = false;
};

// Maximal non-branching paths: walks between vertices of valency != 2 through
// valency-2 vertices only.
LengthSpectrum ComputeLengthSpectrum(const MetricGraph& g);

struct UnitSubdivision {
  MetricGraph graph;
  // For each subdivision vertex: the original vertex, or -1 for an interior
  // point of an edge. Original vertices keep their indices.
  std::vector<int> original_vertex;
  // For each subdivision edge: the original edge it lies on.
  std::vector<int> edge_origin;
};

// Every edge of length L becomes a path of L unit edges. Original vertices
// keep their indices and ids; interior points are named "<edge>#<k>".
UnitSubdivision SubdivideToUnit(const MetricGraph& g);

// Weighted single-source distances (kUnreachable where unreachable).
// skip_edge removes one edge from consideration.
std::vector<int> MetricDistances(const MetricGraph& g, int source,
                                 int skip_edge = -1);

// Breadth-first distances counting edges.
std::vector<int> HopDistances(const MetricGraph& g, int source);

bool IsConnected(const MetricGraph& g);

// Vertices of valency at least 3.
std::vector<int> BranchVertices(const MetricGraph& g);

}  // namespace chambers

#endif  // CHAMBERS_GRAPH_METRICS_H_
