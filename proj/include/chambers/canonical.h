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

#ifndef CHAMBERS_CANONICAL_H_
#define CHAMBERS_CANONICAL_H_

// Canonical labeling and automorphism groups by individualization-refinement.

#include <cstdint>
#include <vector>

#include "chambers/metric_graph.h"
#include "chambers/permutation_group.h"

namespace chambers {

struct LabeledEdge {
  int u = 0;
  int v = 0;
  int64_t label = 0;
};

// Vertex-colored multigraph with labeled edges; loops allowed.
struct ColoredGraph {
  int num_vertices = 0;
  std::vector<int64_t> vertex_color;  // empty means uniform
  std::vector<LabeledEdge> edges;
};

struct CanonicalResult {
  // labeling[v] is the canonical position of vertex v.
  Permutation labeling;
  // Complete isomorphism invariant: equal iff the graphs are isomorphic.
  std::vector<int64_t> certificate;
  // Generators of the automorphism group (as vertex permutations).
  std::vector<Permutation> generators;
  uint64_t group_order = 1;
  size_t leaves_visited = 0;
};

CanonicalResult CanonicalSearch(const ColoredGraph& g);

// Edge lengths become edge labels; vertex colors are optional.
ColoredGraph ToColoredGraph(const MetricGraph& g,
                            const std::vector<int64_t>& vertex_color = {});

// Canonical form of the graph exactly as given (valency-2 vertices included).
std::vector<int64_t> CanonicalForm(const MetricGraph& g);

struct AutomorphismGroup {
  std::vector<Permutation> generators;  // on vertex indices
  uint64_t order = 1;
};

// Vertex permutations preserving the length-labeled edge multiset.
AutomorphismGroup ComputeAutomorphisms(const MetricGraph& g);

// Suppresses valency-2 vertices, merging their two edges into one whose length
// is the sum. A component that is a bare cycle becomes one vertex with a loop.
MetricGraph Smooth(const MetricGraph& g);

// Isometry of the underlying metric spaces.
bool IsIsomorphic(const MetricGraph& a, const MetricGraph& b);

}  // namespace chambers

#endif  // CHAMBERS_CANONICAL_H_
