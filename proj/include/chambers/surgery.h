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

#ifndef CHAMBERS_SURGERY_H_
#define CHAMBERS_SURGERY_H_

// Removing chambers (edges) from the incidence graph of a projective plane and
// classifying the results up to symmetry.

#include <cstdint>
#include <string>
#include <vector>

#include "chambers/metric_graph.h"

namespace chambers {

// k-subsets of edges (sorted index lists) whose endpoint sets are pairwise
// disjoint, in lexicographic order.
std::vector<std::vector<int>> DisjointEdgeSets(const MetricGraph& g, int k);

// Sorted pairwise distances between the edges, where the distance between
// two edges is the least number of hops between their endpoints in g.
std::vector<int> DistanceProfile(const MetricGraph& g,
                                 const std::vector<int>& edges);

struct RemovalClass {
  std::vector<int> edges;  // lexicographically least member of the orbit
  uint64_t orbit_size = 0;
  MetricGraph graph;       // incidence graph minus `edges`
  std::vector<int> distance_profile;
  int isomorphism_type = 0;  // index into distinct isomorphism types
};

struct RemovalClassification {
  int order = 0;
  int removed = 0;
  uint64_t num_sets = 0;
  uint64_t automorphism_order = 0;
  std::vector<RemovalClass> classes;  // sorted by representative
  int num_isomorphism_types = 0;
};

// Orbits of pairwise disjoint k-edge sets of the incidence graph of PG(2, q)
// under its automorphism group.
RemovalClassification ClassifyRemovals(int q, int k);

struct CatalogGraph {
  std::string name;  // "G1" ... "G6"
  MetricGraph graph;
  std::vector<int> removed_edges;  // in the incidence graph of PG(2, 2)
  std::vector<int> distance_profile;
};

// The six classes of three disjoint chambers removed from the Fano incidence
// graph, named by distance profile, length spectrum and root census.
const std::vector<CatalogGraph>& GraphCatalog();
const MetricGraph& CatalogGraphByName(const std::string& name);

}  // namespace chambers

#endif  // CHAMBERS_SURGERY_H_
