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

#ifndef CHAMBERS_PLANE_H_
#define CHAMBERS_PLANE_H_

// Incidence graphs of finite projective planes and the combinatorial test for
// a link to be a spherical building of type A2.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chambers/metric_graph.h"

namespace chambers {

// Point-line incidence graph of PG(2, q) for prime q; every edge has length 2
// (an angle of pi/3). Points are "p<k>", lines "l<k>".
MetricGraph IncidenceGraph(int q);

// The q >= 1 with 2(q^2 + q + 1) == num_vertices, if any.
std::optional<int> ProjectiveOrder(int num_vertices);

struct BuildingCertificate {
  int order = 0;             // q
  bool regular = false;      // every vertex has valency q + 1
  bool vertex_count = false; // 2(q^2 + q + 1) vertices
  bool girth = false;        // combinatorial girth >= 6
  bool bipartite = false;
  bool lengths = false;      // every edge has length 2
  bool thin = false;         // q == 1: a hexagon, not thick
  std::vector<int> side;     // bipartition class per vertex
  bool passes() const {
    return regular && vertex_count && girth && bipartite && lengths;
  }
  std::string Describe() const;
};

// Runs every check regardless of earlier failures.
BuildingCertificate InspectBuilding(const MetricGraph& g);

// Certificate when g is the incidence graph of a projective plane of some
// order (q = 1 is accepted and flagged thin).
std::optional<BuildingCertificate> IsBuildingA2(const MetricGraph& g);

struct CompletionResult {
  int order = 0;
  // Each completion is a set of new vertex pairs, sorted.
  std::vector<std::vector<std::pair<int, int>>> completions;
  // Orbits of completions under the automorphisms of the input graph.
  std::vector<size_t> class_representatives;
  std::vector<size_t> class_sizes;
};

// All ways to add length-2 edges between distinct vertices so that the result
// is the incidence graph of a projective plane with the same vertex set.
CompletionResult CompleteIntoBuilding(const MetricGraph& g);

}  // namespace chambers

#endif  // CHAMBERS_PLANE_H_
