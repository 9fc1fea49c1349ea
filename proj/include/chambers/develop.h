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

#ifndef CHAMBERS_DEVELOP_H_
#define CHAMBERS_DEVELOP_H_

// Finite pieces of universal covers: balls developed from a quotient complex,
// flat disks inside them, and balls built from a prescribed vertex link.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chambers/complex.h"
#include "chambers/metric_graph.h"

namespace chambers {

struct DevelopedBall {
  ShapeComplex complex;   // unit triangles only
  ShapeComplex quotient;  // the triangulated quotient it projects to
  int base = 0;
  int radius = 0;
  std::vector<int> vertex_projection;
  std::vector<int> edge_projection;  // lifted edges keep their orientation
  std::vector<int> face_projection;  // lifted faces keep their side order
  std::vector<int> distance;         // edge-path distance from base
  std::vector<bool> frontier;        // vertex whose star may be incomplete

  bool interior(int v) const { return !frontier[v]; }
};

// The closed stars of all lifts at distance <= radius - 1 from a lift of
// `base`, in the universal cover of c (triangulated first if needed). The
// cover is developed `margin` extra layers before trimming. Throws
// DomainError for complexes with boundary or failing the link condition.
DevelopedBall DevelopBall(const ShapeComplex& c, int base, int radius, int margin = 2);

// Every interior vertex has a link isometric to the link of its projection.
bool VerifyCover(const DevelopedBall& ball);

// Every interior vertex star maps bijectively onto the star of its projection:
// edge ends to edge ends and face corners to face corners.
bool ProjectionIsLocalIsomorphism(const DevelopedBall& ball);

// Largest r <= distance from v to the frontier such that the hexagonal disk of
// radius r of the triangular lattice embeds simplicially in the ball around v.
int FlatDiskRadius(const DevelopedBall& ball, int v);

// Ball export: the complex text followed by a projection block.
std::string BallToText(const DevelopedBall& ball);

struct PrescribeResult {
  bool sat = false;
  // SAT: the requested radius. UNSAT: the least radius with no ball.
  int depth = 0;
  std::optional<ShapeComplex> witness;
  uint64_t nodes = 0;  // link completions tried
};

// Searches for a simplicial ball of the given radius in which every vertex at
// distance <= radius - 1 from the centre has link isomorphic to `link`. The
// search develops vertex by vertex in breadth-first layers, as in the
// universal cover of a complex with all links `link`. Requires a simple graph
// with every edge of length 2 and no cycle shorter than 6 edges.
PrescribeResult PrescribeLink(const MetricGraph& link, int radius);

}  // namespace chambers

#endif  // CHAMBERS_DEVELOP_H_
