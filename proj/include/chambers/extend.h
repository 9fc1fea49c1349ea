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

#ifndef CHAMBERS_EXTEND_H_
#define CHAMBERS_EXTEND_H_

// Detecting whether a triangle complex is a Euclidean building with chambers
// missing, by gluing triangles along alternating 6-cycles of its extension
// invariant.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chambers/complex.h"
#include "chambers/metric_graph.h"
#include "chambers/plane.h"

namespace chambers {

struct InvariantVertex {
  int edge = -1;          // deficient edge of the complex
  EdgeEnd end = EdgeEnd::kSource;
  int vertex = -1;        // complex vertex at that end
  int link_vertex = -1;   // its index in LinkOf(complex, vertex)
};

// Joins the two ends of a deficient edge; label = q* - face valency + 1, the
// number of triangles still to be glued along it.
struct Type0Edge {
  int a = -1, b = -1;
  int edge = -1;
  int label = 0;
};

// Joins two ends at the same complex vertex that lie at least 5 edges apart
// in its link, so a new triangle corner could connect them.
struct Type1Edge {
  int a = -1, b = -1;
  int vertex = -1;
};

struct ExtensionInvariant {
  int order = 0;  // q*
  // Projective order of each vertex link of the triangulated complex.
  std::vector<std::optional<int>> vertex_order;
  std::vector<InvariantVertex> vertices;
  std::vector<Type0Edge> type0;
  std::vector<Type1Edge> type1;
  std::vector<int> type0_of;  // per invariant vertex
  std::vector<std::string> warnings;

  MetricGraph ToGraph() const;
};

// Operates on the lattice triangulation of c (c itself if already
// triangulated). Throws DomainError if no link has a projective order.
ExtensionInvariant ComputeExtensionInvariant(const ShapeComplex& c);

// Closed walk a0 -0- b0 -1- a1 -0- b1 -1- a2 -0- b2 -1- a0 alternating
// between type-0 and type-1 edges; stored as (a0, b0, a1, b1, a2, b2) in its
// least rotation or reversal.
struct SixWalk {
  std::array<int, 6> sequence{};
  std::array<int, 3> type0{};
  std::array<int, 3> type1{};
  auto operator<=>(const SixWalk&) const = default;
};

std::vector<SixWalk> AlternatingSixCycles(const ExtensionInvariant& inv);

// A multiset of walks (indices, sorted) using every type-0 edge exactly
// `label` times, whose type-1 edges can be added in turn while keeping every
// link free of cycles shorter than 6 edges.
struct CycleFamily {
  std::vector<int> walks;
};

struct FamilySearch {
  ShapeComplex triangulated;
  ExtensionInvariant invariant;
  std::vector<SixWalk> walks;
  std::vector<CycleFamily> families;
};

FamilySearch SaturatedAmpleFamilies(const ShapeComplex& c);

// Glues one triangle per walk of the family onto the triangulated complex.
ShapeComplex BuildExtension(const FamilySearch& search, const CycleFamily& family);

struct ExtensionCount {
  size_t families = 0;
  std::vector<ShapeComplex> extensions;  // pairwise non-isomorphic
  // Fewest triangles added by any extension: the number of missing chambers.
  std::optional<size_t> missing_chambers;
  size_t count() const { return extensions.size(); }
};

// Extensions into complexes whose links are all buildings, up to complex
// isomorphism.
ExtensionCount CountExtensions(const ShapeComplex& c);

struct Verdict {
  bool is_building_with_chambers_missing = false;
  std::optional<ShapeComplex> witness;
  std::vector<BuildingCertificate> certificates;  // per witness vertex
  size_t families = 0;
  std::vector<std::string> notes;  // failed preconditions, warnings
};

Verdict IsBuildingWithChambersMissing(const ShapeComplex& c);

}  // namespace chambers

#endif  // CHAMBERS_EXTEND_H_
