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

#ifndef CHAMBERS_COMPLEX_H_
#define CHAMBERS_COMPLEX_H_

// Two-dimensional complexes whose faces are polygons of the equilateral
// triangular lattice, with unit sides and corner angles in units of pi/6.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chambers/metric_graph.h"
#include "chambers/rank.h"

namespace chambers {

struct ComplexEdge {
  std::string id;
  int src = -1;
  int dst = -1;
};

// One side of a face boundary, traversed in the face's cyclic order. The
// angle is the interior angle at the head of this side, i.e. between this
// side and the next one.
struct Side {
  int edge = -1;
  bool forward = true;
  int angle = 0;
};

struct Face {
  std::string id;
  std::vector<Side> sides;
};

class ShapeComplex {
 public:
  ShapeComplex() = default;
  explicit ShapeComplex(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  int AddVertex(std::string id);
  int AddEdge(int src, int dst, std::string id = {});
  int AddFace(std::vector<Side> sides, std::string id = {});

  int num_vertices() const { return static_cast<int>(vertex_ids_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
  const ComplexEdge& edge(int e) const { return edges_[e]; }
  const Face& face(int f) const { return faces_[f]; }
  const std::vector<ComplexEdge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }

  std::optional<int> FindVertex(std::string_view id) const;
  std::optional<int> FindEdge(std::string_view id) const;
  std::optional<int> FindFace(std::string_view id) const;

  // Endpoints of a side in traversal order.
  int Tail(const Side& s) const {
    return s.forward ? edges_[s.edge].src : edges_[s.edge].dst;
  }
  int Head(const Side& s) const {
    return s.forward ? edges_[s.edge].dst : edges_[s.edge].src;
  }

  // Number of face sides using each edge.
  std::vector<int> FaceValency() const;
  int EulerCharacteristic() const {
    return num_vertices() - num_edges() + num_faces();
  }

 private:
  std::string name_;
  std::vector<std::string> vertex_ids_;
  std::map<std::string, int, std::less<>> vertex_index_;
  std::vector<ComplexEdge> edges_;
  std::map<std::string, int, std::less<>> edge_index_;
  std::vector<Face> faces_;
  std::map<std::string, int, std::less<>> face_index_;
};

// Text format:
//   complex <name>
//   vertex <id>
//   edge <id> <src> <dst>
//   face <id> <edge>:<+|-> <angle> <edge>:<+|-> <angle> ...
ShapeComplex ParseComplexText(std::string_view text);
std::string ComplexToText(const ShapeComplex& c);

// Lattice point in the basis (1, 0), (1/2, sqrt(3)/2).
struct LatticePoint {
  int a = 0;
  int b = 0;
  auto operator<=>(const LatticePoint&) const = default;
};

// Develops a face into the triangular lattice: the polygon corners in order,
// starting at the tail of the first side, traversed counterclockwise. Returns
// nullopt if the angles do not close up into a simple polygon.
std::optional<std::vector<LatticePoint>> DevelopFace(const Face& face);

struct ValidationReport {
  std::vector<std::string> errors;
  bool ok() const { return errors.empty(); }
};

// Checks boundary closure, angle sums, even angles and lattice realizability.
ValidationReport Validate(const ShapeComplex& c);
// Throws DomainError listing the problems.
void RequireValid(const ShapeComplex& c);

enum class EdgeEnd { kSource, kTarget };

struct LinkStructure {
  MetricGraph graph;
  // For each link vertex: the edge and which of its ends lies at the vertex.
  std::vector<std::pair<int, EdgeEnd>> ends;
  // For each link edge: the face and the corner (index of the side whose head
  // is the corner).
  std::vector<std::pair<int, int>> corners;
  // Link vertex of an (edge, end) pair at this vertex.
  int EndIndex(int edge, EdgeEnd end) const;
};

// Link of vertex v: one vertex per edge end at v, one edge per face corner at
// v, with length the corner angle.
LinkStructure LinkOf(const ShapeComplex& c, int v);
MetricGraph Link(const ShapeComplex& c, int v);

// Classes of vertices with isometric links.
std::vector<std::vector<int>> LinkClasses(const ShapeComplex& c);

struct NpcReport {
  bool nonpositively_curved = true;
  bool has_boundary = false;  // some edge lies on fewer than two faces
  std::vector<std::optional<int>> link_girth;
};

// Gromov's link condition: every link has girth >= 2 pi.
NpcReport CheckNpc(const ShapeComplex& c);

struct HomologyGroup {
  int free_rank = 0;
  std::vector<int64_t> torsion;  // invariant factors > 1
  std::string ToString() const;
  bool operator==(const HomologyGroup&) const = default;
};

// Integral first homology of a connected complex via Smith normal form.
HomologyGroup FirstHomology(const ShapeComplex& c);

struct Presentation {
  std::vector<std::string> generators;
  // Letters are (generator index, +1 or -1).
  std::vector<std::vector<std::pair<int, int>>> relators;
  std::string ToString() const;
  HomologyGroup Abelianization() const;
};

// Fundamental group from a spanning tree of the 1-skeleton: one generator per
// non-tree edge, one relator per face, freely and cyclically reduced.
Presentation FundamentalGroupPresentation(const ShapeComplex& c);

// Invariant factors of an integer matrix (rows of equal length).
std::vector<int64_t> SmithInvariants(std::vector<std::vector<int64_t>> m);

struct Triangulation {
  ShapeComplex complex;
  std::vector<int> face_origin;    // per new face: original face
  std::vector<int> edge_origin;    // per new edge: original edge, or -1
  std::vector<int> vertex_origin;  // per new vertex: original vertex, or -1
  std::vector<int> edge_interior_of;    // per new edge: face it cuts, or -1
  std::vector<int> vertex_interior_of;  // per new vertex: face it lies in, or -1
};

// Subdivides every face into unit equilateral triangles along the lattice.
// Faces that already are unit triangles keep their ids.
Triangulation Triangulate(const ShapeComplex& c);

bool IsTriangulated(const ShapeComplex& c);

struct ComplexIsomorphism {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
  std::vector<bool> edge_flipped;
  std::vector<int> face_map;
  std::vector<int> face_rotation;
  std::vector<bool> face_reversed;
};

// Cellular isomorphism matching angles. By default edge and face orientations
// may be reversed; strict mode demands they are preserved.
std::optional<ComplexIsomorphism> FindComplexIsomorphism(
    const ShapeComplex& a, const ShapeComplex& b, bool strict = false);

// Catalog of the quotient complexes discussed in the theory, built from their
// face boundary words. Names: V6_0, V6_1, V6_3_sec4, V6_3_sec6, V1, V2, V3,
// V4, V_fig4, V_fig5, V_groupG.
std::vector<std::string> CatalogComplexNames();
ShapeComplex CatalogComplex(const std::string& name);

// Builds a complex from face words over edge labels; vertices are the
// classes of edge endpoints identified around face corners. Each word entry
// is "<label>:<+|->" followed by the angle at its head.
struct FaceWord {
  std::string id;
  std::vector<std::pair<std::string, int>> sides;
};
ShapeComplex ComplexFromWords(const std::string& name,
                              const std::vector<std::string>& edge_labels,
                              const std::vector<FaceWord>& faces);

}  // namespace chambers

#endif  // CHAMBERS_COMPLEX_H_
