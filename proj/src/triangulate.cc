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

#include <algorithm>
#include <array>
#include <map>

#include "chambers/complex.h"
#include "chambers/error.h"

namespace chambers {
namespace {

// Even-odd test of a point against a lattice polygon; coordinates are
// affine lattice coordinates scaled by 3 so triangle centroids are integral.
bool Inside(const std::vector<LatticePoint>& poly, int64_t x, int64_t y) {
  bool inside = false;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const int64_t x1 = 3 * poly[i].a, y1 = 3 * poly[i].b;
    const int64_t x2 = 3 * poly[(i + 1) % n].a, y2 = 3 * poly[(i + 1) % n].b;
    if ((y1 > y) == (y2 > y)) continue;
    // x < x1 + (y - y1) * (x2 - x1) / (y2 - y1)
    const int64_t lhs = (x - x1) * (y2 - y1);
    const int64_t rhs = (y - y1) * (x2 - x1);
    if ((y2 > y1) ? lhs < rhs : lhs > rhs) inside = !inside;
  }
  return inside;
}

}  // namespace

Triangulation Triangulate(const ShapeComplex& c) {
  RequireValid(c);
  Triangulation t;
  ShapeComplex& out = t.complex;
  out.set_name(c.name());
  for (int v = 0; v < c.num_vertices(); ++v) {
    out.AddVertex(c.vertex_id(v));
    t.vertex_origin.push_back(v);
    t.vertex_interior_of.push_back(-1);
  }
  for (const ComplexEdge& e : c.edges()) {
    out.AddEdge(e.src, e.dst, e.id);
    t.edge_origin.push_back(static_cast<int>(t.edge_origin.size()));
    t.edge_interior_of.push_back(-1);
  }

  for (int f = 0; f < c.num_faces(); ++f) {
    const Face& face = c.face(f);
    if (face.sides.size() == 3 && face.sides[0].angle == 2 &&
        face.sides[1].angle == 2 && face.sides[2].angle == 2) {
      out.AddFace(face.sides, face.id);
      t.face_origin.push_back(f);
      continue;
    }
    const std::vector<LatticePoint> poly = *DevelopFace(face);
    const int n = static_cast<int>(poly.size());
    std::map<LatticePoint, int> vertex_at;
    std::map<std::pair<LatticePoint, LatticePoint>, Side> boundary;
    for (int i = 0; i < n; ++i) {
      vertex_at[poly[i]] = c.Tail(face.sides[i]);
      const LatticePoint next = poly[(i + 1) % n];
      boundary[{poly[i], next}] = {face.sides[i].edge, face.sides[i].forward, 2};
      boundary[{next, poly[i]}] = {face.sides[i].edge, !face.sides[i].forward, 2};
    }

    int min_a = poly[0].a, max_a = poly[0].a, min_b = poly[0].b, max_b = poly[0].b;
    for (const LatticePoint& p : poly) {
      min_a = std::min(min_a, p.a);
      max_a = std::max(max_a, p.a);
      min_b = std::min(min_b, p.b);
      max_b = std::max(max_b, p.b);
    }
    std::vector<std::array<LatticePoint, 3>> triangles;
    for (int a = min_a - 1; a <= max_a; ++a) {
      for (int b = min_b - 1; b <= max_b; ++b) {
        if (Inside(poly, 3 * a + 1, 3 * b + 1)) {
          triangles.push_back({LatticePoint{a, b}, LatticePoint{a + 1, b},
                               LatticePoint{a, b + 1}});
        }
        if (Inside(poly, 3 * a + 2, 3 * b + 2)) {
          triangles.push_back({LatticePoint{a + 1, b}, LatticePoint{a + 1, b + 1},
                               LatticePoint{a, b + 1}});
        }
      }
    }

    std::vector<LatticePoint> interior_points;
    for (const auto& tri : triangles) {
      for (const LatticePoint& p : tri) {
        if (!vertex_at.count(p)) interior_points.push_back(p);
      }
    }
    std::sort(interior_points.begin(), interior_points.end());
    interior_points.erase(std::unique(interior_points.begin(), interior_points.end()),
                          interior_points.end());
    for (size_t k = 0; k < interior_points.size(); ++k) {
      vertex_at[interior_points[k]] = out.AddVertex(face.id + ".c" + std::to_string(k));
      t.vertex_origin.push_back(-1);
      t.vertex_interior_of.push_back(f);
    }

    std::vector<std::pair<LatticePoint, LatticePoint>> diagonals;
    for (const auto& tri : triangles) {
      for (int i = 0; i < 3; ++i) {
        const LatticePoint x = tri[i], y = tri[(i + 1) % 3];
        if (boundary.count({x, y})) continue;
        diagonals.push_back({std::min(x, y), std::max(x, y)});
      }
    }
    std::sort(diagonals.begin(), diagonals.end());
    diagonals.erase(std::unique(diagonals.begin(), diagonals.end()), diagonals.end());
    std::map<std::pair<LatticePoint, LatticePoint>, int> diagonal_edge;
    for (size_t k = 0; k < diagonals.size(); ++k) {
      diagonal_edge[diagonals[k]] =
          out.AddEdge(vertex_at.at(diagonals[k].first), vertex_at.at(diagonals[k].second),
                      face.id + ".d" + std::to_string(k));
      t.edge_origin.push_back(-1);
      t.edge_interior_of.push_back(f);
    }

    for (size_t k = 0; k < triangles.size(); ++k) {
      const auto& tri = triangles[k];
      std::vector<Side> sides;
      for (int i = 0; i < 3; ++i) {
        const LatticePoint x = tri[i], y = tri[(i + 1) % 3];
        auto it = boundary.find({x, y});
        if (it != boundary.end()) {
          sides.push_back(it->second);
        } else {
          sides.push_back({diagonal_edge.at({std::min(x, y), std::max(x, y)}), x < y, 2});
        }
      }
      out.AddFace(std::move(sides), face.id + ".t" + std::to_string(k));
      t.face_origin.push_back(f);
    }
  }
  return t;
}

}  // namespace chambers
