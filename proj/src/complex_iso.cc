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
#include <functional>
#include <queue>

#include "chambers/complex.h"

namespace chambers {
namespace {

// A face boundary read from a given side, forwards or backwards.
Side ReadSide(const Face& f, int rotation, bool reversed, int i) {
  const int n = static_cast<int>(f.sides.size());
  if (!reversed) return f.sides[(i + rotation) % n];
  // Backwards reading: side k is side (n - 1 - k) traversed against its
  // direction; its head angle is the head angle of the side before it.
  const int k = (i + rotation) % n;
  const Side& s = f.sides[n - 1 - k];
  const Side& prev = f.sides[(2 * n - 2 - k) % n];
  return {s.edge, !s.forward, prev.angle};
}

class IsoSearch {
 public:
  IsoSearch(const ShapeComplex& a, const ShapeComplex& b, bool strict)
      : a_(a), b_(b), strict_(strict) {
    vmap_.assign(a.num_vertices(), -1);
    vinv_.assign(b.num_vertices(), -1);
    emap_.assign(a.num_edges(), -1);
    einv_.assign(b.num_edges(), -1);
    eflip_.assign(a.num_edges(), false);
    fmap_.assign(a.num_faces(), -1);
    finv_.assign(b.num_faces(), -1);
    frot_.assign(a.num_faces(), 0);
    frev_.assign(a.num_faces(), false);
    faces_of_b_edge_.resize(b.num_edges());
    for (int f = 0; f < b.num_faces(); ++f) {
      for (const Side& s : b.face(f).sides) faces_of_b_edge_[s.edge].push_back(f);
    }
    // Faces of a in breadth-first order across shared edges.
    std::vector<std::vector<int>> faces_of_a_edge(a.num_edges());
    for (int f = 0; f < a.num_faces(); ++f) {
      for (const Side& s : a.face(f).sides) faces_of_a_edge[s.edge].push_back(f);
    }
    std::vector<bool> queued(a.num_faces(), false);
    for (int root = 0; root < a.num_faces(); ++root) {
      if (queued[root]) continue;
      std::queue<int> q;
      q.push(root);
      queued[root] = true;
      while (!q.empty()) {
        const int f = q.front();
        q.pop();
        face_order_.push_back(f);
        for (const Side& s : a.face(f).sides) {
          for (int g : faces_of_a_edge[s.edge]) {
            if (!queued[g]) {
              queued[g] = true;
              q.push(g);
            }
          }
        }
      }
    }
    for (int e = 0; e < a.num_edges(); ++e) {
      if (faces_of_a_edge[e].empty()) loose_edges_.push_back(e);
    }
  }

  std::optional<ComplexIsomorphism> Run() {
    if (a_.num_vertices() != b_.num_vertices() || a_.num_edges() != b_.num_edges() ||
        a_.num_faces() != b_.num_faces()) {
      return std::nullopt;
    }
    if (!MatchFace(0)) return std::nullopt;
    ComplexIsomorphism iso;
    iso.vertex_map = vmap_;
    iso.edge_map = emap_;
    iso.edge_flipped = eflip_;
    iso.face_map = fmap_;
    iso.face_rotation = frot_;
    iso.face_reversed = frev_;
    return iso;
  }

 private:
  struct Trail {
    std::vector<int> vertices, edges;
  };

  bool MapVertex(int va, int vb, Trail& trail) {
    if (vmap_[va] >= 0) return vmap_[va] == vb;
    if (vinv_[vb] >= 0) return false;
    vmap_[va] = vb;
    vinv_[vb] = va;
    trail.vertices.push_back(va);
    return true;
  }

  bool MapEdge(int ea, int eb, bool flip, Trail& trail) {
    if (strict_ && flip) return false;
    if (emap_[ea] >= 0) {
      if (emap_[ea] != eb || eflip_[ea] != flip) return false;
    } else {
      if (einv_[eb] >= 0) return false;
      emap_[ea] = eb;
      einv_[eb] = ea;
      eflip_[ea] = flip;
      trail.edges.push_back(ea);
    }
    const ComplexEdge& x = a_.edge(ea);
    const ComplexEdge& y = b_.edge(eb);
    return MapVertex(x.src, flip ? y.dst : y.src, trail) &&
           MapVertex(x.dst, flip ? y.src : y.dst, trail);
  }

  void Undo(const Trail& trail) {
    for (int v : trail.vertices) {
      vinv_[vmap_[v]] = -1;
      vmap_[v] = -1;
    }
    for (int e : trail.edges) {
      einv_[emap_[e]] = -1;
      emap_[e] = -1;
    }
  }

  bool MatchFace(size_t k) {
    if (k == face_order_.size()) return MatchLooseEdge(0);
    const int fa = face_order_[k];
    const Face& face = a_.face(fa);
    const int n = static_cast<int>(face.sides.size());
    std::vector<int> candidates;
    for (const Side& s : face.sides) {
      if (emap_[s.edge] >= 0) {
        candidates = faces_of_b_edge_[emap_[s.edge]];
        break;
      }
    }
    if (candidates.empty()) {
      for (int f = 0; f < b_.num_faces(); ++f) candidates.push_back(f);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (int fb : candidates) {
      if (finv_[fb] >= 0 || static_cast<int>(b_.face(fb).sides.size()) != n) continue;
      for (int rev = 0; rev < (strict_ ? 1 : 2); ++rev) {
        for (int rot = 0; rot < n; ++rot) {
          Trail trail;
          bool ok = true;
          for (int i = 0; i < n && ok; ++i) {
            const Side& sa = face.sides[i];
            const Side sb = ReadSide(b_.face(fb), rot, rev == 1, i);
            ok = sa.angle == sb.angle && MapEdge(sa.edge, sb.edge, sa.forward != sb.forward, trail);
          }
          if (ok) {
            fmap_[fa] = fb;
            finv_[fb] = fa;
            frot_[fa] = rot;
            frev_[fa] = rev == 1;
            if (MatchFace(k + 1)) return true;
            fmap_[fa] = -1;
            finv_[fb] = -1;
          }
          Undo(trail);
        }
      }
    }
    return false;
  }

  bool MatchLooseEdge(size_t k) {
    if (k == loose_edges_.size()) return MatchIsolatedVertices();
    const int ea = loose_edges_[k];
    for (int eb = 0; eb < b_.num_edges(); ++eb) {
      if (einv_[eb] >= 0 || !faces_of_b_edge_[eb].empty()) continue;
      for (int flip = 0; flip < (strict_ ? 1 : 2); ++flip) {
        Trail trail;
        if (MapEdge(ea, eb, flip == 1, trail) && MatchLooseEdge(k + 1)) return true;
        Undo(trail);
      }
    }
    return false;
  }

  bool MatchIsolatedVertices() {
    std::vector<int> free_b;
    for (int v = 0; v < b_.num_vertices(); ++v) {
      if (vinv_[v] < 0) free_b.push_back(v);
    }
    size_t next = 0;
    for (int v = 0; v < a_.num_vertices(); ++v) {
      if (vmap_[v] >= 0) continue;
      if (next == free_b.size()) return false;
      vmap_[v] = free_b[next];
      vinv_[free_b[next]] = v;
      ++next;
    }
    return next == free_b.size();
  }

  const ShapeComplex& a_;
  const ShapeComplex& b_;
  bool strict_;
  std::vector<int> vmap_, vinv_, emap_, einv_, fmap_, finv_, frot_;
  std::vector<bool> eflip_, frev_;
  std::vector<std::vector<int>> faces_of_b_edge_;
  std::vector<int> face_order_;
  std::vector<int> loose_edges_;
};

}  // namespace

std::optional<ComplexIsomorphism> FindComplexIsomorphism(const ShapeComplex& a,
                                                         const ShapeComplex& b,
                                                         bool strict) {
  return IsoSearch(a, b, strict).Run();
}

}  // namespace chambers
