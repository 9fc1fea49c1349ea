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

#include "chambers/develop.h"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "chambers/canonical.h"
#include "chambers/error.h"
#include "chambers/graph_metrics.h"

namespace chambers {
namespace {

int EndCode(EdgeEnd end) { return end == EdgeEnd::kSource ? 0 : 1; }
int HeadEnd(const Side& s) { return s.forward ? 1 : 0; }
int TailEnd(const Side& s) { return s.forward ? 0 : 1; }

// Lifts of quotient cells glued by congruence closure: two cells at the same
// lifted vertex projecting to the same edge end or face corner are one cell.
class Development {
 public:
  explicit Development(const ShapeComplex& q) : q_(q) {
    for (int v = 0; v < q.num_vertices(); ++v) links_.push_back(LinkOf(q, v));
  }

  int NewVertex(int proj) {
    vparent_.push_back(static_cast<int>(vertices_.size()));
    vertices_.push_back({proj, false, {}, {}});
    return static_cast<int>(vertices_.size()) - 1;
  }

  void Expand(int x) {
    x = FindV(x);
    const int px = vertices_[x].proj;
    for (const auto& [qe, end] : links_[px].ends) {
      x = FindV(x);
      if (vertices_[x].edge_at.count({qe, EndCode(end)})) continue;
      const ComplexEdge& e = q_.edge(qe);
      const int y = NewVertex(end == EdgeEnd::kSource ? e.dst : e.src);
      if (end == EdgeEnd::kSource) {
        NewEdge(qe, x, y);
      } else {
        NewEdge(qe, y, x);
      }
      Settle();
    }
    for (const auto& [qf, i] : links_[px].corners) {
      x = FindV(x);
      if (vertices_[x].face_at.count({qf, i})) continue;
      const Face& f = q_.face(qf);
      const Side& in = f.sides[i];
      const Side& out = f.sides[(i + 1) % 3];
      const Side& across = f.sides[(i + 2) % 3];
      const int e1 = FindE(vertices_[x].edge_at.at({in.edge, HeadEnd(in)}));
      const int e2 = FindE(vertices_[x].edge_at.at({out.edge, TailEnd(out)}));
      const int y1 = FindV(in.forward ? edges_[e1].src : edges_[e1].dst);
      const int y2 = FindV(out.forward ? edges_[e2].dst : edges_[e2].src);
      const int e3 = across.forward ? NewEdge(across.edge, y2, y1) : NewEdge(across.edge, y1, y2);
      LFace face;
      face.proj = qf;
      face.e[i] = e1;
      face.e[(i + 1) % 3] = e2;
      face.e[(i + 2) % 3] = e3;
      face.v[i] = y1;
      face.v[(i + 1) % 3] = x;
      face.v[(i + 2) % 3] = y2;
      fparent_.push_back(static_cast<int>(faces_.size()));
      faces_.push_back(face);
      RegisterFace(static_cast<int>(faces_.size()) - 1);
      Settle();
    }
    vertices_[FindV(x)].expanded = true;
  }

  int FindV(int x) { return Find(vparent_, x); }
  int FindE(int x) { return Find(eparent_, x); }
  int FindF(int x) { return Find(fparent_, x); }

  bool expanded(int v) const { return vertices_[v].expanded; }
  int proj(int v) const { return vertices_[v].proj; }
  size_t num_vertices() const { return vertices_.size(); }
  size_t num_edges() const { return edges_.size(); }
  size_t num_faces() const { return faces_.size(); }
  int edge_proj(int e) const { return edges_[e].proj; }
  std::pair<int, int> edge_ends(int e) { return {FindV(edges_[e].src), FindV(edges_[e].dst)}; }
  int face_proj(int f) const { return faces_[f].proj; }
  std::array<int, 3> face_vertices(int f) {
    return {FindV(faces_[f].v[0]), FindV(faces_[f].v[1]), FindV(faces_[f].v[2])};
  }
  std::array<int, 3> face_edges(int f) {
    return {FindE(faces_[f].e[0]), FindE(faces_[f].e[1]), FindE(faces_[f].e[2])};
  }

 private:
  struct LVertex {
    int proj;
    bool expanded;
    std::map<std::pair<int, int>, int> edge_at;  // (quotient edge, end) -> edge
    std::map<std::pair<int, int>, int> face_at;  // (quotient face, corner) -> face
  };
  struct LEdge {
    int proj, src, dst;
  };
  struct LFace {
    int proj = -1;
    std::array<int, 3> v{};  // tail of each side
    std::array<int, 3> e{};
  };
  enum Kind { kVertex, kEdge, kFace };

  static int Find(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  int NewEdge(int proj, int src, int dst) {
    eparent_.push_back(static_cast<int>(edges_.size()));
    edges_.push_back({proj, src, dst});
    const int e = static_cast<int>(edges_.size()) - 1;
    Claim(vertices_[FindV(src)].edge_at, {proj, 0}, e, kEdge);
    Claim(vertices_[FindV(dst)].edge_at, {proj, 1}, e, kEdge);
    return e;
  }

  void RegisterFace(int f) {
    for (int i = 0; i < 3; ++i) {
      const int corner_vertex = FindV(faces_[f].v[(i + 1) % 3]);
      Claim(vertices_[corner_vertex].face_at, {faces_[f].proj, i}, f, kFace);
    }
  }

  void Claim(std::map<std::pair<int, int>, int>& slots, std::pair<int, int> key, int cell,
             Kind kind) {
    auto [it, inserted] = slots.emplace(key, cell);
    if (!inserted) pending_.push_back({kind, it->second, cell});
  }

  void Settle() {
    while (!pending_.empty()) {
      const auto [kind, a, b] = pending_.back();
      pending_.pop_back();
      if (kind == kVertex) MergeVertices(a, b);
      if (kind == kEdge) MergeEdges(a, b);
      if (kind == kFace) MergeFaces(a, b);
    }
  }

  void MergeEdges(int a, int b) {
    a = FindE(a);
    b = FindE(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    eparent_[b] = a;
    pending_.push_back({kVertex, edges_[a].src, edges_[b].src});
    pending_.push_back({kVertex, edges_[a].dst, edges_[b].dst});
  }

  void MergeFaces(int a, int b) {
    a = FindF(a);
    b = FindF(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    fparent_[b] = a;
    for (int k = 0; k < 3; ++k) {
      pending_.push_back({kVertex, faces_[a].v[k], faces_[b].v[k]});
      pending_.push_back({kEdge, faces_[a].e[k], faces_[b].e[k]});
    }
  }

  void MergeVertices(int a, int b) {
    a = FindV(a);
    b = FindV(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    if (vertices_[a].proj != vertices_[b].proj) {
      throw DomainError("development identified lifts of different vertices");
    }
    vparent_[b] = a;
    LVertex& keep = vertices_[a];
    LVertex& gone = vertices_[b];
    keep.expanded = keep.expanded || gone.expanded;
    for (const auto& [key, e] : gone.edge_at) Claim(keep.edge_at, key, e, kEdge);
    for (const auto& [key, f] : gone.face_at) Claim(keep.face_at, key, f, kFace);
    gone.edge_at.clear();
    gone.face_at.clear();
  }

  const ShapeComplex& q_;
  std::vector<LinkStructure> links_;
  std::vector<LVertex> vertices_;
  std::vector<LEdge> edges_;
  std::vector<LFace> faces_;
  std::vector<int> vparent_, eparent_, fparent_;
  std::vector<std::array<int, 3>> pending_;
};

// Breadth-first distances over the live cells of a development.
std::map<int, int> LiftDistances(Development& d, int base) {
  std::map<int, std::vector<int>> adj;
  for (size_t e = 0; e < d.num_edges(); ++e) {
    if (d.FindE(static_cast<int>(e)) != static_cast<int>(e)) continue;
    const auto [u, v] = d.edge_ends(static_cast<int>(e));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::map<int, int> dist;
  std::queue<int> q;
  base = d.FindV(base);
  dist[base] = 0;
  q.push(base);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int y : adj[x]) {
      if (dist.count(y)) continue;
      dist[y] = dist[x] + 1;
      q.push(y);
    }
  }
  return dist;
}

std::vector<std::vector<int>> Adjacency(const ShapeComplex& c) {
  std::vector<std::vector<int>> adj(c.num_vertices());
  for (const ComplexEdge& e : c.edges()) {
    adj[e.src].push_back(e.dst);
    adj[e.dst].push_back(e.src);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

}  // namespace

DevelopedBall DevelopBall(const ShapeComplex& c, int base, int radius, int margin) {
  if (radius < 0 || margin < 1) throw DomainError("radius must be >= 0 and margin >= 1");
  if (base < 0 || base >= c.num_vertices()) throw DomainError("no such base vertex");
  RequireValid(c);
  const ShapeComplex q = IsTriangulated(c) ? c : Triangulate(c).complex;
  const NpcReport npc = CheckNpc(q);
  if (npc.has_boundary) throw DomainError("complex " + c.name() + " has boundary");
  if (!npc.nonpositively_curved) {
    throw DomainError("complex " + c.name() + " fails the link condition");
  }

  DevelopedBall ball;
  ball.quotient = q;
  ball.radius = radius;
  Development d(q);
  const int root = d.NewVertex(base);
  const int limit = radius - 1 + margin;
  std::map<int, int> dist;
  while (true) {
    dist = LiftDistances(d, root);
    std::vector<int> todo;
    for (const auto& [v, k] : dist) {
      if (k <= limit && !d.expanded(v)) todo.push_back(v);
    }
    if (todo.empty()) break;
    std::stable_sort(todo.begin(), todo.end(),
                     [&dist](int a, int b) { return dist.at(a) < dist.at(b); });
    for (int v : todo) {
      if (!d.expanded(d.FindV(v))) d.Expand(v);
    }
  }

  // Keep the closed stars of lifts within radius - 1.
  std::set<int> kept_faces, kept_edges, kept_vertices;
  kept_vertices.insert(d.FindV(root));
  for (size_t f = 0; f < d.num_faces(); ++f) {
    if (d.FindF(static_cast<int>(f)) != static_cast<int>(f)) continue;
    const auto vs = d.face_vertices(static_cast<int>(f));
    const bool touches = std::any_of(vs.begin(), vs.end(), [&](int v) {
      return dist.count(v) && dist.at(v) <= radius - 1;
    });
    if (!touches) continue;
    kept_faces.insert(static_cast<int>(f));
    for (int e : d.face_edges(static_cast<int>(f))) kept_edges.insert(e);
    for (int v : vs) kept_vertices.insert(v);
  }
  std::vector<int> order(kept_vertices.begin(), kept_vertices.end());
  std::stable_sort(order.begin(), order.end(),
                   [&dist](int a, int b) { return dist.at(a) < dist.at(b); });
  std::map<int, int> vertex_index, edge_index;
  ShapeComplex& out = ball.complex;
  out.set_name(c.name() + "_ball" + std::to_string(radius));
  for (int v : order) {
    vertex_index[v] = out.AddVertex("w" + std::to_string(vertex_index.size()));
    ball.vertex_projection.push_back(d.proj(v));
    ball.distance.push_back(dist.at(v));
    ball.frontier.push_back(dist.at(v) > radius - 1);
  }
  for (int e : kept_edges) {
    const auto [u, v] = d.edge_ends(e);
    edge_index[e] = out.AddEdge(vertex_index.at(u), vertex_index.at(v),
                                "e" + std::to_string(edge_index.size()));
    ball.edge_projection.push_back(d.edge_proj(e));
  }
  for (int f : kept_faces) {
    const Face& qf = q.face(d.face_proj(f));
    const auto es = d.face_edges(f);
    std::vector<Side> sides;
    for (int k = 0; k < 3; ++k) sides.push_back({edge_index.at(es[k]), qf.sides[k].forward, 2});
    out.AddFace(std::move(sides), "f" + std::to_string(out.num_faces()));
    ball.face_projection.push_back(d.face_proj(f));
  }
  ball.base = 0;
  return ball;
}

bool VerifyCover(const DevelopedBall& ball) {
  for (int v = 0; v < ball.complex.num_vertices(); ++v) {
    if (!ball.interior(v)) continue;
    if (!IsIsomorphic(Link(ball.complex, v), Link(ball.quotient, ball.vertex_projection[v]))) {
      return false;
    }
  }
  return true;
}

bool ProjectionIsLocalIsomorphism(const DevelopedBall& ball) {
  for (int v = 0; v < ball.complex.num_vertices(); ++v) {
    if (!ball.interior(v)) continue;
    const LinkStructure up = LinkOf(ball.complex, v);
    const LinkStructure down = LinkOf(ball.quotient, ball.vertex_projection[v]);
    if (up.ends.size() != down.ends.size() || up.corners.size() != down.corners.size()) {
      return false;
    }
    std::set<std::pair<int, EdgeEnd>> ends;
    for (const auto& [e, end] : up.ends) ends.insert({ball.edge_projection[e], end});
    std::set<std::pair<int, EdgeEnd>> want(down.ends.begin(), down.ends.end());
    if (ends != want) return false;
    std::set<std::pair<int, int>> corners;
    for (const auto& [f, i] : up.corners) corners.insert({ball.face_projection[f], i});
    std::set<std::pair<int, int>> want_corners(down.corners.begin(), down.corners.end());
    if (corners != want_corners) return false;
    // Link edges must join the images of their ends.
    for (size_t k = 0; k < up.corners.size(); ++k) {
      const MetricEdge& le = up.graph.edge(static_cast<int>(k));
      const auto [fu, iu] = up.corners[k];
      const auto it = std::find(down.corners.begin(), down.corners.end(),
                                std::make_pair(ball.face_projection[fu], iu));
      const MetricEdge& de = down.graph.edge(static_cast<int>(it - down.corners.begin()));
      auto image = [&](int lv) {
        const auto [e, end] = up.ends[lv];
        return down.EndIndex(ball.edge_projection[e], end);
      };
      if (image(le.u) != de.u || image(le.v) != de.v) return false;
    }
  }
  return true;
}

namespace {

struct DiskSearch {
  const std::vector<std::vector<int>>& adj;
  const std::set<std::array<int, 3>>& triangles;
  std::vector<LatticePoint> order;
  std::map<LatticePoint, int> slot;  // lattice point -> index in order
  std::vector<int> image;
  std::vector<bool> used;

  bool HasTriangle(int a, int b, int c) const {
    std::array<int, 3> t = {a, b, c};
    std::sort(t.begin(), t.end());
    return triangles.count(t) > 0;
  }

  static std::vector<LatticePoint> Neighbors(LatticePoint p) {
    return {{p.a + 1, p.b}, {p.a, p.b + 1}, {p.a - 1, p.b + 1},
            {p.a - 1, p.b}, {p.a, p.b - 1}, {p.a + 1, p.b - 1}};
  }

  int Placed(LatticePoint p, size_t k) const {
    auto it = slot.find(p);
    if (it == slot.end() || static_cast<size_t>(it->second) >= k) return -1;
    return image[it->second];
  }

  bool Place(size_t k) {
    if (k == order.size()) return true;
    const LatticePoint p = order[k];
    const auto nbrs = Neighbors(p);
    std::vector<int> placed(6);
    for (int i = 0; i < 6; ++i) placed[i] = Placed(nbrs[i], k);
    // Candidates from a placed lattice triangle, else from a placed neighbour.
    std::vector<int> candidates;
    bool seeded = false;
    for (int i = 0; i < 6 && !seeded; ++i) {
      const int a = placed[i], b = placed[(i + 1) % 6];
      if (a < 0 || b < 0) continue;
      for (int w : adj[a]) {
        if (HasTriangle(a, b, w)) candidates.push_back(w);
      }
      seeded = true;
    }
    for (int i = 0; i < 6 && !seeded; ++i) {
      if (placed[i] < 0) continue;
      candidates = adj[placed[i]];
      seeded = true;
    }
    for (int w : candidates) {
      if (used[w]) continue;
      bool ok = true;
      for (int i = 0; i < 6 && ok; ++i) {
        if (placed[i] < 0) continue;
        ok = std::binary_search(adj[w].begin(), adj[w].end(), placed[i]);
        const int next = placed[(i + 1) % 6];
        if (ok && next >= 0) ok = HasTriangle(w, placed[i], next);
      }
      if (!ok) continue;
      image[k] = w;
      used[w] = true;
      if (Place(k + 1)) return true;
      used[w] = false;
    }
    return false;
  }
};

int HexNorm(LatticePoint p) { return std::max({std::abs(p.a), std::abs(p.b), std::abs(p.a + p.b)}); }

}  // namespace

int FlatDiskRadius(const DevelopedBall& ball, int v) {
  const ShapeComplex& c = ball.complex;
  if (v < 0 || v >= c.num_vertices() || !ball.interior(v)) return 0;
  const auto adj = Adjacency(c);
  std::set<std::array<int, 3>> triangles;
  for (const Face& f : c.faces()) {
    std::array<int, 3> t = {c.Tail(f.sides[0]), c.Tail(f.sides[1]), c.Tail(f.sides[2])};
    std::sort(t.begin(), t.end());
    triangles.insert(t);
  }
  // Distance from v to the frontier bounds the disk.
  std::vector<int> dist(c.num_vertices(), -1);
  std::queue<int> q;
  dist[v] = 0;
  q.push(v);
  int bound = -1;
  while (!q.empty() && bound < 0) {
    const int x = q.front();
    q.pop();
    if (ball.frontier[x]) {
      bound = dist[x];
      break;
    }
    for (int y : adj[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  if (bound < 0) bound = 0;

  int best = 0;
  for (int r = 1; r <= bound; ++r) {
    DiskSearch s{adj, triangles, {}, {}, {}, {}};
    std::vector<LatticePoint> points;
    for (int a = -r; a <= r; ++a) {
      for (int b = -r; b <= r; ++b) {
        if (HexNorm({a, b}) <= r) points.push_back({a, b});
      }
    }
    // Greedy spiral: next is the point with most placed neighbours.
    std::set<LatticePoint> placed;
    s.order.push_back({0, 0});
    placed.insert({0, 0});
    while (s.order.size() < points.size()) {
      LatticePoint pick{};
      int most = -1;
      for (const LatticePoint& p : points) {
        if (placed.count(p)) continue;
        int n = 0;
        for (const LatticePoint& u : DiskSearch::Neighbors(p)) n += placed.count(u);
        if (n > most) {
          most = n;
          pick = p;
        }
      }
      s.order.push_back(pick);
      placed.insert(pick);
    }
    for (size_t k = 0; k < s.order.size(); ++k) s.slot[s.order[k]] = static_cast<int>(k);
    s.image.assign(s.order.size(), -1);
    s.used.assign(c.num_vertices(), false);
    s.image[0] = v;
    s.used[v] = true;
    if (!s.Place(1)) break;
    best = r;
  }
  return best;
}

std::string BallToText(const DevelopedBall& ball) {
  std::ostringstream out;
  out << ComplexToText(ball.complex);
  out << "projection " << ball.quotient.name() << " base " << ball.complex.vertex_id(ball.base)
      << " radius " << ball.radius << "\n";
  for (int v = 0; v < ball.complex.num_vertices(); ++v) {
    out << "  vertex " << ball.complex.vertex_id(v) << " "
        << ball.quotient.vertex_id(ball.vertex_projection[v]) << " distance "
        << ball.distance[v] << (ball.frontier[v] ? " frontier" : "") << "\n";
  }
  for (int e = 0; e < ball.complex.num_edges(); ++e) {
    out << "  edge " << ball.complex.edge(e).id << " "
        << ball.quotient.edge(ball.edge_projection[e]).id << "\n";
  }
  for (int f = 0; f < ball.complex.num_faces(); ++f) {
    out << "  face " << ball.complex.face(f).id << " "
        << ball.quotient.face(ball.face_projection[f]).id << "\n";
  }
  return out.str();
}

}  // namespace chambers
