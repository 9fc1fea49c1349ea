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
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>

#include "chambers/canonical.h"
#include "chambers/develop.h"
#include "chambers/error.h"
#include "chambers/graph_metrics.h"
#include "chambers/permutation_group.h"

namespace chambers {
namespace {

using Graph = std::vector<std::vector<int>>;

// Partial simplicial complex grown around vertex 0.
struct Ball {
  std::vector<std::set<int>> nbr;
  std::set<std::array<int, 3>> triangles;
  std::vector<bool> closed;
  std::vector<int> dist;

  int AddVertex(int d) {
    nbr.emplace_back();
    closed.push_back(false);
    dist.push_back(d);
    return static_cast<int>(nbr.size()) - 1;
  }
  bool HasTriangle(int a, int b, int c) const {
    std::array<int, 3> t = {a, b, c};
    std::sort(t.begin(), t.end());
    return triangles.count(t) > 0;
  }
  void AddTriangle(int a, int b, int c) {
    std::array<int, 3> t = {a, b, c};
    std::sort(t.begin(), t.end());
    triangles.insert(t);
    nbr[a].insert(b), nbr[b].insert(a);
    nbr[a].insert(c), nbr[c].insert(a);
    nbr[b].insert(c), nbr[c].insert(b);
  }
  // Link of v: its neighbours, adjacent when they span a triangle with v.
  std::pair<std::vector<int>, Graph> LinkOf(int v) const {
    std::vector<int> verts(nbr[v].begin(), nbr[v].end());
    Graph g(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) {
      for (size_t j = i + 1; j < verts.size(); ++j) {
        if (HasTriangle(v, verts[i], verts[j])) {
          g[i].push_back(static_cast<int>(j));
          g[j].push_back(static_cast<int>(i));
        }
      }
    }
    return {verts, g};
  }
};

class Prescriber {
 public:
  Prescriber(Graph link, std::vector<Permutation> automorphisms)
      : link_(std::move(link)), automorphisms_(std::move(automorphisms)) {
    for (size_t a = 0; a < link_.size(); ++a) {
      for (int b : link_[a]) adjacent_.insert({static_cast<int>(a), b});
    }
  }

  uint64_t nodes() const { return nodes_; }

  std::optional<Ball> Solve(int radius) {
    Ball ball;
    ball.AddVertex(0);
    if (radius == 0) return ball;
    return Search(ball, radius);
  }

 private:
  bool Adjacent(int a, int b) const { return adjacent_.count({a, b}) > 0; }

  // Injective maps of the partial link into the target link carrying edges to
  // edges. `full` marks partial-link vertices whose own link is final: their
  // neighbourhood must map onto the full neighbourhood of the image.
  void Embeddings(const Graph& p, const std::vector<bool>& full, bool first_only,
                  std::vector<std::vector<int>>& out) const {
    const int n = static_cast<int>(p.size());
    // Order: breadth-first within components, highest degree first.
    std::vector<int> order;
    std::vector<bool> seen(n, false);
    std::vector<int> by_degree(n);
    for (int i = 0; i < n; ++i) by_degree[i] = i;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&p](int a, int b) { return p[a].size() > p[b].size(); });
    for (int s : by_degree) {
      if (seen[s]) continue;
      std::queue<int> q;
      q.push(s);
      seen[s] = true;
      while (!q.empty()) {
        const int x = q.front();
        q.pop();
        order.push_back(x);
        for (int y : p[x]) {
          if (!seen[y]) {
            seen[y] = true;
            q.push(y);
          }
        }
      }
    }
    std::vector<int> map(n, -1);
    std::vector<bool> used(link_.size(), false);
    std::function<bool(size_t)> extend = [&](size_t k) -> bool {
      if (k == order.size()) {
        out.push_back(map);
        return first_only;
      }
      const int x = order[k];
      std::vector<int> candidates;
      int anchor = -1;
      for (int y : p[x]) {
        if (map[y] >= 0) {
          anchor = map[y];
          break;
        }
      }
      if (anchor >= 0) {
        candidates = link_[anchor];
      } else {
        for (size_t c = 0; c < link_.size(); ++c) candidates.push_back(static_cast<int>(c));
      }
      for (int c : candidates) {
        if (used[c]) continue;
        if (full[x] && link_[c].size() != p[x].size()) continue;
        bool ok = true;
        for (int y : p[x]) {
          if (map[y] >= 0 && !Adjacent(c, map[y])) ok = false;
        }
        if (!ok) continue;
        map[x] = c;
        used[c] = true;
        const bool stop = extend(k + 1);
        used[c] = false;
        map[x] = -1;
        if (stop) return true;
      }
      return false;
    };
    extend(0);
  }

  // Keeps one embedding per orbit of the target link's automorphism group.
  std::vector<std::vector<int>> UpToSymmetry(std::vector<std::vector<int>> maps) const {
    std::vector<std::vector<int>> kept;
    for (const auto& m : maps) {
      bool least = true;
      for (const Permutation& g : automorphisms_) {
        std::vector<int> moved(m.size());
        for (size_t i = 0; i < m.size(); ++i) moved[i] = g[m[i]];
        if (moved < m) {
          least = false;
          break;
        }
      }
      if (least) kept.push_back(m);
    }
    return kept;
  }

  std::vector<bool> FullMarks(const Ball& ball, const std::vector<int>& verts) const {
    std::vector<bool> full(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) full[i] = ball.closed[verts[i]];
    return full;
  }

  bool LinkEmbeds(const Ball& ball, int v) const {
    const auto [verts, g] = ball.LinkOf(v);
    if (verts.size() > link_.size()) return false;
    std::vector<std::vector<int>> found;
    Embeddings(g, FullMarks(ball, verts), true, found);
    return !found.empty();
  }

  std::optional<Ball> Search(const Ball& ball, int radius) {
    // Next vertex to close: lowest layer, then the most constrained link.
    int next = -1;
    size_t best_edges = 0;
    for (int v = 0; v < static_cast<int>(ball.nbr.size()); ++v) {
      if (ball.closed[v] || ball.dist[v] > radius - 1) continue;
      size_t edges = 0;
      for (const auto& row : ball.LinkOf(v).second) edges += row.size();
      if (next < 0 || ball.dist[v] < ball.dist[next] ||
          (ball.dist[v] == ball.dist[next] && edges > best_edges)) {
        next = v;
        best_edges = edges;
      }
    }
    if (next < 0) return ball;

    const auto [verts, partial] = ball.LinkOf(next);
    std::vector<std::vector<int>> maps;
    Embeddings(partial, FullMarks(ball, verts), false, maps);
    for (const auto& map : UpToSymmetry(std::move(maps))) {
      ++nodes_;
      Ball grown = ball;
      std::vector<int> target(link_.size(), -1);
      for (size_t i = 0; i < verts.size(); ++i) target[map[i]] = verts[i];
      // Unmatched link vertices become new vertices one layer further out.
      for (size_t c = 0; c < link_.size(); ++c) {
        if (target[c] < 0) {
          target[c] = grown.AddVertex(ball.dist[next] + 1);
          grown.nbr[next].insert(target[c]);
          grown.nbr[target[c]].insert(next);
        }
      }
      bool ok = true;
      for (size_t a = 0; a < link_.size() && ok; ++a) {
        for (int b : link_[a]) {
          if (static_cast<int>(a) > b) continue;
          const int x = target[a], y = target[b];
          if (grown.HasTriangle(next, x, y)) continue;
          if (grown.closed[x] || grown.closed[y]) {
            ok = false;
            break;
          }
          grown.AddTriangle(next, x, y);
        }
      }
      if (!ok) continue;
      grown.closed[next] = true;
      for (int u : grown.nbr[next]) {
        if (!grown.closed[u] && grown.dist[u] <= radius - 1 && !LinkEmbeds(grown, u)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (auto done = Search(grown, radius)) return done;
    }
    return std::nullopt;
  }

  Graph link_;
  std::vector<Permutation> automorphisms_;
  std::set<std::pair<int, int>> adjacent_;
  uint64_t nodes_ = 0;
};

ShapeComplex BallComplex(const Ball& ball, int radius) {
  ShapeComplex c("prescribed_ball" + std::to_string(radius));
  for (size_t v = 0; v < ball.nbr.size(); ++v) c.AddVertex("p" + std::to_string(v));
  std::map<std::pair<int, int>, int> edge_of;
  for (size_t a = 0; a < ball.nbr.size(); ++a) {
    for (int b : ball.nbr[a]) {
      if (static_cast<int>(a) < b) {
        edge_of[{static_cast<int>(a), b}] =
            c.AddEdge(static_cast<int>(a), b, "e" + std::to_string(edge_of.size()));
      }
    }
  }
  for (const auto& [a, b, d] : ball.triangles) {
    c.AddFace({{edge_of.at({a, b}), true, 2}, {edge_of.at({b, d}), true, 2},
               {edge_of.at({a, d}), false, 2}},
              "f" + std::to_string(c.num_faces()));
  }
  return c;
}

}  // namespace

PrescribeResult PrescribeLink(const MetricGraph& link, int radius) {
  if (radius < 0) throw DomainError("radius must be >= 0");
  const int n = link.num_vertices();
  Graph g(n);
  std::set<std::pair<int, int>> seen;
  for (const MetricEdge& e : link.edges()) {
    if (e.length != 2) throw DomainError("link edges must all have length 2");
    if (e.u == e.v) throw DomainError("link has a loop");
    if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second) {
      throw DomainError("link has parallel edges");
    }
    g[e.u].push_back(e.v);
    g[e.v].push_back(e.u);
  }
  const std::optional<int> girth = CombinatorialGirth(link);
  if (girth && *girth < 6) throw DomainError("link has a cycle shorter than 6 edges");

  const AutomorphismGroup aut = ComputeAutomorphisms(link);
  Prescriber search(std::move(g), EnumerateGroup(n, aut.generators));
  PrescribeResult result;
  for (int r = 0; r <= radius; ++r) {
    std::optional<Ball> ball = search.Solve(r);
    if (!ball) {
      result.sat = false;
      result.depth = r;
      result.nodes = search.nodes();
      return result;
    }
    if (r == radius) {
      result.sat = true;
      result.depth = radius;
      result.witness = BallComplex(*ball, radius);
    }
  }
  result.nodes = search.nodes();
  return result;
}

}  // namespace chambers
