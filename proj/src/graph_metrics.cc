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

#include "chambers/graph_metrics.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

namespace chambers {

std::vector<int> MetricDistances(const MetricGraph& g, int source,
                                 int skip_edge) {
  std::vector<int> dist(g.num_vertices(), kUnreachable);
  using Item = std::pair<int, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[source] = 0;
  pq.push({0, source});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d != dist[v]) continue;
    for (int e : g.incident(v)) {
      if (e == skip_edge) continue;
      const MetricEdge& me = g.edge(e);
      const int w = me.other(v);
      const int nd = d + me.length;
      if (dist[w] == kUnreachable || nd < dist[w]) {
        dist[w] = nd;
        pq.push({nd, w});
      }
    }
  }
  return dist;
}

std::vector<int> HopDistances(const MetricGraph& g, int source) {
  std::vector<int> dist(g.num_vertices(), kUnreachable);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int e : g.incident(v)) {
      const int w = g.edge(e).other(v);
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

bool IsConnected(const MetricGraph& g) {
  if (g.num_vertices() == 0) return true;
  const std::vector<int> d = HopDistances(g, 0);
  return std::find(d.begin(), d.end(), kUnreachable) == d.end();
}

namespace {

std::optional<int> GirthWithLengths(const MetricGraph& g,
                                    const std::function<int(int)>& length) {
  std::optional<int> best;
  for (int e = 0; e < g.num_edges(); ++e) {
    const MetricEdge& me = g.edge(e);
    int cycle = 0;
    if (me.is_loop()) {
      cycle = length(e);
    } else {
      // Dijkstra in g - e between the endpoints, with the given lengths.
      std::vector<int> dist(g.num_vertices(), kUnreachable);
      using Item = std::pair<int, int>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
      dist[me.u] = 0;
      pq.push({0, me.u});
      while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d != dist[v]) continue;
        if (v == me.v) break;
        for (int f : g.incident(v)) {
          if (f == e) continue;
          const int w = g.edge(f).other(v);
          const int nd = d + length(f);
          if (dist[w] == kUnreachable || nd < dist[w]) {
            dist[w] = nd;
            pq.push({nd, w});
          }
        }
      }
      if (dist[me.v] == kUnreachable) continue;
      cycle = length(e) + dist[me.v];
    }
    if (!best || cycle < *best) best = cycle;
  }
  return best;
}

}  // namespace

std::optional<int> Girth(const MetricGraph& g) {
  return GirthWithLengths(g, [&g](int e) { return g.edge(e).length; });
}

std::optional<int> CombinatorialGirth(const MetricGraph& g) {
  return GirthWithLengths(g, [](int) { return 1; });
}

LengthSpectrum ComputeLengthSpectrum(const MetricGraph& g) {
  LengthSpectrum out;
  std::vector<bool> used(g.num_edges(), false);
  auto is_branch = [&g](int v) { return g.valency(v) != 2; };

  // Walk from vertex `from` along edge `e` until a branch vertex is reached.
  auto walk = [&](int from, int e) {
    int total = 0;
    int v = from;
    while (true) {
      used[e] = true;
      total += g.edge(e).length;
      v = g.edge(e).other(v);
      if (is_branch(v)) break;
      const std::vector<int>& inc = g.incident(v);
      const int next = inc[0] == e ? inc[1] : inc[0];
      if (used[next]) break;
      e = next;
    }
    return total;
  };

  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!is_branch(v)) continue;
    for (int e : g.incident(v)) {
      if (used[e]) continue;
      ++out.counts[walk(v, e)];
    }
  }
  // Whatever is left lies on cycles made of valency-2 vertices only.
  for (int e = 0; e < g.num_edges(); ++e) {
    if (used[e]) continue;
    out.has_bare_cycle = true;
    ++out.counts[walk(g.edge(e).u, e)];
  }
  return out;
}

UnitSubdivision SubdivideToUnit(const MetricGraph& g) {
  UnitSubdivision out;
  out.graph.set_name(g.name());
  for (int v = 0; v < g.num_vertices(); ++v) {
    out.graph.AddVertex(g.vertex_id(v));
    out.original_vertex.push_back(v);
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    const MetricEdge& me = g.edge(e);
    int prev = me.u;
    for (int k = 1; k <= me.length; ++k) {
      int next = me.v;
      if (k < me.length) {
        next = out.graph.AddVertex(me.id + "#" + std::to_string(k));
        out.original_vertex.push_back(-1);
      }
      std::string id = me.length == 1 ? me.id : me.id + "/" + std::to_string(k);
      out.graph.AddEdge(prev, next, 1, std::move(id));
      out.edge_origin.push_back(e);
      prev = next;
    }
  }
  return out;
}

std::vector<int> BranchVertices(const MetricGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.valency(v) >= 3) out.push_back(v);
  }
  return out;
}

}  // namespace chambers
