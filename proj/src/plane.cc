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

#include "chambers/plane.h"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "chambers/canonical.h"
#include "chambers/error.h"
#include "chambers/graph_metrics.h"

namespace chambers {
namespace {

bool IsPrime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

// Nonzero vectors of F_q^3 whose first nonzero coordinate is 1.
std::vector<std::array<int, 3>> NormalizedVectors(int q) {
  std::vector<std::array<int, 3>> out;
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      for (int z = 0; z < q; ++z) {
        const int lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead == 1) out.push_back({x, y, z});
      }
    }
  }
  return out;
}

}  // namespace

MetricGraph IncidenceGraph(int q) {
  if (!IsPrime(q)) {
    throw DomainError("incidence graph needs a prime order, got " +
                      std::to_string(q));
  }
  const auto vecs = NormalizedVectors(q);
  MetricGraph g("PG2_" + std::to_string(q));
  for (size_t i = 0; i < vecs.size(); ++i) g.AddVertex("p" + std::to_string(i));
  for (size_t i = 0; i < vecs.size(); ++i) g.AddVertex("l" + std::to_string(i));
  const int n = static_cast<int>(vecs.size());
  for (int p = 0; p < n; ++p) {
    for (int l = 0; l < n; ++l) {
      const auto& a = vecs[p];
      const auto& b = vecs[l];
      if ((a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % q == 0) {
        g.AddEdge(p, n + l, 2, "i" + std::to_string(g.num_edges()));
      }
    }
  }
  return g;
}

std::optional<int> ProjectiveOrder(int num_vertices) {
  for (int q = 1; 2 * (q * q + q + 1) <= num_vertices; ++q) {
    if (2 * (q * q + q + 1) == num_vertices) return q;
  }
  return std::nullopt;
}

std::string BuildingCertificate::Describe() const {
  std::ostringstream out;
  out << "order=" << order << (regular ? "" : " not-regular")
      << (vertex_count ? "" : " wrong-vertex-count")
      << (girth ? "" : " short-cycle") << (bipartite ? "" : " not-bipartite")
      << (lengths ? "" : " non-unit-angles") << (thin ? " thin" : "");
  return out.str();
}

BuildingCertificate InspectBuilding(const MetricGraph& g) {
  BuildingCertificate cert;
  const int n = g.num_vertices();
  cert.lengths = std::all_of(g.edges().begin(), g.edges().end(),
                             [](const MetricEdge& e) { return e.length == 2; });
  const std::optional<int> q = ProjectiveOrder(n);
  cert.vertex_count = q.has_value();
  if (q) {
    cert.order = *q;
  } else if (n > 0) {
    cert.order = g.valency(0) - 1;
  }
  cert.thin = cert.order == 1;
  cert.regular = n > 0;
  for (int v = 0; v < n; ++v) {
    cert.regular = cert.regular && g.valency(v) == cert.order + 1;
  }
  const std::optional<int> comb = CombinatorialGirth(g);
  cert.girth = !comb || *comb >= 6;

  cert.side.assign(n, -1);
  cert.bipartite = true;
  for (int s = 0; s < n; ++s) {
    if (cert.side[s] >= 0) continue;
    cert.side[s] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int e : g.incident(v)) {
        const int w = g.edge(e).other(v);
        if (cert.side[w] < 0) {
          cert.side[w] = 1 - cert.side[v];
          queue.push(w);
        } else if (cert.side[w] == cert.side[v]) {
          cert.bipartite = false;
        }
      }
    }
  }
  return cert;
}

std::optional<BuildingCertificate> IsBuildingA2(const MetricGraph& g) {
  BuildingCertificate cert = InspectBuilding(g);
  if (!cert.passes()) return std::nullopt;
  return cert;
}

CompletionResult CompleteIntoBuilding(const MetricGraph& g) {
  for (const MetricEdge& e : g.edges()) {
    if (e.length != 2) throw DomainError("completion needs all edges of length 2");
  }
  const int n = g.num_vertices();
  const std::optional<int> q = ProjectiveOrder(n);
  if (!q) {
    throw DomainError("vertex count " + std::to_string(n) +
                      " is not that of a projective plane incidence graph");
  }
  CompletionResult result;
  result.order = *q;

  std::vector<int> deficit(n);
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) {
    deficit[v] = *q + 1 - g.valency(v);
    if (deficit[v] < 0) return result;
  }
  for (const MetricEdge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }

  auto hops_at_least_five = [&](int s, int t) {
    std::vector<int> dist(n, -1);
    std::queue<int> queue;
    dist[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      if (dist[v] >= 4) continue;
      for (int w : adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          if (w == t) return false;
          queue.push(w);
        }
      }
    }
    return true;
  };

  std::vector<std::pair<int, int>> added;
  std::function<void(int, int)> search = [&](int last_v, int last_w) {
    int v = 0;
    while (v < n && deficit[v] == 0) ++v;
    if (v == n) {
      MetricGraph full = g;
      for (auto [a, b] : added) full.AddEdge(a, b, 2);
      if (IsBuildingA2(full)) {
        std::vector<std::pair<int, int>> sorted = added;
        std::sort(sorted.begin(), sorted.end());
        result.completions.push_back(std::move(sorted));
      }
      return;
    }
    const int w_min = v == last_v ? last_w + 1 : 0;
    for (int w = w_min; w < n; ++w) {
      if (w == v || deficit[w] == 0) continue;
      if (!hops_at_least_five(v, w)) continue;
      --deficit[v];
      --deficit[w];
      adj[v].push_back(w);
      adj[w].push_back(v);
      added.push_back({std::min(v, w), std::max(v, w)});
      search(v, w);
      added.pop_back();
      adj[v].pop_back();
      adj[w].pop_back();
      ++deficit[v];
      ++deficit[w];
    }
  };
  search(-1, -1);
  std::sort(result.completions.begin(), result.completions.end());
  result.completions.erase(
      std::unique(result.completions.begin(), result.completions.end()),
      result.completions.end());

  // Orbits under Aut(g).
  const size_t count = result.completions.size();
  std::map<std::vector<std::pair<int, int>>, size_t> index;
  for (size_t i = 0; i < count; ++i) index[result.completions[i]] = i;
  std::vector<size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  const AutomorphismGroup aut = ComputeAutomorphisms(g);
  for (const Permutation& gamma : aut.generators) {
    for (size_t i = 0; i < count; ++i) {
      std::vector<std::pair<int, int>> image;
      for (auto [a, b] : result.completions[i]) {
        image.push_back({std::min(gamma[a], gamma[b]), std::max(gamma[a], gamma[b])});
      }
      std::sort(image.begin(), image.end());
      auto it = index.find(image);
      if (it == index.end()) continue;  // cannot happen for a true automorphism
      const size_t a = find(i), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<size_t, size_t> sizes;
  for (size_t i = 0; i < count; ++i) ++sizes[find(i)];
  for (auto [rep, size] : sizes) {
    result.class_representatives.push_back(rep);
    result.class_sizes.push_back(size);
  }
  return result;
}

}  // namespace chambers
