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

#include "chambers/surgery.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "chambers/canonical.h"
#include "chambers/error.h"
#include "chambers/graph_metrics.h"
#include "chambers/plane.h"
#include "chambers/rank.h"

namespace chambers {

std::vector<std::vector<int>> DisjointEdgeSets(const MetricGraph& g, int k) {
  if (k < 0) throw DomainError("k must be non-negative");
  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  std::vector<int> covered(g.num_vertices(), 0);
  std::function<void(int)> pick = [&](int from) {
    if (static_cast<int>(chosen.size()) == k) {
      out.push_back(chosen);
      return;
    }
    for (int e = from; e < g.num_edges(); ++e) {
      const MetricEdge& me = g.edge(e);
      if (covered[me.u] || covered[me.v]) continue;
      ++covered[me.u];
      ++covered[me.v];
      chosen.push_back(e);
      pick(e + 1);
      chosen.pop_back();
      --covered[me.u];
      --covered[me.v];
    }
  };
  pick(0);
  return out;
}

std::vector<int> DistanceProfile(const MetricGraph& g,
                                 const std::vector<int>& edges) {
  std::vector<int> profile;
  for (size_t i = 0; i < edges.size(); ++i) {
    const MetricEdge& a = g.edge(edges[i]);
    const std::vector<int> from_u = HopDistances(g, a.u);
    const std::vector<int> from_v = HopDistances(g, a.v);
    for (size_t j = i + 1; j < edges.size(); ++j) {
      const MetricEdge& b = g.edge(edges[j]);
      int best = -1;
      for (int x : {b.u, b.v}) {
        for (const std::vector<int>* d : {&from_u, &from_v}) {
          const int h = (*d)[x];
          if (h != kUnreachable && (best < 0 || h < best)) best = h;
        }
      }
      if (best == 0) throw DomainError("edges share an endpoint");
      profile.push_back(best);
    }
  }
  std::sort(profile.begin(), profile.end());
  return profile;
}

RemovalClassification ClassifyRemovals(int q, int k) {
  const MetricGraph h = IncidenceGraph(q);
  RemovalClassification out;
  out.order = q;
  out.removed = k;
  const std::vector<std::vector<int>> sets = DisjointEdgeSets(h, k);
  out.num_sets = sets.size();

  const AutomorphismGroup aut = ComputeAutomorphisms(h);
  out.automorphism_order = aut.order;
  // Edge permutation induced by each vertex automorphism.
  std::map<std::pair<int, int>, int> edge_of;
  for (int e = 0; e < h.num_edges(); ++e) {
    edge_of[{h.edge(e).u, h.edge(e).v}] = e;
  }
  std::map<std::vector<int>, size_t> index;
  for (size_t i = 0; i < sets.size(); ++i) index[sets[i]] = i;
  std::vector<size_t> parent(sets.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const Permutation& gamma : aut.generators) {
    std::vector<int> edge_image(h.num_edges());
    for (int e = 0; e < h.num_edges(); ++e) {
      const int a = gamma[h.edge(e).u], b = gamma[h.edge(e).v];
      auto it = edge_of.find({a, b});
      if (it == edge_of.end()) it = edge_of.find({b, a});
      edge_image[e] = it->second;
    }
    for (size_t i = 0; i < sets.size(); ++i) {
      std::vector<int> image;
      for (int e : sets[i]) image.push_back(edge_image[e]);
      std::sort(image.begin(), image.end());
      const size_t a = find(i), b = find(index.at(image));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<size_t, uint64_t> orbit_size;
  for (size_t i = 0; i < sets.size(); ++i) ++orbit_size[find(i)];

  std::vector<std::vector<int64_t>> types;
  for (auto [rep, size] : orbit_size) {
    RemovalClass c;
    c.edges = sets[rep];
    c.orbit_size = size;
    c.graph = h.WithoutEdges(c.edges);
    c.distance_profile = DistanceProfile(h, c.edges);
    const std::vector<int64_t> form = CanonicalForm(c.graph);
    auto it = std::find(types.begin(), types.end(), form);
    c.isomorphism_type = static_cast<int>(it - types.begin());
    if (it == types.end()) types.push_back(form);
    out.classes.push_back(std::move(c));
  }
  out.num_isomorphism_types = static_cast<int>(types.size());
  return out;
}

const std::vector<CatalogGraph>& GraphCatalog() {
  static const std::vector<CatalogGraph> catalog = [] {
    const RemovalClassification cls = ClassifyRemovals(2, 3);
    const std::map<int, int> spectrum_g2 = {{2, 8}, {4, 2}, {6, 2}};
    const std::map<int, int> spectrum_g3 = {{2, 8}, {4, 3}, {8, 1}};
    std::vector<CatalogGraph> out;
    for (const RemovalClass& c : cls.classes) {
      const std::vector<int>& p = c.distance_profile;
      std::string name;
      if (p == std::vector<int>{1, 1, 1}) {
        name = "G1";
      } else if (p == std::vector<int>{1, 2, 2}) {
        name = "G4";
      } else if (p == std::vector<int>{1, 1, 2}) {
        const auto spectrum = ComputeLengthSpectrum(c.graph).counts;
        if (spectrum == spectrum_g2) name = "G2";
        if (spectrum == spectrum_g3) name = "G3";
      } else if (p == std::vector<int>{2, 2, 2}) {
        name = RootCensus(c.graph).count(Rational(1)) ? "G6" : "G5";
      }
      if (name.empty()) throw DomainError("unexpected removal class");
      MetricGraph g = c.graph;
      g.set_name(name);
      out.push_back({name, std::move(g), c.edges, c.distance_profile});
    }
    std::sort(out.begin(), out.end(),
              [](const CatalogGraph& a, const CatalogGraph& b) {
                return a.name < b.name;
              });
    return out;
  }();
  return catalog;
}

const MetricGraph& CatalogGraphByName(const std::string& name) {
  for (const CatalogGraph& c : GraphCatalog()) {
    if (c.name == name) return c.graph;
  }
  throw DomainError("no catalog graph named " + name);
}

}  // namespace chambers
