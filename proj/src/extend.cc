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

#include "chambers/extend.h"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "chambers/error.h"
#include "chambers/graph_metrics.h"

namespace chambers {
namespace {

ShapeComplex TriangulatedCopy(const ShapeComplex& c) {
  return IsTriangulated(c) ? c : Triangulate(c).complex;
}

int OtherEnd(const ExtensionInvariant& inv, int x) {
  const Type0Edge& t = inv.type0[inv.type0_of[x]];
  return t.a == x ? t.b : t.a;
}

// Hop distance in a small adjacency-list graph, or -1 if above `limit`.
int BoundedDistance(const std::vector<std::vector<int>>& adj, int from, int to, int limit) {
  if (from == to) return 0;
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[from] = 0;
  q.push(from);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    if (dist[x] == limit) continue;
    for (int y : adj[x]) {
      if (dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      if (y == to) return dist[y];
      q.push(y);
    }
  }
  return -1;
}

SixWalk MakeWalk(const std::array<int, 6>& seq,
                 const std::map<std::pair<int, int>, int>& type1_index,
                 const ExtensionInvariant& inv) {
  std::array<std::array<int, 6>, 6> variants;
  for (int r = 0; r < 3; ++r) {
    for (int i = 0; i < 6; ++i) variants[r][i] = seq[(i + 2 * r) % 6];
  }
  const std::array<int, 6> rev = {seq[5], seq[4], seq[3], seq[2], seq[1], seq[0]};
  for (int r = 0; r < 3; ++r) {
    for (int i = 0; i < 6; ++i) variants[3 + r][i] = rev[(i + 2 * r) % 6];
  }
  SixWalk w;
  w.sequence = *std::min_element(variants.begin(), variants.end());
  for (int i = 0; i < 3; ++i) {
    w.type0[i] = inv.type0_of[w.sequence[2 * i]];
    const int b = w.sequence[2 * i + 1], a = w.sequence[(2 * i + 2) % 6];
    w.type1[i] = type1_index.at({std::min(a, b), std::max(a, b)});
  }
  return w;
}

class FamilyBacktrack {
 public:
  FamilyBacktrack(const ShapeComplex& t, const ExtensionInvariant& inv,
                  const std::vector<SixWalk>& walks)
      : inv_(inv), walks_(walks) {
    for (const Type0Edge& e : inv.type0) budget_.push_back(e.label);
    walks_through_.resize(inv.type0.size());
    for (size_t w = 0; w < walks.size(); ++w) {
      std::set<int> seen;
      for (int e : walks[w].type0) {
        if (seen.insert(e).second) walks_through_[e].push_back(static_cast<int>(w));
      }
    }
    // Current links, extended by the type-1 edges chosen so far.
    link_of_vertex_.assign(t.num_vertices(), -1);
    for (const InvariantVertex& x : inv.vertices) {
      if (link_of_vertex_[x.vertex] >= 0) continue;
      link_of_vertex_[x.vertex] = static_cast<int>(links_.size());
      const MetricGraph g = Link(t, x.vertex);
      std::vector<std::vector<int>> adj(g.num_vertices());
      for (const MetricEdge& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
      }
      links_.push_back(std::move(adj));
    }
  }

  std::vector<CycleFamily> Run() {
    Search(-1, 0);
    return std::move(found_);
  }

 private:
  void Search(int pivot, size_t min_walk) {
    int next = -1;
    for (size_t e = 0; e < budget_.size(); ++e) {
      if (budget_[e] > 0) {
        next = static_cast<int>(e);
        break;
      }
    }
    if (next < 0) {
      CycleFamily f;
      f.walks = chosen_;
      std::sort(f.walks.begin(), f.walks.end());
      found_.push_back(std::move(f));
      return;
    }
    // Walks chosen for one pivot come in non-decreasing order, so each
    // multiset is produced once.
    if (next != pivot) min_walk = 0;
    for (int w : walks_through_[next]) {
      if (static_cast<size_t>(w) < min_walk) continue;
      const SixWalk& walk = walks_[w];
      bool fits = true;
      for (int e : walk.type0) --budget_[e];
      for (int e : walk.type0) fits = fits && budget_[e] >= 0;
      std::vector<std::pair<int, std::pair<int, int>>> added;
      for (int i = 0; i < 3 && fits; ++i) {
        const Type1Edge& t = inv_.type1[walk.type1[i]];
        const int vertex = link_of_vertex_[t.vertex];
        auto& adj = links_[vertex];
        const int u = inv_.vertices[t.a].link_vertex, v = inv_.vertices[t.b].link_vertex;
        const int d = BoundedDistance(adj, u, v, 4);
        if (d >= 0) {
          fits = false;
          break;
        }
        adj[u].push_back(v);
        adj[v].push_back(u);
        added.push_back({vertex, {u, v}});
      }
      if (fits) {
        chosen_.push_back(w);
        Search(next, w);
        chosen_.pop_back();
      }
      for (auto it = added.rbegin(); it != added.rend(); ++it) {
        auto& adj = links_[it->first];
        adj[it->second.first].pop_back();
        adj[it->second.second].pop_back();
      }
      for (int e : walk.type0) ++budget_[e];
    }
  }

  const ExtensionInvariant& inv_;
  const std::vector<SixWalk>& walks_;
  std::vector<int> budget_;
  std::vector<std::vector<int>> walks_through_;
  std::vector<int> link_of_vertex_;
  std::vector<std::vector<std::vector<int>>> links_;
  std::vector<int> chosen_;
  std::vector<CycleFamily> found_;
};

}  // namespace

MetricGraph ExtensionInvariant::ToGraph() const {
  MetricGraph g("extension_invariant");
  for (size_t i = 0; i < vertices.size(); ++i) g.AddVertex("x" + std::to_string(i));
  for (size_t i = 0; i < type0.size(); ++i) {
    const int e = g.AddEdge(type0[i].a, type0[i].b, 1, "t0_" + std::to_string(i));
    g.mutable_edge(e).attributes["type"] = "0";
    g.mutable_edge(e).attributes["label"] = std::to_string(type0[i].label);
  }
  for (size_t i = 0; i < type1.size(); ++i) {
    const int e = g.AddEdge(type1[i].a, type1[i].b, 1, "t1_" + std::to_string(i));
    g.mutable_edge(e).attributes["type"] = "1";
  }
  return g;
}

ExtensionInvariant ComputeExtensionInvariant(const ShapeComplex& c) {
  const ShapeComplex t = TriangulatedCopy(c);
  ExtensionInvariant inv;
  std::vector<LinkStructure> links;
  for (int v = 0; v < t.num_vertices(); ++v) {
    links.push_back(LinkOf(t, v));
    const std::optional<int> g = Girth(links.back().graph);
    if (g && *g < 12) {
      throw DomainError("link of " + t.vertex_id(v) + " has girth below 2 pi");
    }
    inv.vertex_order.push_back(ProjectiveOrder(links.back().graph.num_vertices()));
    if (inv.vertex_order.back()) inv.order = std::max(inv.order, *inv.vertex_order.back());
  }
  if (inv.order == 0) throw DomainError("no vertex link has a projective order");

  const std::vector<int> valency = t.FaceValency();
  std::set<int> carrying;
  for (int e = 0; e < t.num_edges(); ++e) {
    if (valency[e] > inv.order + 1) {
      inv.warnings.push_back("edge " + t.edge(e).id + " lies on more than q*+1 faces");
    }
    if (valency[e] > inv.order) continue;
    Type0Edge t0;
    t0.edge = e;
    t0.label = inv.order - valency[e] + 1;
    for (EdgeEnd end : {EdgeEnd::kSource, EdgeEnd::kTarget}) {
      InvariantVertex x;
      x.edge = e;
      x.end = end;
      x.vertex = end == EdgeEnd::kSource ? t.edge(e).src : t.edge(e).dst;
      x.link_vertex = links[x.vertex].EndIndex(e, end);
      (end == EdgeEnd::kSource ? t0.a : t0.b) = static_cast<int>(inv.vertices.size());
      inv.vertices.push_back(x);
      inv.type0_of.push_back(static_cast<int>(inv.type0.size()));
      carrying.insert(x.vertex);
    }
    inv.type0.push_back(t0);
  }
  for (int v : carrying) {
    if (!inv.vertex_order[v]) {
      throw DomainError("vertex " + t.vertex_id(v) +
                        " carries deficient edges but its link has no projective order");
    }
    if (*inv.vertex_order[v] != inv.order) {
      inv.warnings.push_back("link of " + t.vertex_id(v) + " has order " +
                             std::to_string(*inv.vertex_order[v]) + ", not q*");
    }
  }
  for (int v = 0; v < t.num_vertices(); ++v) {
    if (!carrying.count(v) && !inv.vertex_order[v]) {
      inv.warnings.push_back("link of " + t.vertex_id(v) + " has no projective order");
    }
  }

  std::map<int, std::vector<int>> at_vertex;
  for (size_t i = 0; i < inv.vertices.size(); ++i) {
    at_vertex[inv.vertices[i].vertex].push_back(static_cast<int>(i));
  }
  for (const auto& [v, xs] : at_vertex) {
    const MetricGraph& link = links[v].graph;
    for (size_t i = 0; i < xs.size(); ++i) {
      const std::vector<int> hops = HopDistances(link, inv.vertices[xs[i]].link_vertex);
      for (size_t j = i + 1; j < xs.size(); ++j) {
        const int d = hops[inv.vertices[xs[j]].link_vertex];
        if (d == kUnreachable || d >= 5) inv.type1.push_back({xs[i], xs[j], v});
      }
    }
  }
  return inv;
}

std::vector<SixWalk> AlternatingSixCycles(const ExtensionInvariant& inv) {
  std::vector<std::vector<int>> type1_adj(inv.vertices.size());
  std::map<std::pair<int, int>, int> type1_index;
  for (size_t i = 0; i < inv.type1.size(); ++i) {
    const Type1Edge& t = inv.type1[i];
    type1_adj[t.a].push_back(t.b);
    type1_adj[t.b].push_back(t.a);
    type1_index[{std::min(t.a, t.b), std::max(t.a, t.b)}] = static_cast<int>(i);
  }
  std::set<SixWalk> walks;
  for (size_t a0 = 0; a0 < inv.vertices.size(); ++a0) {
    const int b0 = OtherEnd(inv, static_cast<int>(a0));
    for (int a1 : type1_adj[b0]) {
      const int b1 = OtherEnd(inv, a1);
      for (int a2 : type1_adj[b1]) {
        const int b2 = OtherEnd(inv, a2);
        if (!type1_index.count({std::min<int>(b2, a0), std::max<int>(b2, a0)})) continue;
        walks.insert(MakeWalk({static_cast<int>(a0), b0, a1, b1, a2, b2}, type1_index, inv));
      }
    }
  }
  return {walks.begin(), walks.end()};
}

FamilySearch SaturatedAmpleFamilies(const ShapeComplex& c) {
  FamilySearch s;
  s.triangulated = TriangulatedCopy(c);
  s.invariant = ComputeExtensionInvariant(s.triangulated);
  s.walks = AlternatingSixCycles(s.invariant);
  s.families = FamilyBacktrack(s.triangulated, s.invariant, s.walks).Run();
  std::sort(s.families.begin(), s.families.end(),
            [](const CycleFamily& x, const CycleFamily& y) { return x.walks < y.walks; });
  return s;
}

ShapeComplex BuildExtension(const FamilySearch& search, const CycleFamily& family) {
  ShapeComplex out = search.triangulated;
  const ExtensionInvariant& inv = search.invariant;
  int serial = 0;
  for (int w : family.walks) {
    const SixWalk& walk = search.walks.at(w);
    std::vector<Side> sides;
    for (int i = 0; i < 3; ++i) {
      const InvariantVertex& a = inv.vertices[walk.sequence[2 * i]];
      sides.push_back({a.edge, a.end == EdgeEnd::kSource, 2});
    }
    for (int i = 0; i < 3; ++i) {
      if (out.Head(sides[i]) != out.Tail(sides[(i + 1) % 3])) {
        throw DomainError("walk does not close up into a triangle");
      }
    }
    std::string id;
    do {
      id = "x" + std::to_string(serial++);
    } while (out.FindFace(id));
    out.AddFace(std::move(sides), id);
  }
  RequireValid(out);
  return out;
}

namespace {

ExtensionCount CountFromSearch(const FamilySearch& search) {
  ExtensionCount count;
  count.families = search.families.size();
  for (const CycleFamily& f : search.families) {
    const size_t added = f.walks.size();
    if (!count.missing_chambers || added < *count.missing_chambers) {
      count.missing_chambers = added;
    }
    ShapeComplex x = BuildExtension(search, f);
    const bool seen = std::any_of(
        count.extensions.begin(), count.extensions.end(),
        [&x](const ShapeComplex& y) { return FindComplexIsomorphism(x, y).has_value(); });
    if (!seen) count.extensions.push_back(std::move(x));
  }
  return count;
}

}  // namespace

ExtensionCount CountExtensions(const ShapeComplex& c) {
  return CountFromSearch(SaturatedAmpleFamilies(c));
}

Verdict IsBuildingWithChambersMissing(const ShapeComplex& c) {
  Verdict verdict;
  ExtensionCount count;
  try {
    const FamilySearch search = SaturatedAmpleFamilies(c);
    verdict.notes = search.invariant.warnings;
    count = CountFromSearch(search);
  } catch (const DomainError& e) {
    verdict.notes.push_back(e.what());
    return verdict;
  }
  verdict.families = count.families;
  if (count.extensions.empty()) return verdict;
  verdict.is_building_with_chambers_missing = true;
  verdict.witness = count.extensions.front();
  for (int v = 0; v < verdict.witness->num_vertices(); ++v) {
    verdict.certificates.push_back(InspectBuilding(Link(*verdict.witness, v)));
  }
  return verdict;
}

}  // namespace chambers
