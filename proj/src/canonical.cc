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

#include "chambers/canonical.h"

#include <algorithm>
#include <array>
#include <climits>
#include <map>
#include <numeric>
#include <utility>

#include "chambers/graph_metrics.h"

namespace chambers {
namespace {

constexpr int kNoJump = INT_MAX;

class Searcher {
 public:
  explicit Searcher(const ColoredGraph& g) : g_(g), n_(g.num_vertices) {
    adj_.resize(n_);
    for (const LabeledEdge& e : g.edges) {
      if (e.u == e.v) {
        adj_[e.u].push_back({e.u, 2 * e.label + 1});
      } else {
        adj_[e.u].push_back({e.v, 2 * e.label});
        adj_[e.v].push_back({e.u, 2 * e.label});
      }
    }
    colors_in_.assign(n_, 0);
    if (!g.vertex_color.empty()) colors_in_ = g.vertex_color;
  }

  CanonicalResult Run() {
    std::vector<int> start(n_);
    {
      std::vector<int64_t> sorted = colors_in_;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (int x = 0; x < n_; ++x) {
        start[x] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), colors_in_[x]) -
            sorted.begin());
      }
    }
    std::vector<int> path;
    if (n_ > 0) Search(Refine(start), path);
    CanonicalResult out;
    out.labeling = best_.labeling;
    out.certificate = best_.certificate;
    if (n_ == 0) out.certificate = {0, 0};
    out.generators = generators_;
    out.group_order = StabilizerChain(n_, generators_).Order();
    out.leaves_visited = leaves_;
    return out;
  }

 private:
  struct Leaf {
    Permutation labeling;
    std::vector<int64_t> certificate;
    std::vector<int> path;
    bool valid = false;
  };

  // Equitable refinement: colors become ranks of (color, neighbour profile)
  // until the number of cells stops growing.
  std::vector<int> Refine(std::vector<int> colors) const {
    int cells = Compress(colors);
    while (true) {
      std::vector<std::pair<int, std::vector<std::pair<int, int64_t>>>> keys(n_);
      for (int x = 0; x < n_; ++x) {
        keys[x].first = colors[x];
        auto& profile = keys[x].second;
        profile.reserve(adj_[x].size());
        for (auto [w, lab] : adj_[x]) profile.push_back({colors[w], lab});
        std::sort(profile.begin(), profile.end());
      }
      std::vector<int> order(n_);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&keys](int a, int b) { return keys[a] < keys[b]; });
      std::vector<int> next(n_);
      int rank = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && keys[order[i]] != keys[order[i - 1]]) ++rank;
        next[order[i]] = rank;
      }
      const int next_cells = n_ == 0 ? 0 : rank + 1;
      colors = std::move(next);
      if (next_cells == cells) break;
      cells = next_cells;
    }
    return colors;
  }

  static int Compress(std::vector<int>& colors) {
    std::vector<int> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int& c : colors) {
      c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) -
                           sorted.begin());
    }
    return static_cast<int>(sorted.size());
  }

  std::vector<int> Individualize(const std::vector<int>& colors, int v) const {
    std::vector<int> out(n_);
    for (int x = 0; x < n_; ++x) {
      out[x] = 2 * colors[x] + ((colors[x] == colors[v] && x != v) ? 1 : 0);
    }
    return Refine(std::move(out));
  }

  std::vector<int64_t> Certificate(const Permutation& pos) const {
    std::vector<int64_t> cert;
    cert.reserve(2 + n_ + 3 * g_.edges.size());
    cert.push_back(n_);
    std::vector<int64_t> by_pos(n_);
    for (int x = 0; x < n_; ++x) by_pos[pos[x]] = colors_in_[x];
    cert.insert(cert.end(), by_pos.begin(), by_pos.end());
    cert.push_back(static_cast<int64_t>(g_.edges.size()));
    std::vector<std::array<int64_t, 3>> triples;
    triples.reserve(g_.edges.size());
    for (const LabeledEdge& e : g_.edges) {
      int a = pos[e.u], b = pos[e.v];
      if (a > b) std::swap(a, b);
      triples.push_back({a, b, e.label});
    }
    std::sort(triples.begin(), triples.end());
    for (const auto& t : triples) cert.insert(cert.end(), t.begin(), t.end());
    return cert;
  }

  static int CommonPrefix(const std::vector<int>& a, const std::vector<int>& b) {
    int k = 0;
    while (k < static_cast<int>(std::min(a.size(), b.size())) && a[k] == b[k]) {
      ++k;
    }
    return k;
  }

  // Returns kNoJump, or the depth of the node that should resume its loop.
  int Search(const std::vector<int>& colors, std::vector<int>& path) {
    const int depth = static_cast<int>(path.size());
    std::vector<int> size(n_, 0);
    for (int c : colors) ++size[c];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    }
    if (target < 0) return AtLeaf(colors, path);

    std::vector<int> cell;
    for (int x = 0; x < n_; ++x) {
      if (colors[x] == target) cell.push_back(x);
    }
    std::vector<int> tried;
    for (int v : cell) {
      if (!tried.empty()) {
        std::vector<Permutation> fixing;
        for (const Permutation& gamma : generators_) {
          bool fixes = true;
          for (int p : path) fixes = fixes && gamma[p] == p;
          if (fixes) fixing.push_back(gamma);
        }
        if (!fixing.empty()) {
          const std::vector<int> orbit = OrbitLabels(n_, fixing);
          bool equivalent = false;
          for (int w : tried) equivalent = equivalent || orbit[w] == orbit[v];
          if (equivalent) continue;
        }
      }
      tried.push_back(v);
      path.push_back(v);
      const int jump = Search(Individualize(colors, v), path);
      path.pop_back();
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }

  int AtLeaf(const std::vector<int>& colors, const std::vector<int>& path) {
    ++leaves_;
    Leaf leaf{colors, Certificate(colors), path, true};
    if (!first_.valid) {
      first_ = leaf;
      best_ = leaf;
      return kNoJump;
    }
    if (leaf.certificate == first_.certificate) {
      AddAutomorphism(first_.labeling, leaf.labeling);
      return CommonPrefix(path, first_.path);
    }
    if (leaf.certificate == best_.certificate) {
      AddAutomorphism(best_.labeling, leaf.labeling);
      return CommonPrefix(path, best_.path);
    }
    if (leaf.certificate < best_.certificate) best_ = std::move(leaf);
    return kNoJump;
  }

  void AddAutomorphism(const Permutation& reference, const Permutation& other) {
    Permutation gamma = Compose(Inverse(reference), other);
    if (!IsIdentity(gamma)) generators_.push_back(std::move(gamma));
  }

  const ColoredGraph& g_;
  int n_;
  std::vector<std::vector<std::pair<int, int64_t>>> adj_;
  std::vector<int64_t> colors_in_;
  Leaf first_;
  Leaf best_;
  std::vector<Permutation> generators_;
  size_t leaves_ = 0;
};

}  // namespace

CanonicalResult CanonicalSearch(const ColoredGraph& g) {
  return Searcher(g).Run();
}

ColoredGraph ToColoredGraph(const MetricGraph& g,
                            const std::vector<int64_t>& vertex_color) {
  ColoredGraph out;
  out.num_vertices = g.num_vertices();
  out.vertex_color = vertex_color;
  for (const MetricEdge& e : g.edges()) out.edges.push_back({e.u, e.v, e.length});
  return out;
}

std::vector<int64_t> CanonicalForm(const MetricGraph& g) {
  return CanonicalSearch(ToColoredGraph(g)).certificate;
}

AutomorphismGroup ComputeAutomorphisms(const MetricGraph& g) {
  CanonicalResult r = CanonicalSearch(ToColoredGraph(g));
  return {std::move(r.generators), r.group_order};
}

MetricGraph Smooth(const MetricGraph& g) {
  MetricGraph out(g.name());
  std::vector<int> keep(g.num_vertices(), -1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.valency(v) != 2) keep[v] = out.AddVertex(g.vertex_id(v));
  }
  std::vector<bool> used(g.num_edges(), false);
  auto walk = [&](int from, int e, int* end) {
    int total = 0;
    int v = from;
    while (true) {
      used[e] = true;
      total += g.edge(e).length;
      v = g.edge(e).other(v);
      if (keep[v] >= 0) break;
      const std::vector<int>& inc = g.incident(v);
      const int next = inc[0] == e ? inc[1] : inc[0];
      if (used[next]) break;
      e = next;
    }
    *end = v;
    return total;
  };
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (keep[v] < 0) continue;
    for (int e : g.incident(v)) {
      if (used[e]) continue;
      int end = -1;
      const int len = walk(v, e, &end);
      out.AddEdge(keep[v], keep[end], len);
    }
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    if (used[e]) continue;
    const int anchor = g.edge(e).u;
    keep[anchor] = out.AddVertex(g.vertex_id(anchor));
    int end = -1;
    const int len = walk(anchor, e, &end);
    out.AddEdge(keep[anchor], keep[anchor], len);
  }
  return out;
}

bool IsIsomorphic(const MetricGraph& a, const MetricGraph& b) {
  return CanonicalForm(Smooth(a)) == CanonicalForm(Smooth(b));
}

}  // namespace chambers
