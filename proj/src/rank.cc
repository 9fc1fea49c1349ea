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

#include "chambers/rank.h"

#include <cmath>
#include <functional>
#include <map>
#include <utility>

#include "chambers/error.h"
#include "chambers/graph_metrics.h"

namespace chambers {

std::string ToString(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational Root::rank() const {
  return Rational(1) + Rational(shortcuts, branching);
}

std::vector<Root> EnumerateRoots(const MetricGraph& g) {
  constexpr int kRootLength = 6;
  const std::optional<int> girth = Girth(g);
  if (girth && *girth < 2 * kRootLength) {
    throw DomainError("graph " + g.name() + " has girth " +
                      std::to_string(*girth) + " < 12; roots are undefined");
  }
  const UnitSubdivision sub = SubdivideToUnit(g);
  const MetricGraph& s = sub.graph;
  std::vector<Root> roots;
  std::vector<bool> on_path(s.num_vertices(), false);
  std::vector<int> vertices, edges;

  std::function<void(int)> extend = [&](int v) {
    if (static_cast<int>(edges.size()) == kRootLength) {
      Root r;
      r.start = vertices.front();
      r.end = v;
      r.path_vertices = vertices;
      r.path_edges = edges;
      r.branching = g.valency(r.start) - 1;
      roots.push_back(std::move(r));
      return;
    }
    for (int e : s.incident(v)) {
      const int w = s.edge(e).other(v);
      if (on_path[w]) continue;
      on_path[w] = true;
      vertices.push_back(w);
      edges.push_back(e);
      extend(w);
      edges.pop_back();
      vertices.pop_back();
      on_path[w] = false;
    }
  };

  for (int v : BranchVertices(g)) {
    on_path[v] = true;
    vertices = {v};
    edges.clear();
    extend(v);
    on_path[v] = false;
  }

  std::map<std::pair<int, int>, int> same_ends;
  for (const Root& r : roots) ++same_ends[{r.start, r.end}];
  for (Root& r : roots) r.shortcuts = same_ends[{r.start, r.end}] - 1;
  return roots;
}

namespace {

std::vector<Root> RequireRoots(const MetricGraph& g) {
  std::vector<Root> roots = EnumerateRoots(g);
  if (roots.empty()) throw DomainError("graph " + g.name() + " has no roots");
  return roots;
}

}  // namespace

Rational GraphRank(const MetricGraph& g) {
  const std::vector<Root> roots = RequireRoots(g);
  Rational sum(0);
  for (const Root& r : roots) sum += r.rank();
  return sum / static_cast<int64_t>(roots.size());
}

Rational GraphRankMax(const MetricGraph& g) {
  const std::vector<Root> roots = RequireRoots(g);
  Rational best = roots.front().rank();
  for (const Root& r : roots) best = std::max(best, r.rank());
  return best;
}

double GraphRankPower(const MetricGraph& g, double p) {
  if (!(p >= 1.0)) throw DomainError("rank exponent must be >= 1");
  const std::vector<Root> roots = RequireRoots(g);
  double sum = 0.0;
  for (const Root& r : roots) {
    sum += std::pow(boost::rational_cast<double>(r.rank()), p);
  }
  return std::pow(sum / static_cast<double>(roots.size()), 1.0 / p);
}

std::map<Rational, int> RootCensus(const MetricGraph& g) {
  std::map<Rational, int> census;
  for (const Root& r : EnumerateRoots(g)) ++census[r.rank()];
  return census;
}

bool IsRankOnePlus(const MetricGraph& g) {
  for (const Root& r : EnumerateRoots(g)) {
    if (r.shortcuts > 1) return false;
  }
  return true;
}

Rational OneMissingRank(int q) {
  if (q < 2) throw DomainError("order must be at least 2");
  if (q == 2) return Rational(15, 8);
  const int64_t d = int64_t{q} * q * q + 2 * int64_t{q} * q + 2 * q - 2;
  return Rational(2) - Rational(2, d);
}

}  // namespace chambers
