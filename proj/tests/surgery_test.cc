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

#include <set>

#include <gtest/gtest.h>

#include "chambers/canonical.h"
#include "chambers/graph_metrics.h"
#include "chambers/plane.h"
#include "chambers/surgery.h"

namespace chambers {
namespace {

bool Disjoint(const MetricGraph& g, int a, int b) {
  const MetricEdge& x = g.edge(a);
  const MetricEdge& y = g.edge(b);
  return x.u != y.u && x.u != y.v && x.v != y.u && x.v != y.v;
}

TEST(DisjointEdgeSetsTest, HeawoodSingles) {
  EXPECT_EQ(DisjointEdgeSets(IncidenceGraph(2), 1).size(), 21u);
}

TEST(DisjointEdgeSetsTest, HexagonPerfectMatchings) {
  MetricGraph g;
  for (int i = 0; i < 6; ++i) g.AddVertex("h" + std::to_string(i));
  for (int i = 0; i < 6; ++i) g.AddEdge(i, (i + 1) % 6, 2);
  EXPECT_EQ(DisjointEdgeSets(g, 3).size(), 2u);
}

TEST(DisjointEdgeSetsTest, HeawoodTriplesMatchTripleLoop) {
  const MetricGraph h = IncidenceGraph(2);
  size_t oracle = 0;
  for (int a = 0; a < h.num_edges(); ++a) {
    for (int b = a + 1; b < h.num_edges(); ++b) {
      if (!Disjoint(h, a, b)) continue;
      for (int c = b + 1; c < h.num_edges(); ++c) {
        if (Disjoint(h, a, c) && Disjoint(h, b, c)) ++oracle;
      }
    }
  }
  EXPECT_EQ(oracle, 644u);
  EXPECT_EQ(DisjointEdgeSets(h, 3).size(), oracle);
}

TEST(ClassifyTest, ClassCountsForOrderTwo) {
  EXPECT_EQ(ClassifyRemovals(2, 1).classes.size(), 1u);
  EXPECT_EQ(ClassifyRemovals(2, 2).classes.size(), 2u);
  const RemovalClassification three = ClassifyRemovals(2, 3);
  EXPECT_EQ(three.classes.size(), 6u);
  EXPECT_EQ(three.num_isomorphism_types, 6);
}

TEST(ClassifyProperty, OrbitSizesSumToSetCount) {
  for (int k = 1; k <= 3; ++k) {
    const RemovalClassification rc = ClassifyRemovals(2, k);
    uint64_t total = 0;
    for (const RemovalClass& c : rc.classes) {
      total += c.orbit_size;
      EXPECT_EQ(rc.automorphism_order % c.orbit_size, 0u);
    }
    EXPECT_EQ(total, rc.num_sets) << k;
  }
}

TEST(ClassifyProperty, RepresentativesArePairwiseDisjoint) {
  const MetricGraph h = IncidenceGraph(2);
  for (const RemovalClass& c : ClassifyRemovals(2, 3).classes) {
    for (size_t i = 0; i < c.edges.size(); ++i) {
      for (size_t j = i + 1; j < c.edges.size(); ++j) {
        EXPECT_TRUE(Disjoint(h, c.edges[i], c.edges[j]));
      }
    }
    EXPECT_TRUE(IsIsomorphic(c.graph, h.WithoutEdges(c.edges)));
  }
}

TEST(CatalogTest, DistanceProfiles) {
  const MetricGraph h = IncidenceGraph(2);
  const std::map<std::string, std::vector<int>> expected = {
      {"G1", {1, 1, 1}}, {"G2", {1, 1, 2}}, {"G3", {1, 1, 2}},
      {"G4", {1, 2, 2}}, {"G5", {2, 2, 2}}, {"G6", {2, 2, 2}}};
  for (const CatalogGraph& c : GraphCatalog()) {
    EXPECT_EQ(c.distance_profile, expected.at(c.name)) << c.name;
    EXPECT_EQ(DistanceProfile(h, c.removed_edges), expected.at(c.name)) << c.name;
  }
}

TEST(CatalogTest, EachClassNamedOnce) {
  std::set<std::string> seen;
  const RemovalClassification rc = ClassifyRemovals(2, 3);
  for (const RemovalClass& c : rc.classes) {
    for (const CatalogGraph& g : GraphCatalog()) {
      if (IsIsomorphic(g.graph, c.graph)) seen.insert(g.name);
    }
  }
  EXPECT_EQ(seen.size(), 6u);
}

TEST(CatalogTest, GraphShapes) {
  for (const CatalogGraph& c : GraphCatalog()) {
    EXPECT_EQ(c.graph.num_vertices(), 14) << c.name;
    EXPECT_EQ(c.graph.num_edges(), 18) << c.name;
  }
}

}  // namespace
}  // namespace chambers
