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

#include <gtest/gtest.h>

#include "chambers/error.h"
#include "chambers/graph_metrics.h"
#include "chambers/plane.h"
#include "chambers/surgery.h"

namespace chambers {
namespace {

MetricGraph Hexagon() {
  MetricGraph g("hexagon");
  for (int i = 0; i < 6; ++i) g.AddVertex("h" + std::to_string(i));
  for (int i = 0; i < 6; ++i) g.AddEdge(i, (i + 1) % 6, 2);
  return g;
}

MetricGraph Apply(const MetricGraph& g, const std::vector<std::pair<int, int>>& added) {
  MetricGraph out = g;
  for (const auto& [u, v] : added) out.AddEdge(u, v, 2);
  return out;
}

TEST(IncidenceGraphTest, Sizes) {
  EXPECT_EQ(IncidenceGraph(2).num_vertices(), 14);
  EXPECT_EQ(IncidenceGraph(2).num_edges(), 21);
  EXPECT_EQ(IncidenceGraph(3).num_vertices(), 26);
  EXPECT_EQ(IncidenceGraph(3).num_edges(), 52);
}

TEST(IncidenceGraphTest, RejectsNonPrime) { EXPECT_THROW(IncidenceGraph(4), DomainError); }

TEST(IncidenceGraphProperty, EveryPrimePlaneIsABuilding) {
  for (int q : {2, 3, 5, 7}) {
    const auto cert = IsBuildingA2(IncidenceGraph(q));
    ASSERT_TRUE(cert.has_value()) << q;
    EXPECT_EQ(cert->order, q);
  }
}

TEST(BuildingTest, HeawoodOrderTwo) {
  const auto cert = IsBuildingA2(IncidenceGraph(2));
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->order, 2);
  EXPECT_FALSE(cert->thin);
}

TEST(BuildingTest, CatalogGraphsFail) {
  for (const CatalogGraph& c : GraphCatalog()) EXPECT_FALSE(IsBuildingA2(c.graph)) << c.name;
  EXPECT_FALSE(InspectBuilding(CatalogGraphByName("G6")).regular);
}

TEST(BuildingTest, HexagonIsThin) {
  const auto cert = IsBuildingA2(Hexagon());
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->order, 1);
  EXPECT_TRUE(cert->thin);
}

TEST(ProjectiveOrderTest, Values) {
  EXPECT_EQ(ProjectiveOrder(14), 2);
  EXPECT_EQ(ProjectiveOrder(6), 1);
  EXPECT_EQ(ProjectiveOrder(26), 3);
  EXPECT_FALSE(ProjectiveOrder(20).has_value());
}

TEST(CompletionTest, G6HasOneClass) {
  const CompletionResult r = CompleteIntoBuilding(CatalogGraphByName("G6"));
  EXPECT_EQ(r.order, 2);
  EXPECT_EQ(r.class_representatives.size(), 1u);
}

TEST(CompletionTest, HeawoodNeedsNothing) {
  const CompletionResult r = CompleteIntoBuilding(IncidenceGraph(2));
  ASSERT_EQ(r.completions.size(), 1u);
  EXPECT_TRUE(r.completions.front().empty());
}

TEST(CompletionProperty, CatalogGraphsCompleteToBuildings) {
  for (const CatalogGraph& c : GraphCatalog()) {
    const CompletionResult r = CompleteIntoBuilding(c.graph);
    ASSERT_GE(r.completions.size(), 1u) << c.name;
    for (const auto& added : r.completions) {
      EXPECT_TRUE(IsBuildingA2(Apply(c.graph, added))) << c.name;
    }
  }
}

TEST(CompletionProperty, SingleRemovedEdgeComesBack) {
  for (int q : {2, 3}) {
    const MetricGraph h = IncidenceGraph(q);
    for (int e = 0; e < h.num_edges(); ++e) {
      const CompletionResult r = CompleteIntoBuilding(h.WithoutEdges({e}));
      ASSERT_EQ(r.completions.size(), 1u) << q << " " << e;
      ASSERT_EQ(r.completions[0].size(), 1u);
      const auto [u, v] = r.completions[0][0];
      const MetricEdge& removed = h.edge(e);
      EXPECT_TRUE((u == removed.u && v == removed.v) || (u == removed.v && v == removed.u));
    }
  }
}

}  // namespace
}  // namespace chambers
