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

#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "chambers/canonical.h"
#include "chambers/complex.h"
#include "chambers/error.h"
#include "chambers/extend.h"
#include "chambers/graph_metrics.h"
#include "chambers/plane.h"

namespace chambers {
namespace {

// Invariant graph with edge type encoded as length (type 0 -> 1, type 1 -> 2)
// so that metric isomorphism respects types.
MetricGraph TypedGraph(const ExtensionInvariant& inv) {
  MetricGraph g = inv.ToGraph();
  for (int e = 0; e < g.num_edges(); ++e) {
    g.mutable_edge(e).length = g.edge(e).attributes.at("type") == "0" ? 1 : 2;
  }
  return g;
}

// Components of the invariant graph: (vertices, type-0 edges, type-1 edges).
std::vector<std::array<int, 3>> Components(const MetricGraph& g) {
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const MetricEdge& e : g.edges()) parent[find(e.u)] = find(e.v);
  std::map<int, std::array<int, 3>> by_root;
  for (int v = 0; v < g.num_vertices(); ++v) ++by_root[find(v)][0];
  for (const MetricEdge& e : g.edges()) ++by_root[find(e.u)][e.length == 1 ? 1 : 2];
  std::vector<std::array<int, 3>> out;
  for (const auto& [root, counts] : by_root) out.push_back(counts);
  return out;
}

// Copy of c keeping only its first `faces` faces.
ShapeComplex FirstFaces(const ShapeComplex& c, int faces) {
  ShapeComplex out(c.name());
  for (int v = 0; v < c.num_vertices(); ++v) out.AddVertex(c.vertex_id(v));
  for (const ComplexEdge& e : c.edges()) out.AddEdge(e.src, e.dst, e.id);
  for (int f = 0; f < faces; ++f) out.AddFace(c.face(f).sides, c.face(f).id);
  return out;
}

// Disjoint union; ids of b get a prefix.
ShapeComplex Union(const ShapeComplex& a, const ShapeComplex& b) {
  ShapeComplex out = a;
  const int v0 = out.num_vertices(), e0 = out.num_edges();
  for (int v = 0; v < b.num_vertices(); ++v) out.AddVertex("b." + b.vertex_id(v));
  for (const ComplexEdge& e : b.edges()) out.AddEdge(e.src + v0, e.dst + v0, "b." + e.id);
  for (const Face& f : b.faces()) {
    std::vector<Side> sides = f.sides;
    for (Side& s : sides) s.edge += e0;
    out.AddFace(sides, "b." + f.id);
  }
  return out;
}

TEST(InvariantTest, V60HasThreeDiagonals) {
  const ExtensionInvariant inv = ComputeExtensionInvariant(CatalogComplex("V6_0"));
  EXPECT_EQ(inv.order, 2);
  EXPECT_EQ(inv.vertices.size(), 6u);
  ASSERT_EQ(inv.type0.size(), 3u);
  for (const Type0Edge& e : inv.type0) EXPECT_EQ(e.label, 1);
}

TEST(InvariantTest, Sec6SplitsIntoThreeDigons) {
  const ExtensionInvariant inv = ComputeExtensionInvariant(CatalogComplex("V6_3_sec6"));
  const auto components = Components(TypedGraph(inv));
  ASSERT_EQ(components.size(), 3u);
  for (const auto& c : components) EXPECT_EQ(c, (std::array<int, 3>{2, 1, 1}));
  for (const Type0Edge& e : inv.type0) EXPECT_EQ(e.label, 1);
}

TEST(InvariantTest, Fig5MatchesTwoRowFigure) {
  // Rows t0..t5 and b0..b5; type 0 has length 1, type 1 length 2.
  MetricGraph expected("figure");
  for (const char* row : {"t", "b"}) {
    for (int i = 0; i < 6; ++i) expected.AddVertex(row + std::to_string(i));
  }
  for (int i = 0; i < 4; ++i) expected.AddEdge(i, 6 + i, 1);
  expected.AddEdge(4, 5, 1);
  expected.AddEdge(10, 11, 1);
  for (const auto& [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {3, 4}, {2, 5}}) {
    expected.AddEdge(u, v, 2);
    expected.AddEdge(u + 6, v + 6, 2);
  }
  const ExtensionInvariant inv = ComputeExtensionInvariant(CatalogComplex("V_fig5"));
  EXPECT_EQ(inv.vertices.size(), 12u);
  EXPECT_TRUE(IsIsomorphic(TypedGraph(inv), expected));
}

TEST(InvariantTest, RequiresNpc) {
  const ShapeComplex doubled = ParseComplexText(
      "complex doubled\nvertex a\nvertex b\nvertex c\n"
      "edge x a b\nedge y b c\nedge z c a\n"
      "face T1 x:+ 2 y:+ 2 z:+ 2\nface T2 x:+ 2 y:+ 2 z:+ 2\n");
  EXPECT_THROW(ComputeExtensionInvariant(doubled), DomainError);
}

TEST(SixCycleTest, Sec6ComponentWalksRepeatTheirEdge) {
  const ExtensionInvariant inv = ComputeExtensionInvariant(CatalogComplex("V6_3_sec6"));
  const auto walks = AlternatingSixCycles(inv);
  EXPECT_EQ(walks.size(), 3u);
  for (const SixWalk& w : walks) {
    EXPECT_EQ(w.type0[0], w.type0[1]);
    EXPECT_EQ(w.type0[1], w.type0[2]);
  }
}

TEST(SixCycleTest, V60HasAnInjectiveCycle) {
  const ExtensionInvariant inv = ComputeExtensionInvariant(CatalogComplex("V6_0"));
  bool injective = false;
  for (const SixWalk& w : AlternatingSixCycles(inv)) {
    std::set<int> distinct(w.type0.begin(), w.type0.end());
    injective = injective || distinct.size() == 3;
  }
  EXPECT_TRUE(injective);
}

TEST(SixCycleTest, BuildingHasEmptyInvariant) {
  const ShapeComplex building = CountExtensions(CatalogComplex("V6_0")).extensions.at(0);
  const ExtensionInvariant inv = ComputeExtensionInvariant(building);
  EXPECT_TRUE(inv.vertices.empty());
  EXPECT_TRUE(AlternatingSixCycles(inv).empty());
}

TEST(FamilyTest, Counts) {
  EXPECT_EQ(SaturatedAmpleFamilies(CatalogComplex("V6_0")).families.size(), 1u);
  EXPECT_EQ(SaturatedAmpleFamilies(CatalogComplex("V6_3_sec6")).families.size(), 0u);
  EXPECT_EQ(SaturatedAmpleFamilies(CatalogComplex("V_fig5")).families.size(), 0u);
}

TEST(FamilyProperty, SaturatedAndAmple) {
  for (const std::string& name : CatalogComplexNames()) {
    const FamilySearch s = SaturatedAmpleFamilies(CatalogComplex(name));
    for (const CycleFamily& f : s.families) {
      std::vector<int> used(s.invariant.type0.size(), 0);
      for (int w : f.walks) {
        for (int e : s.walks[w].type0) ++used[e];
      }
      for (size_t e = 0; e < used.size(); ++e) {
        EXPECT_EQ(used[e], s.invariant.type0[e].label) << name;
      }
      const ShapeComplex x = BuildExtension(s, f);
      for (int v = 0; v < x.num_vertices(); ++v) {
        const auto girth = CombinatorialGirth(Link(x, v));
        EXPECT_TRUE(!girth || *girth >= 6) << name;
      }
    }
  }
}

TEST(BuildExtensionTest, LinksBecomeBuildings) {
  for (const char* name : {"V6_0", "V6_1"}) {
    const FamilySearch s = SaturatedAmpleFamilies(CatalogComplex(name));
    ASSERT_EQ(s.families.size(), 1u) << name;
    const ShapeComplex x = BuildExtension(s, s.families[0]);
    for (int v = 0; v < x.num_vertices(); ++v) {
      const auto cert = IsBuildingA2(Link(x, v));
      ASSERT_TRUE(cert.has_value()) << name;
      EXPECT_EQ(cert->order, 2);
    }
  }
}

TEST(BuildExtensionTest, EmptyFamilyLeavesBuildingUnchanged) {
  const ShapeComplex building = CountExtensions(CatalogComplex("V6_0")).extensions.at(0);
  const FamilySearch s = SaturatedAmpleFamilies(building);
  const ShapeComplex same = BuildExtension(s, CycleFamily{});
  EXPECT_TRUE(FindComplexIsomorphism(same, building, /*strict=*/true).has_value());
}

TEST(BuildExtensionProperty, ValencyEulerAndRoundTrip) {
  for (const std::string& name : CatalogComplexNames()) {
    const FamilySearch s = SaturatedAmpleFamilies(CatalogComplex(name));
    for (const CycleFamily& f : s.families) {
      const ShapeComplex x = BuildExtension(s, f);
      EXPECT_EQ(x.EulerCharacteristic(),
                s.triangulated.EulerCharacteristic() + static_cast<int>(f.walks.size()))
          << name;
      for (int valency : x.FaceValency()) EXPECT_EQ(valency, s.invariant.order + 1) << name;
      const ShapeComplex stripped = FirstFaces(x, s.triangulated.num_faces());
      EXPECT_TRUE(FindComplexIsomorphism(stripped, s.triangulated).has_value()) << name;
    }
  }
}

TEST(BuildExtensionProperty, WalkOrderDoesNotMatter) {
  // The invariant of a disjoint union splits into components.
  const ShapeComplex both = Union(CatalogComplex("V6_0"), CatalogComplex("V6_1"));
  const FamilySearch s = SaturatedAmpleFamilies(both);
  ASSERT_EQ(s.families.size(), 1u);
  CycleFamily forward = s.families[0];
  ASSERT_EQ(forward.walks.size(), 2u);
  CycleFamily backward = forward;
  std::reverse(backward.walks.begin(), backward.walks.end());
  EXPECT_TRUE(FindComplexIsomorphism(BuildExtension(s, forward), BuildExtension(s, backward)));
  EXPECT_EQ(CountExtensions(both).count(), 1u);
}

TEST(CountTest, Goldens) {
  EXPECT_EQ(CountExtensions(CatalogComplex("V6_0")).count(), 1u);
  EXPECT_EQ(CountExtensions(CatalogComplex("V6_1")).count(), 1u);
  EXPECT_EQ(CountExtensions(CatalogComplex("V6_3_sec4")).count(), 1u);
  EXPECT_EQ(CountExtensions(CatalogComplex("V6_3_sec6")).count(), 0u);
  EXPECT_EQ(CountExtensions(CatalogComplex("V_fig5")).count(), 0u);
  EXPECT_EQ(CountExtensions(CatalogComplex("V_fig4")).count(), 0u);
  EXPECT_EQ(CountExtensions(CatalogComplex("V6_0")).missing_chambers, 1u);
}

TEST(CountTest, EulerCharacteristicRisesByOne) {
  const ShapeComplex c = CatalogComplex("V6_0");
  EXPECT_EQ(CountExtensions(c).extensions.at(0).EulerCharacteristic(), c.EulerCharacteristic() + 1);
}

TEST(VerdictTest, Values) {
  const Verdict yes = IsBuildingWithChambersMissing(CatalogComplex("V6_0"));
  EXPECT_TRUE(yes.is_building_with_chambers_missing);
  ASSERT_TRUE(yes.witness.has_value());
  for (const BuildingCertificate& cert : yes.certificates) EXPECT_TRUE(cert.passes());
  EXPECT_FALSE(IsBuildingWithChambersMissing(CatalogComplex("V6_3_sec6")).is_building_with_chambers_missing);
  EXPECT_FALSE(IsBuildingWithChambersMissing(CatalogComplex("V_fig4")).is_building_with_chambers_missing);
}

}  // namespace
}  // namespace chambers
