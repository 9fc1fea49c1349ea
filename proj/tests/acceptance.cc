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

// End-to-end acceptance run: one PASS/FAIL line per criterion; the exit code
// is non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "chambers/canonical.h"
#include "chambers/complex.h"
#include "chambers/develop.h"
#include "chambers/extend.h"
#include "chambers/graph_metrics.h"
#include "chambers/plane.h"
#include "chambers/rank.h"
#include "chambers/surgery.h"

namespace chambers {
namespace {

// Flat r0 of the triangulated one-chamber-missing complex; see develop_test.
constexpr int kFlatRadiusV60 = 2;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Check {
  bool ok = true;
  std::string detail;
  void Expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

const std::vector<std::string> kNames = {"G1", "G2", "G3", "G4", "G5", "G6"};

Check RemovalClasses() {
  Check c;
  const auto start = Clock::now();
  c.Expect(ClassifyRemovals(2, 1).classes.size() == 1, "k=1");
  c.Expect(ClassifyRemovals(2, 2).classes.size() == 2, "k=2");
  c.Expect(ClassifyRemovals(2, 3).classes.size() == 6, "k=3");
  c.Expect(Seconds(start) < 5.0, "slower than 5 s");
  return c;
}

Check LengthSpectra() {
  const std::vector<std::map<int, int>> expected = {
      {{2, 9}, {6, 3}}, {{2, 8}, {4, 2}, {6, 2}}, {{2, 8}, {4, 3}, {8, 1}},
      {{2, 7}, {4, 4}, {6, 1}}, {{2, 6}, {4, 6}}, {{2, 6}, {4, 6}}};
  Check c;
  for (size_t i = 0; i < kNames.size(); ++i) {
    c.Expect(ComputeLengthSpectrum(CatalogGraphByName(kNames[i])).counts == expected[i], kNames[i]);
  }
  return c;
}

Check RankTable() {
  const std::vector<Rational> ranks = {Rational(18, 11), Rational(13, 8), Rational(105, 64),
                                       Rational(49, 31), Rational(3, 2),  Rational(3, 2)};
  const std::vector<uint64_t> aut = {6, 2, 2, 2, 12, 6};
  Check c;
  for (size_t i = 0; i < kNames.size(); ++i) {
    const MetricGraph& g = CatalogGraphByName(kNames[i]);
    c.Expect(GraphRank(g) == ranks[i], "rank " + kNames[i]);
    c.Expect(ComputeAutomorphisms(g).order == aut[i], "aut " + kNames[i]);
  }
  c.Expect(RootCensus(CatalogGraphByName("G5")) == std::map<Rational, int>{{Rational(3, 2), 60}},
           "census G5");
  c.Expect(RootCensus(CatalogGraphByName("G6")) ==
               std::map<Rational, int>{{Rational(1), 6}, {Rational(3, 2), 48}, {Rational(2), 6}},
           "census G6");
  c.Expect(RootCensus(CatalogGraphByName("G4")) ==
               std::map<Rational, int>{{Rational(1), 8}, {Rational(3, 2), 36}, {Rational(2), 18}},
           "census G4");
  c.Expect(RootCensus(CatalogGraphByName("G1")) ==
               std::map<Rational, int>{{Rational(1), 6}, {Rational(3, 2), 36}, {Rational(2), 24}},
           "census G1");
  return c;
}

Check OneMissingChamber() {
  Check c;
  const auto start = Clock::now();
  c.Expect(OneMissingRank(2) == Rational(15, 8), "closed form q=2");
  for (int q : {2, 3}) {
    c.Expect(GraphRank(IncidenceGraph(q).WithoutEdges({0})) == OneMissingRank(q),
             "brute force q=" + std::to_string(q));
  }
  c.Expect(Seconds(start) < 60.0, "slower than 60 s");
  return c;
}

Check BuildingRank() {
  Check c;
  const MetricGraph h = IncidenceGraph(2);
  c.Expect(GraphRank(h) == Rational(2), "rank(H)");
  const auto cert = IsBuildingA2(h);
  c.Expect(cert && cert->order == 2, "H certificate");
  for (const std::string& name : kNames) {
    c.Expect(!IsBuildingA2(CatalogGraphByName(name)), name + " accepted");
  }
  return c;
}

Check Homology() {
  Check c;
  c.Expect(FirstHomology(CatalogComplex("V6_0")) == HomologyGroup{1, {2}}, "V6_0");
  c.Expect(FirstHomology(CatalogComplex("V6_1")) == HomologyGroup{1, {2, 2}}, "V6_1");
  c.Expect(FirstHomology(CatalogComplex("V6_3_sec4")) == HomologyGroup{1, {7}}, "V6_3_sec4");
  for (const char* name : {"V1", "V3", "V4"}) {
    c.Expect(FirstHomology(CatalogComplex(name)) == HomologyGroup{1, {}}, name);
  }
  return c;
}

Check Links() {
  Check c;
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"V6_0", "G6"}, {"V6_1", "G6"}, {"V1", "G1"}, {"V2", "G2"},
      {"V3", "G3"},   {"V4", "G4"},   {"V_fig4", "G5"}};
  for (const auto& [name, graph] : expected) {
    const ShapeComplex x = CatalogComplex(name);
    const MetricGraph target = SubdivideToUnit(CatalogGraphByName(graph)).graph;
    for (int v = 0; v < x.num_vertices(); ++v) {
      c.Expect(IsIsomorphic(SubdivideToUnit(Link(x, v)).graph, target), name + " vs " + graph);
    }
  }
  c.Expect(CatalogComplex("V6_0").num_vertices() == 1, "V6_0 vertices");
  c.Expect(CatalogComplex("V6_1").num_vertices() == 1, "V6_1 vertices");
  c.Expect(LinkClasses(CatalogComplex("V_fig5")).size() == 2, "V_fig5 orbits");
  return c;
}

Check Npc() {
  Check c;
  for (const std::string& name : CatalogComplexNames()) {
    const NpcReport r = CheckNpc(CatalogComplex(name));
    c.Expect(r.nonpositively_curved && !r.has_boundary, name);
  }
  return c;
}

Check ExtensionDecisions() {
  Check c;
  const std::map<std::string, size_t> expected = {{"V6_0", 1},      {"V6_1", 1}, {"V6_3_sec4", 1},
                                                  {"V6_3_sec6", 0}, {"V_fig5", 0}, {"V_fig4", 0}};
  for (const auto& [name, count] : expected) {
    const ExtensionCount r = CountExtensions(CatalogComplex(name));
    c.Expect(r.count() == count, name + " count");
    for (const ShapeComplex& x : r.extensions) {
      for (int v = 0; v < x.num_vertices(); ++v) {
        const auto cert = IsBuildingA2(Link(x, v));
        c.Expect(cert && cert->order == 2, name + " extension link");
      }
    }
  }
  return c;
}

MetricGraph TypedGraph(const ExtensionInvariant& inv) {
  MetricGraph g = inv.ToGraph();
  for (int e = 0; e < g.num_edges(); ++e) {
    g.mutable_edge(e).length = g.edge(e).attributes.at("type") == "0" ? 1 : 2;
  }
  return g;
}

Check InvariantFigures() {
  Check c;
  // Three digons, each one type-0 and one type-1 edge.
  MetricGraph digons("digons");
  for (int i = 0; i < 6; ++i) digons.AddVertex("d" + std::to_string(i));
  for (int i = 0; i < 3; ++i) {
    digons.AddEdge(2 * i, 2 * i + 1, 1);
    digons.AddEdge(2 * i, 2 * i + 1, 2);
  }
  c.Expect(IsIsomorphic(TypedGraph(ComputeExtensionInvariant(CatalogComplex("V6_3_sec6"))), digons),
           "V6_3_sec6");
  // Two rows of six; solid edges type 0, dashed type 1.
  MetricGraph rows("rows");
  for (const char* row : {"t", "b"}) {
    for (int i = 0; i < 6; ++i) rows.AddVertex(row + std::to_string(i));
  }
  for (int i = 0; i < 4; ++i) rows.AddEdge(i, 6 + i, 1);
  rows.AddEdge(4, 5, 1);
  rows.AddEdge(10, 11, 1);
  for (const auto& [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {3, 4}, {2, 5}}) {
    rows.AddEdge(u, v, 2);
    rows.AddEdge(u + 6, v + 6, 2);
  }
  c.Expect(IsIsomorphic(TypedGraph(ComputeExtensionInvariant(CatalogComplex("V_fig5"))), rows),
           "V_fig5");
  return c;
}

Check CompletionUnicity() {
  Check c;
  c.Expect(CompleteIntoBuilding(CatalogGraphByName("G6")).class_representatives.size() == 1,
           "G6 classes");
  return c;
}

Check G5Obstruction() {
  Check c;
  const auto start = Clock::now();
  const PrescribeResult g5 = PrescribeLink(CatalogGraphByName("G5"), 2);
  c.Expect(!g5.sat && g5.depth == 2, "G5");
  c.Expect(PrescribeLink(IncidenceGraph(2), 2).sat, "H");
  c.Expect(PrescribeLink(CatalogGraphByName("G6"), 2).sat, "G6");
  c.Expect(Seconds(start) < 300.0, "slower than 5 min");
  return c;
}

ShapeComplex ExtendedV60() { return CountExtensions(CatalogComplex("V6_0")).extensions.at(0); }

Check CoveringProperty() {
  Check c;
  const ShapeComplex t = Triangulate(CatalogComplex("V6_0")).complex;
  c.Expect(VerifyCover(DevelopBall(t, 0, 3)), "V6_0 radius 3");
  c.Expect(VerifyCover(DevelopBall(ExtendedV60(), 0, 2)), "extension radius 2");
  return c;
}

Check FlatDiskContrast() {
  Check c;
  const ShapeComplex x = ExtendedV60();
  int previous = 0;
  for (int r = 1; r <= 3; ++r) {
    const DevelopedBall ball = DevelopBall(x, 0, r);
    const int flat = FlatDiskRadius(ball, ball.base);
    c.Expect(flat >= r - 1 && flat >= previous, "extension R=" + std::to_string(r));
    previous = flat;
  }
  const ShapeComplex t = Triangulate(CatalogComplex("V6_0")).complex;
  for (int r = 3; r <= 4; ++r) {
    const DevelopedBall ball = DevelopBall(t, 0, r);
    c.Expect(FlatDiskRadius(ball, ball.base) == kFlatRadiusV60, "V6_0 R=" + std::to_string(r));
  }
  return c;
}

MetricGraph Relabel(const MetricGraph& g, const std::vector<int>& perm) {
  MetricGraph out("relabeled");
  for (int i = 0; i < g.num_vertices(); ++i) out.AddVertex("r" + std::to_string(i));
  for (int e = g.num_edges() - 1; e >= 0; --e) {
    out.AddEdge(perm[g.edge(e).v], perm[g.edge(e).u], g.edge(e).length);
  }
  return out;
}

Check PropertySuites() {
  Check c;
  std::mt19937 rng(20240601);
  const MetricGraph h = IncidenceGraph(2);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> edges(h.num_edges());
    std::iota(edges.begin(), edges.end(), 0);
    std::shuffle(edges.begin(), edges.end(), rng);
    edges.resize(1 + trial % 8);
    const auto girth = Girth(h.WithoutEdges(edges));
    c.Expect(!girth || *girth >= 12, "girth monotonicity");
  }
  for (const std::string& name : CatalogComplexNames()) {
    const ShapeComplex x = CatalogComplex(name);
    const Triangulation t = Triangulate(x);
    c.Expect(FirstHomology(t.complex) == FirstHomology(x), "H1 " + name);
    c.Expect(t.complex.EulerCharacteristic() == x.EulerCharacteristic(), "chi " + name);
    for (int v = 0; v < t.complex.num_vertices(); ++v) {
      if (t.vertex_origin[v] < 0) continue;
      c.Expect(IsIsomorphic(Link(t.complex, v), SubdivideToUnit(Link(x, t.vertex_origin[v])).graph),
               "link " + name);
    }
  }
  for (const CatalogGraph& g : GraphCatalog()) {
    const auto form = CanonicalForm(g.graph);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<int> perm(g.graph.num_vertices());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      c.Expect(CanonicalForm(Relabel(g.graph, perm)) == form, "canonical " + g.name);
    }
  }
  std::vector<MetricGraph> graphs = {h, IncidenceGraph(3)};
  for (const CatalogGraph& g : GraphCatalog()) graphs.push_back(g.graph);
  for (const MetricGraph& g : graphs) {
    for (const Root& r : EnumerateRoots(g)) {
      c.Expect(r.shortcuts >= 0 && r.shortcuts <= r.branching, "N <= q in " + g.name());
    }
  }
  return c;
}

}  // namespace
}  // namespace chambers

int main() {
  using chambers::Check;
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"removal classification", chambers::RemovalClasses},
      {"length spectra", chambers::LengthSpectra},
      {"rank table", chambers::RankTable},
      {"one missing chamber", chambers::OneMissingChamber},
      {"building rank", chambers::BuildingRank},
      {"homology", chambers::Homology},
      {"links", chambers::Links},
      {"nonpositive curvature", chambers::Npc},
      {"extension decisions", chambers::ExtensionDecisions},
      {"invariant figures", chambers::InvariantFigures},
      {"completion unicity", chambers::CompletionUnicity},
      {"G5 obstruction", chambers::G5Obstruction},
      {"covering property", chambers::CoveringProperty},
      {"flat disk contrast", chambers::FlatDiskContrast},
      {"property suites", chambers::PropertySuites},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = chambers::Clock::now();
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    failures += !c.ok;
    std::printf("%s %2zu %-24s %8.2fs%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                chambers::Seconds(start), c.ok ? "" : "  ", c.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
