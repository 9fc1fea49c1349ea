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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chambers/canonical.h"
#include "chambers/complex.h"
#include "chambers/develop.h"
#include "chambers/error.h"
#include "chambers/extend.h"
#include "chambers/graph_metrics.h"
#include "chambers/local_rank.h"
#include "chambers/metric_graph.h"
#include "chambers/plane.h"
#include "chambers/rank.h"
#include "chambers/surgery.h"

namespace py = pybind11;

namespace chambers {
namespace {

py::object ToFraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.numerator(), r.denominator());
}

py::object OptionalFraction(const std::optional<Rational>& r) {
  return r ? ToFraction(*r) : py::none();
}

py::dict SpectrumDict(const MetricGraph& g) {
  const LengthSpectrum s = ComputeLengthSpectrum(g);
  py::dict out;
  for (const auto& [length, count] : s.counts) out[py::int_(length)] = count;
  return out;
}

py::dict CensusDict(const MetricGraph& g) {
  py::dict out;
  for (const auto& [rank, count] : RootCensus(g)) out[ToFraction(rank)] = count;
  return out;
}

py::list Classify(int q, int k) {
  py::list out;
  for (const RemovalClass& c : ClassifyRemovals(q, k).classes) {
    py::dict row;
    row["edges"] = c.edges;
    row["orbit_size"] = c.orbit_size;
    row["distance_profile"] = c.distance_profile;
    row["isomorphism_type"] = c.isomorphism_type;
    row["graph"] = c.graph;
    out.append(row);
  }
  return out;
}

py::dict Prescribe(const MetricGraph& link, int radius) {
  const PrescribeResult r = PrescribeLink(link, radius);
  py::dict out;
  out["sat"] = r.sat;
  out["depth"] = r.depth;
  out["nodes"] = r.nodes;
  out["witness"] = r.witness ? py::cast(*r.witness) : py::none();
  return out;
}

py::dict Develop(const ShapeComplex& c, int base, int radius) {
  const DevelopedBall ball = DevelopBall(c, base, radius);
  py::dict out;
  out["ball"] = ball.complex;
  out["base"] = ball.base;
  out["is_cover"] = VerifyCover(ball);
  out["flat_radius"] = FlatDiskRadius(ball, ball.base);
  return out;
}

}  // namespace
}  // namespace chambers

PYBIND11_MODULE(chambers, m) {
  using namespace chambers;
  m.doc() = "Metric graphs, rank of links and square-free A2 complexes.";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<MetricGraph>(m, "Graph")
      .def_static("from_text", [](const std::string& text) { return ParseGraphText(text); })
      .def("to_text", [](const MetricGraph& g) { return GraphToText(g); })
      .def_property_readonly("name", &MetricGraph::name)
      .def_property_readonly("num_vertices", &MetricGraph::num_vertices)
      .def_property_readonly("num_edges", &MetricGraph::num_edges)
      .def("__repr__", [](const MetricGraph& g) {
        return "<Graph " + g.name() + " V=" + std::to_string(g.num_vertices()) +
               " E=" + std::to_string(g.num_edges()) + ">";
      });

  py::class_<ShapeComplex>(m, "Complex")
      .def_static("from_text", [](const std::string& text) { return ParseComplexText(text); })
      .def("to_text", [](const ShapeComplex& c) { return ComplexToText(c); })
      .def_property_readonly("name", &ShapeComplex::name)
      .def_property_readonly("num_vertices", &ShapeComplex::num_vertices)
      .def_property_readonly("num_edges", &ShapeComplex::num_edges)
      .def_property_readonly("num_faces", &ShapeComplex::num_faces)
      .def_property_readonly("euler_characteristic", &ShapeComplex::EulerCharacteristic)
      .def("__repr__", [](const ShapeComplex& c) {
        return "<Complex " + c.name() + " V=" + std::to_string(c.num_vertices()) +
               " F=" + std::to_string(c.num_faces()) + ">";
      });

  m.def("catalog_graph", [](const std::string& name) { return CatalogGraphByName(name); },
        py::arg("name"));
  m.def("catalog_complex", &CatalogComplex, py::arg("name"));
  m.def("catalog_complex_names", &CatalogComplexNames);
  m.def("incidence_graph", &IncidenceGraph, py::arg("q"));

  m.def("girth", &Girth, py::arg("graph"));
  m.def("spectrum", &chambers::SpectrumDict, py::arg("graph"));
  m.def("subdivide", [](const MetricGraph& g) { return SubdivideToUnit(g).graph; }, py::arg("graph"));
  m.def("is_isomorphic", &IsIsomorphic, py::arg("a"), py::arg("b"));
  m.def("automorphism_order", [](const MetricGraph& g) { return ComputeAutomorphisms(g).order; },
        py::arg("graph"));
  m.def(
      "building_order",
      [](const MetricGraph& g) -> std::optional<int> {
        const auto cert = IsBuildingA2(g);
        return cert ? std::optional<int>(cert->order) : std::nullopt;
      },
      py::arg("graph"), "Order q when the graph is a generalized 3-gon, else None.");
  m.def("completion_classes",
        [](const MetricGraph& g) { return CompleteIntoBuilding(g).class_representatives.size(); },
        py::arg("graph"));

  m.def("rank", [](const MetricGraph& g) { return chambers::ToFraction(GraphRank(g)); }, py::arg("graph"));
  m.def("rank_max", [](const MetricGraph& g) { return chambers::ToFraction(GraphRankMax(g)); },
        py::arg("graph"));
  m.def("rank_power", &GraphRankPower, py::arg("graph"), py::arg("p"));
  m.def("root_census", &chambers::CensusDict, py::arg("graph"));
  m.def("is_rank_one_plus", &IsRankOnePlus, py::arg("graph"));
  m.def("one_missing_rank", [](int q) { return chambers::ToFraction(OneMissingRank(q)); }, py::arg("q"));
  m.def("classify_removals", &chambers::Classify, py::arg("q"), py::arg("k"));

  m.def("link", &Link, py::arg("complex"), py::arg("vertex"));
  m.def(
      "is_npc", [](const ShapeComplex& c) { return CheckNpc(c).nonpositively_curved; }, py::arg("complex"));
  m.def(
      "h1",
      [](const ShapeComplex& c) {
        const HomologyGroup h = FirstHomology(c);
        return py::make_tuple(h.free_rank, h.torsion);
      },
      py::arg("complex"), "(free rank, torsion invariant factors).");
  m.def(
      "local_rank", [](const ShapeComplex& c) { return chambers::OptionalFraction(LocalRankOfComplex(c).rank); },
      py::arg("complex"));
  m.def("triangulate", [](const ShapeComplex& c) { return Triangulate(c).complex; }, py::arg("complex"));
  m.def("count_extensions", [](const ShapeComplex& c) { return CountExtensions(c).count(); },
        py::arg("complex"));
  m.def("extensions", [](const ShapeComplex& c) { return CountExtensions(c).extensions; }, py::arg("complex"));
  m.def("develop", &chambers::Develop, py::arg("complex"), py::arg("base") = 0, py::arg("radius") = 2);
  m.def("prescribe_link", &chambers::Prescribe, py::arg("link"), py::arg("radius"));
}
