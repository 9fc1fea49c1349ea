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

#include "chambers/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "chambers/canonical.h"
#include "chambers/complex.h"
#include "chambers/develop.h"
#include "chambers/error.h"
#include "chambers/extend.h"
#include "chambers/graph_metrics.h"
#include "chambers/local_rank.h"
#include "chambers/plane.h"
#include "chambers/rank.h"
#include "chambers/surgery.h"
#include "chambers/text_util.h"

namespace chambers {
namespace {

using json = nlohmann::ordered_json;

json RationalJson(const Rational& r) { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

std::string Digest(const std::string& text) {
  uint64_t h = 1469598103934665603ULL;  // 64-bit FNV-1a
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

// A graph or complex named on the command line.
struct Input {
  std::string source;
  std::optional<MetricGraph> graph;
  std::optional<ShapeComplex> complex;
  std::string text;  // canonical text, for the digest
};

std::optional<MetricGraph> CatalogGraphNamed(const std::string& name) {
  for (const CatalogGraph& g : GraphCatalog()) {
    if (g.name == name) return g.graph;
  }
  if (name == "H" || name == "Heawood") return IncidenceGraph(2);
  if (name.rfind("PG2_", 0) == 0) return IncidenceGraph(ParseInt(name.substr(4), name));
  return std::nullopt;
}

Input LoadInput(const std::string& source) {
  Input in;
  in.source = source;
  if (source.rfind("catalog:", 0) == 0) {
    const std::string name = source.substr(8);
    in.graph = CatalogGraphNamed(name);
    if (!in.graph) in.complex = CatalogComplex(name);
  } else {
    const std::string text = ReadFile(source);
    const std::vector<TokenLine> lines = TokenizeLines(text);
    const std::string head = lines.empty() ? "" : lines.front().tokens.front();
    if (head == "graph") {
      in.graph = ParseGraphText(text);
    } else if (head == "complex") {
      in.complex = ParseComplexText(text);
    } else {
      throw DomainError("unknown file format: " + source);
    }
  }
  in.text = in.graph ? GraphToText(*in.graph) : ComplexToText(*in.complex);
  return in;
}

const MetricGraph& RequireGraph(const Input& in) {
  if (!in.graph) throw DomainError(in.source + " is not a graph");
  return *in.graph;
}

const ShapeComplex& RequireComplex(const Input& in) {
  if (!in.complex) throw DomainError(in.source + " is not a complex");
  return *in.complex;
}

json SpectrumJson(const MetricGraph& g) {
  const LengthSpectrum s = ComputeLengthSpectrum(g);
  json out = json::array();
  for (const auto& [len, count] : s.counts) out.push_back({len, count});
  return out;
}

std::optional<std::string> CatalogMatch(const MetricGraph& g) {
  for (const CatalogGraph& c : GraphCatalog()) {
    if (IsIsomorphic(c.graph, g)) return c.name;
  }
  if (IsIsomorphic(IncidenceGraph(2), g)) return "H";
  return std::nullopt;
}

json GraphRankJson(const MetricGraph& g, const std::string& p) {
  json out;
  const std::vector<Root> roots = EnumerateRoots(g);
  out["roots"] = roots.size();
  out["thick"] = !roots.empty();
  if (roots.empty()) return out;
  if (p == "1") {
    out["rank"] = RationalJson(GraphRank(g));
  } else if (p == "inf") {
    out["rank"] = RationalJson(GraphRankMax(g));
  } else {
    out["rank"] = GraphRankPower(g, std::stod(p));
  }
  json census = json::array();
  for (const auto& [r, n] : RootCensus(g)) census.push_back({{"rank", RationalJson(r)}, {"count", n}});
  out["census"] = census;
  out["rank_one_plus"] = IsRankOnePlus(g);
  return out;
}

void WriteTo(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  WriteFile(path.string(), text);
}

// Text rendering of a report payload: one "key: value" line per scalar,
// rationals as p/q, nested objects indented.
bool IsRational(const json& j) {
  return j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den");
}

std::string Scalar(const json& j) {
  if (IsRational(j)) {
    const auto den = j["den"].get<int64_t>();
    return std::to_string(j["num"].get<int64_t>()) + (den == 1 ? "" : "/" + std::to_string(den));
  }
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (j.is_array()) {
    std::string s = "[";
    for (size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + Scalar(j[i]);
    return s + "]";
  }
  if (j.is_object()) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      s += (first ? "" : ", ") + k + "=" + Scalar(v);
      first = false;
    }
    return s + "}";
  }
  return j.dump();
}

void RenderText(const json& j, int indent, std::ostream& out) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    const bool nested_objects = value.is_array() && !value.empty() && value[0].is_object() &&
                                !IsRational(value[0]);
    if (value.is_object() && !IsRational(value)) {
      out << pad << key << ":\n";
      RenderText(value, indent + 2, out);
    } else if (nested_objects) {
      out << pad << key << ":\n";
      for (const json& row : value) out << pad << "  - " << Scalar(row) << "\n";
    } else {
      out << pad << key << ": " << Scalar(value) << "\n";
    }
  }
}

struct Options {
  bool json_output = false;
  std::string out_path;
  std::vector<std::string> inputs;
  int q = 2, k = 3, radius = 1, margin = 2;
  std::string p = "1";
  std::string base;
  std::string emit_dir, export_path, prescribe;
  bool count = false, list_families = false, invariant = false, flat_census = false;
};

json RunCatalog(const Options& o) {
  json graphs = json::array();
  std::vector<CatalogGraph> all = GraphCatalog();
  all.push_back({"H", IncidenceGraph(2), {}, {}});
  for (const CatalogGraph& g : all) {
    graphs.push_back({{"name", g.name},
                      {"vertices", g.graph.num_vertices()},
                      {"edges", g.graph.num_edges()},
                      {"spectrum", SpectrumJson(g.graph)}});
    if (!o.emit_dir.empty()) {
      WriteTo(std::filesystem::path(o.emit_dir) / (g.name + ".graph"), GraphToText(g.graph));
    }
  }
  json complexes = json::array();
  for (const std::string& name : CatalogComplexNames()) {
    const ShapeComplex c = CatalogComplex(name);
    complexes.push_back({{"name", name},
                         {"vertices", c.num_vertices()},
                         {"edges", c.num_edges()},
                         {"faces", c.num_faces()}});
    if (!o.emit_dir.empty()) {
      WriteTo(std::filesystem::path(o.emit_dir) / (name + ".complex"), ComplexToText(c));
    }
  }
  return {{"graphs", graphs}, {"complexes", complexes}};
}

json RunClassify(const Options& o) {
  const RemovalClassification rc = ClassifyRemovals(o.q, o.k);
  const MetricGraph full = IncidenceGraph(o.q);
  json classes = json::array();
  for (size_t i = 0; i < rc.classes.size(); ++i) {
    const RemovalClass& c = rc.classes[i];
    json edges = json::array();
    for (int e : c.edges) edges.push_back(full.edge(e).id);
    json row = {{"class", i + 1},
                {"name", nullptr},
                {"edges", edges},
                {"orbit_size", c.orbit_size},
                {"distance_profile", c.distance_profile},
                {"spectrum", SpectrumJson(c.graph)},
                {"rank", nullptr},
                {"automorphisms", ComputeAutomorphisms(c.graph).order},
                {"isomorphism_type", c.isomorphism_type}};
    if (auto name = CatalogMatch(c.graph); name && o.q == 2) row["name"] = *name;
    if (!EnumerateRoots(c.graph).empty()) row["rank"] = RationalJson(GraphRank(c.graph));
    classes.push_back(row);
  }
  return {{"order", rc.order},
          {"removed", rc.removed},
          {"disjoint_sets", rc.num_sets},
          {"automorphism_order", rc.automorphism_order},
          {"num_classes", rc.classes.size()},
          {"num_isomorphism_types", rc.num_isomorphism_types},
          {"classes", classes}};
}

json RunSpectrum(const Input& in) {
  const MetricGraph& g = RequireGraph(in);
  return {{"spectrum", SpectrumJson(g)},
          {"bare_cycle", ComputeLengthSpectrum(g).has_bare_cycle},
          {"girth", Girth(g) ? json(*Girth(g)) : json(nullptr)}};
}

json RunRank(const Options& o, const Input& in) {
  if (in.graph) return GraphRankJson(*in.graph, o.p);
  const LocalRank lr = LocalRankOfComplex(RequireComplex(in));
  json per_vertex = json::array();
  for (const auto& r : lr.per_vertex) per_vertex.push_back(r ? RationalJson(*r) : json(nullptr));
  return {{"thick", lr.thick},
          {"local_rank", lr.rank ? RationalJson(*lr.rank) : json(nullptr)},
          {"per_vertex", per_vertex}};
}

json RunLink(const Options& o, const Input& in) {
  const ShapeComplex& c = RequireComplex(in);
  json vertices = json::array();
  for (int v = 0; v < c.num_vertices(); ++v) {
    const MetricGraph link = Link(c, v);
    const auto girth = Girth(link);
    const auto match = CatalogMatch(link);
    vertices.push_back({{"vertex", c.vertex_id(v)},
                        {"link_vertices", link.num_vertices()},
                        {"link_edges", link.num_edges()},
                        {"girth", girth ? json(*girth) : json(nullptr)},
                        {"spectrum", SpectrumJson(link)},
                        {"matches", match ? json(*match) : json(nullptr)}});
    if (!o.emit_dir.empty()) {
      WriteTo(std::filesystem::path(o.emit_dir) / ("link_" + c.vertex_id(v) + ".graph"),
              GraphToText(link));
    }
  }
  json classes = json::array();
  for (const auto& cls : LinkClasses(c)) {
    json ids = json::array();
    for (int v : cls) ids.push_back(c.vertex_id(v));
    classes.push_back(ids);
  }
  return {{"links", vertices}, {"classes", classes}, {"num_classes", classes.size()}};
}

json RunNpc(const Input& in) {
  const NpcReport r = CheckNpc(RequireComplex(in));
  json girth = json::array();
  for (const auto& g : r.link_girth) girth.push_back(g ? json(*g) : json(nullptr));
  return {{"nonpositively_curved", r.nonpositively_curved},
          {"boundary", r.has_boundary},
          {"link_girth", girth}};
}

json RunH1(const Input& in) {
  const ShapeComplex& c = RequireComplex(in);
  const HomologyGroup h = FirstHomology(c);
  return {{"h1", h.ToString()},
          {"free_rank", h.free_rank},
          {"torsion", h.torsion},
          {"presentation", FundamentalGroupPresentation(c).ToString()}};
}

json InvariantJson(const ShapeComplex& t, const ExtensionInvariant& inv) {
  json type0 = json::array();
  for (const Type0Edge& e : inv.type0) {
    type0.push_back({{"edge", t.edge(e.edge).id}, {"label", e.label}});
  }
  return {{"order", inv.order},
          {"vertices", inv.vertices.size()},
          {"type0", type0},
          {"type1", inv.type1.size()},
          {"warnings", inv.warnings}};
}

json RunInvariant(const Input& in) {
  const FamilySearch s = SaturatedAmpleFamilies(RequireComplex(in));
  json out = InvariantJson(s.triangulated, s.invariant);
  out["six_walks"] = s.walks.size();
  out["graph"] = GraphToText(s.invariant.ToGraph());
  return out;
}

json RunExtend(const Options& o, const Input& in, std::string& text_override) {
  const ShapeComplex& c = RequireComplex(in);
  const FamilySearch s = SaturatedAmpleFamilies(c);
  const ExtensionCount count = CountExtensions(c);
  json out;
  out["families"] = s.families.size();
  out["count"] = count.count();
  out["missing_chambers"] = count.missing_chambers ? json(*count.missing_chambers) : json(nullptr);
  if (o.list_families) {
    json families = json::array();
    for (const CycleFamily& f : s.families) {
      json walks = json::array();
      for (int w : f.walks) {
        json edges = json::array();
        for (int e : s.walks[w].type0) edges.push_back(s.triangulated.edge(s.invariant.type0[e].edge).id);
        walks.push_back(edges);
      }
      families.push_back(walks);
    }
    out["family_walks"] = families;
  }
  if (o.invariant) {
    out["invariant"] = InvariantJson(s.triangulated, s.invariant);
    out["invariant_graph"] = GraphToText(s.invariant.ToGraph());
  }
  json certs = json::array();
  for (size_t k = 0; k < count.extensions.size(); ++k) {
    const ShapeComplex& x = count.extensions[k];
    bool all = true;
    for (int v = 0; v < x.num_vertices(); ++v) {
      const BuildingCertificate cert = InspectBuilding(Link(x, v));
      all = all && cert.passes() && cert.order == s.invariant.order;
    }
    certs.push_back(all);
    if (!o.emit_dir.empty()) {
      WriteTo(std::filesystem::path(o.emit_dir) / (c.name() + "_ext" + std::to_string(k) + ".complex"),
              ComplexToText(x));
    }
  }
  out["links_are_buildings"] = certs;
  out["building_with_chambers_missing"] = count.count() > 0;
  if (o.invariant) text_override = GraphToText(s.invariant.ToGraph());
  if (o.count) text_override = std::to_string(count.count()) + "\n";
  return out;
}

json PrescribeJson(const PrescribeResult& r) {
  json out = {{"sat", r.sat}, {"depth", r.depth}, {"nodes", r.nodes}};
  if (r.witness) {
    out["witness"] = {{"vertices", r.witness->num_vertices()},
                      {"edges", r.witness->num_edges()},
                      {"faces", r.witness->num_faces()}};
  }
  return out;
}

json RunPrescribe(const Options& o, const MetricGraph& link) {
  const PrescribeResult r = PrescribeLink(link, o.radius);
  if (!o.export_path.empty() && r.witness) WriteTo(o.export_path, ComplexToText(*r.witness));
  return PrescribeJson(r);
}

json RunDevelop(const Options& o, const std::vector<Input>& inputs) {
  if (!o.prescribe.empty()) return RunPrescribe(o, RequireGraph(LoadInput(o.prescribe)));
  if (inputs.empty()) throw DomainError("develop needs a complex");
  const ShapeComplex& c = RequireComplex(inputs[0]);
  int base = 0;
  if (!o.base.empty()) {
    const auto v = c.FindVertex(o.base);
    if (!v) throw DomainError("no vertex " + o.base);
    base = *v;
  }
  const DevelopedBall ball = DevelopBall(c, base, o.radius, o.margin);
  int interior = 0;
  for (int v = 0; v < ball.complex.num_vertices(); ++v) interior += ball.interior(v);
  json out = {{"radius", o.radius},
              {"vertices", ball.complex.num_vertices()},
              {"edges", ball.complex.num_edges()},
              {"faces", ball.complex.num_faces()},
              {"interior_vertices", interior},
              {"cover_verified", VerifyCover(ball)},
              {"local_isomorphism", ProjectionIsLocalIsomorphism(ball)},
              {"flat_radius_at_base", FlatDiskRadius(ball, ball.base)}};
  if (o.flat_census) {
    std::map<int, int> census;
    for (int v = 0; v < ball.complex.num_vertices(); ++v) {
      if (ball.interior(v)) ++census[FlatDiskRadius(ball, v)];
    }
    json rows = json::array();
    for (const auto& [r, n] : census) rows.push_back({{"flat_radius", r}, {"vertices", n}});
    out["flat_census"] = rows;
  }
  if (!o.export_path.empty()) WriteTo(o.export_path, BallToText(ball));
  return out;
}

json RunComplete(const Input& in) {
  const CompletionResult r = CompleteIntoBuilding(RequireGraph(in));
  return {{"order", r.order},
          {"completions", r.completions.size()},
          {"classes", r.class_representatives.size()},
          {"class_sizes", r.class_sizes}};
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Buildings with chambers missing: links, ranks, extensions, developments", "chambers"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_flag("--json", o.json_output, "Emit a JSON report");
  app.add_option("--out", o.out_path, "Write the report to this file");

  auto input = [&o](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("input", o.inputs, "catalog:<name> or a graph/complex file");
    if (required) opt->required();
  };
  CLI::App* catalog = app.add_subcommand("catalog", "List the built-in graphs and complexes");
  catalog->add_option("--emit", o.emit_dir, "Write every catalog item into this directory");
  CLI::App* classify = app.add_subcommand("classify", "Classify disjoint chamber removals");
  classify->add_option("--q", o.q, "Projective plane order")->check(CLI::Range(2, 7));
  classify->add_option("--k", o.k, "Chambers removed")->check(CLI::Range(1, 4));
  CLI::App* spectrum = app.add_subcommand("spectrum", "Length spectrum of a graph");
  input(spectrum, true);
  CLI::App* rank = app.add_subcommand("rank", "Rank of a graph or local rank of a complex");
  input(rank, true);
  rank->add_option("--p", o.p, "1, inf or a real exponent >= 1");
  CLI::App* link = app.add_subcommand("link", "Vertex links of a complex");
  input(link, true);
  link->add_option("--emit", o.emit_dir, "Write the links into this directory");
  CLI::App* npc = app.add_subcommand("npc", "Link condition check");
  input(npc, true);
  CLI::App* h1 = app.add_subcommand("h1", "First homology and a presentation");
  input(h1, true);
  CLI::App* invariant = app.add_subcommand("invariant", "Extension invariant of a complex");
  input(invariant, true);
  CLI::App* extend = app.add_subcommand("extend", "Extensions into buildings");
  input(extend, true);
  extend->add_flag("--count", o.count, "Print only the number of extensions");
  extend->add_flag("--list-families", o.list_families, "List saturated ample families");
  extend->add_flag("--invariant", o.invariant, "Include the extension invariant graph");
  extend->add_option("--emit", o.emit_dir, "Write the extended complexes into this directory");
  CLI::App* develop = app.add_subcommand("develop", "Develop a ball of the universal cover");
  input(develop, false);
  develop->add_option("--radius", o.radius, "Ball radius")->check(CLI::NonNegativeNumber);
  develop->add_option("--base", o.base, "Base vertex id");
  develop->add_option("--margin", o.margin, "Extra layers developed before trimming")
      ->check(CLI::PositiveNumber);
  develop->add_flag("--flat-census", o.flat_census, "Flat disk radius of every interior vertex");
  develop->add_option("--prescribe", o.prescribe, "Build a ball with this link instead");
  develop->add_option("--export", o.export_path, "Write the ball to this file");
  CLI::App* prescribe = app.add_subcommand("prescribe", "Build a ball with a prescribed link");
  input(prescribe, true);
  prescribe->add_option("--radius", o.radius, "Ball radius")->check(CLI::NonNegativeNumber);
  prescribe->add_option("--export", o.export_path, "Write the witness ball to this file");
  CLI::App* complete = app.add_subcommand("complete", "Completions of a graph into a building");
  input(complete, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  if (o.p != "1" && o.p != "inf") {
    try {
      if (std::stod(o.p) < 1.0) throw std::invalid_argument("p");
    } catch (const std::exception&) {
      err << "--p must be 1, inf or a number >= 1\n";
      return kExitUsage;
    }
  }

  const auto start = std::chrono::steady_clock::now();
  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  json report;
  report["command"] = args;
  std::string text_override;
  try {
    std::vector<Input> inputs;
    for (const std::string& s : o.inputs) inputs.push_back(LoadInput(s));
    json digests = json::array();
    for (const Input& in : inputs) digests.push_back({{"source", in.source}, {"digest", Digest(in.text)}});
    report["inputs"] = digests;
    json result;
    if (name == "catalog") result = RunCatalog(o);
    if (name == "classify") result = RunClassify(o);
    if (name == "spectrum") result = RunSpectrum(inputs[0]);
    if (name == "rank") result = RunRank(o, inputs[0]);
    if (name == "link") result = RunLink(o, inputs[0]);
    if (name == "npc") result = RunNpc(inputs[0]);
    if (name == "h1") result = RunH1(inputs[0]);
    if (name == "invariant") result = RunInvariant(inputs[0]);
    if (name == "extend") result = RunExtend(o, inputs[0], text_override);
    if (name == "develop") result = RunDevelop(o, inputs);
    if (name == "prescribe") result = RunPrescribe(o, RequireGraph(inputs[0]));
    if (name == "complete") result = RunComplete(inputs[0]);
    report["result"] = result;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report["timing_ms"] = std::round(ms * 1000.0) / 1000.0;

  std::ostringstream rendered;
  if (o.json_output) {
    rendered << report.dump(2) << "\n";
  } else if (!text_override.empty()) {
    rendered << text_override;
  } else {
    RenderText(report["result"], 0, rendered);
  }
  if (o.out_path.empty()) {
    out << rendered.str();
  } else {
    try {
      WriteTo(o.out_path, rendered.str());
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitDomainError;
    }
  }
  return kExitOk;
}

}  // namespace chambers
