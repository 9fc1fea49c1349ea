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

#include "chambers/complex.h"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#include "chambers/canonical.h"
#include "chambers/error.h"
#include "chambers/graph_metrics.h"
#include "chambers/text_util.h"

namespace chambers {

int ShapeComplex::AddVertex(std::string id) {
  if (id.empty()) id = "v" + std::to_string(vertex_ids_.size());
  if (vertex_index_.count(id)) throw DomainError("duplicate vertex id " + id);
  vertex_index_.emplace(id, num_vertices());
  vertex_ids_.push_back(std::move(id));
  return num_vertices() - 1;
}

int ShapeComplex::AddEdge(int src, int dst, std::string id) {
  if (src < 0 || dst < 0 || src >= num_vertices() || dst >= num_vertices()) {
    throw DomainError("edge endpoint out of range");
  }
  if (id.empty()) id = "e" + std::to_string(edges_.size());
  if (edge_index_.count(id)) throw DomainError("duplicate edge id " + id);
  edge_index_.emplace(id, num_edges());
  edges_.push_back({std::move(id), src, dst});
  return num_edges() - 1;
}

int ShapeComplex::AddFace(std::vector<Side> sides, std::string id) {
  for (const Side& s : sides) {
    if (s.edge < 0 || s.edge >= num_edges()) {
      throw DomainError("face side refers to a missing edge");
    }
  }
  if (id.empty()) id = "f" + std::to_string(faces_.size());
  if (face_index_.count(id)) throw DomainError("duplicate face id " + id);
  face_index_.emplace(id, num_faces());
  faces_.push_back({std::move(id), std::move(sides)});
  return num_faces() - 1;
}

std::optional<int> ShapeComplex::FindVertex(std::string_view id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> ShapeComplex::FindEdge(std::string_view id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> ShapeComplex::FindFace(std::string_view id) const {
  auto it = face_index_.find(id);
  if (it == face_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> ShapeComplex::FaceValency() const {
  std::vector<int> valency(num_edges(), 0);
  for (const Face& f : faces_) {
    for (const Side& s : f.sides) ++valency[s.edge];
  }
  return valency;
}

ShapeComplex ParseComplexText(std::string_view text) {
  ShapeComplex c;
  bool seen_header = false;
  for (const TokenLine& line : TokenizeLines(text)) {
    const std::vector<std::string>& t = line.tokens;
    const std::string where = " (line " + std::to_string(line.line) + ")";
    if (t[0] == "complex") {
      if (seen_header || t.size() != 2) {
        throw DomainError("expected a single 'complex <name>' header" + where);
      }
      c.set_name(t[1]);
      seen_header = true;
    } else if (t[0] == "vertex") {
      if (t.size() != 2) throw DomainError("expected: vertex <id>" + where);
      c.AddVertex(t[1]);
    } else if (t[0] == "edge") {
      if (t.size() != 4) throw DomainError("expected: edge <id> <src> <dst>" + where);
      auto s = c.FindVertex(t[2]);
      auto d = c.FindVertex(t[3]);
      if (!s || !d) throw DomainError("edge refers to an unknown vertex" + where);
      c.AddEdge(*s, *d, t[1]);
    } else if (t[0] == "face") {
      if (t.size() < 4 || t.size() % 2 != 0) {
        throw DomainError("expected: face <id> (<edge>:<+|-> <angle>)+" + where);
      }
      std::vector<Side> sides;
      for (size_t i = 2; i < t.size(); i += 2) {
        const std::string& tok = t[i];
        const auto colon = tok.rfind(':');
        if (colon == std::string::npos || colon + 2 != tok.size() ||
            (tok.back() != '+' && tok.back() != '-')) {
          throw DomainError("bad side '" + tok + "'" + where);
        }
        auto e = c.FindEdge(tok.substr(0, colon));
        if (!e) throw DomainError("face refers to unknown edge '" + tok + "'" + where);
        sides.push_back({*e, tok.back() == '+', ParseInt(t[i + 1], where)});
      }
      c.AddFace(std::move(sides), t[1]);
    } else {
      throw DomainError("unknown directive '" + t[0] + "'" + where);
    }
  }
  if (!seen_header) throw DomainError("missing complex header");
  return c;
}

std::string ComplexToText(const ShapeComplex& c) {
  std::ostringstream out;
  out << "complex " << (c.name().empty() ? "unnamed" : c.name()) << "\n";
  for (int v = 0; v < c.num_vertices(); ++v) out << "vertex " << c.vertex_id(v) << "\n";
  for (const ComplexEdge& e : c.edges()) {
    out << "edge " << e.id << " " << c.vertex_id(e.src) << " " << c.vertex_id(e.dst)
        << "\n";
  }
  for (const Face& f : c.faces()) {
    out << "face " << f.id;
    for (const Side& s : f.sides) {
      out << " " << c.edge(s.edge).id << ":" << (s.forward ? '+' : '-') << " "
          << s.angle;
    }
    out << "\n";
  }
  return out.str();
}

namespace {

constexpr std::array<LatticePoint, 6> kDirections = {
    LatticePoint{1, 0}, LatticePoint{0, 1},  LatticePoint{-1, 1},
    LatticePoint{-1, 0}, LatticePoint{0, -1}, LatticePoint{1, -1}};

}  // namespace

std::optional<std::vector<LatticePoint>> DevelopFace(const Face& face) {
  std::vector<LatticePoint> corners;
  LatticePoint p{0, 0};
  int dir = 0;
  int turning = 0;
  for (const Side& s : face.sides) {
    if (s.angle <= 0 || s.angle >= 12 || s.angle % 2 != 0) return std::nullopt;
    corners.push_back(p);
    p.a += kDirections[dir].a;
    p.b += kDirections[dir].b;
    const int turn = 3 - s.angle / 2;
    turning += turn;
    dir = ((dir + turn) % 6 + 6) % 6;
  }
  if (p != LatticePoint{0, 0} || turning != 6) return std::nullopt;
  std::set<LatticePoint> distinct(corners.begin(), corners.end());
  if (distinct.size() != corners.size()) return std::nullopt;
  return corners;
}

ValidationReport Validate(const ShapeComplex& c) {
  ValidationReport report;
  for (const Face& f : c.faces()) {
    const std::string where = "face " + f.id + ": ";
    const int n = static_cast<int>(f.sides.size());
    if (n < 3) {
      report.errors.push_back(where + "fewer than three sides");
      continue;
    }
    bool closed = true;
    for (int i = 0; i < n; ++i) {
      if (c.Head(f.sides[i]) != c.Tail(f.sides[(i + 1) % n])) closed = false;
    }
    if (!closed) report.errors.push_back(where + "boundary does not close up");
    int sum = 0;
    bool positive = true, even = true;
    for (const Side& s : f.sides) {
      sum += s.angle;
      positive = positive && s.angle >= 1;
      even = even && s.angle % 2 == 0;
    }
    if (!positive) report.errors.push_back(where + "non-positive angle");
    if (!even) report.errors.push_back(where + "angle not a multiple of pi/3");
    if (sum != 6 * (n - 2)) {
      report.errors.push_back(where + "angle sum " + std::to_string(sum) +
                              " != " + std::to_string(6 * (n - 2)));
    }
    if (positive && even && sum == 6 * (n - 2) && !DevelopFace(f)) {
      report.errors.push_back(where + "not a simple lattice polygon");
    }
  }
  return report;
}

void RequireValid(const ShapeComplex& c) {
  const ValidationReport r = Validate(c);
  if (r.ok()) return;
  std::string msg = "invalid complex " + c.name() + ":";
  for (const std::string& e : r.errors) msg += "\n  " + e;
  throw DomainError(msg);
}

int LinkStructure::EndIndex(int edge, EdgeEnd end) const {
  for (size_t i = 0; i < ends.size(); ++i) {
    if (ends[i].first == edge && ends[i].second == end) return static_cast<int>(i);
  }
  return -1;
}

LinkStructure LinkOf(const ShapeComplex& c, int v) {
  LinkStructure link;
  link.graph.set_name("link_" + c.vertex_id(v));
  std::map<std::pair<int, EdgeEnd>, int> index;
  for (int e = 0; e < c.num_edges(); ++e) {
    const ComplexEdge& ce = c.edge(e);
    if (ce.src == v) {
      index[{e, EdgeEnd::kSource}] = link.graph.AddVertex(ce.id + ".s");
      link.ends.push_back({e, EdgeEnd::kSource});
    }
    if (ce.dst == v) {
      index[{e, EdgeEnd::kTarget}] = link.graph.AddVertex(ce.id + ".t");
      link.ends.push_back({e, EdgeEnd::kTarget});
    }
  }
  for (int f = 0; f < c.num_faces(); ++f) {
    const Face& face = c.face(f);
    const int n = static_cast<int>(face.sides.size());
    for (int i = 0; i < n; ++i) {
      const Side& in = face.sides[i];
      const Side& out = face.sides[(i + 1) % n];
      if (c.Head(in) != v) continue;
      const EdgeEnd in_end = in.forward ? EdgeEnd::kTarget : EdgeEnd::kSource;
      const EdgeEnd out_end = out.forward ? EdgeEnd::kSource : EdgeEnd::kTarget;
      link.graph.AddEdge(index.at({in.edge, in_end}), index.at({out.edge, out_end}),
                         in.angle, face.id + "@" + std::to_string(i));
      link.corners.push_back({f, i});
    }
  }
  return link;
}

MetricGraph Link(const ShapeComplex& c, int v) { return LinkOf(c, v).graph; }

std::vector<std::vector<int>> LinkClasses(const ShapeComplex& c) {
  std::vector<std::vector<int64_t>> forms;
  std::vector<std::vector<int>> classes;
  for (int v = 0; v < c.num_vertices(); ++v) {
    const std::vector<int64_t> form = CanonicalForm(Smooth(Link(c, v)));
    auto it = std::find(forms.begin(), forms.end(), form);
    if (it == forms.end()) {
      forms.push_back(form);
      classes.push_back({v});
    } else {
      classes[it - forms.begin()].push_back(v);
    }
  }
  return classes;
}

NpcReport CheckNpc(const ShapeComplex& c) {
  NpcReport report;
  for (int v : c.FaceValency()) report.has_boundary = report.has_boundary || v < 2;
  for (int v = 0; v < c.num_vertices(); ++v) {
    const std::optional<int> g = Girth(Link(c, v));
    report.link_girth.push_back(g);
    if (g && *g < 12) report.nonpositively_curved = false;
  }
  return report;
}

bool IsTriangulated(const ShapeComplex& c) {
  for (const Face& f : c.faces()) {
    if (f.sides.size() != 3) return false;
    for (const Side& s : f.sides) {
      if (s.angle != 2) return false;
    }
  }
  return true;
}

}  // namespace chambers
