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

#include "chambers/complex.h"
#include "chambers/error.h"

namespace chambers {

ShapeComplex ComplexFromWords(const std::string& name,
                              const std::vector<std::string>& edge_labels,
                              const std::vector<FaceWord>& faces) {
  std::map<std::string, int> edge_of;
  for (size_t e = 0; e < edge_labels.size(); ++e) edge_of[edge_labels[e]] = static_cast<int>(e);
  struct ParsedSide {
    int edge;
    bool forward;
    int angle;
  };
  std::vector<std::vector<ParsedSide>> parsed;
  for (const FaceWord& f : faces) {
    std::vector<ParsedSide> sides;
    for (const auto& [token, angle] : f.sides) {
      const auto colon = token.rfind(':');
      if (colon == std::string::npos) throw DomainError("bad side " + token);
      auto it = edge_of.find(token.substr(0, colon));
      if (it == edge_of.end()) throw DomainError("unknown edge in " + token);
      sides.push_back({it->second, token.substr(colon + 1) == "+", angle});
    }
    parsed.push_back(std::move(sides));
  }
  // Endpoint slots: 2e is the source of edge e, 2e + 1 its target.
  const int slots = 2 * static_cast<int>(edge_labels.size());
  std::vector<int> parent(slots);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& sides : parsed) {
    const size_t n = sides.size();
    for (size_t i = 0; i < n; ++i) {
      const ParsedSide& in = sides[i];
      const ParsedSide& out = sides[(i + 1) % n];
      const int head = 2 * in.edge + (in.forward ? 1 : 0);
      const int tail = 2 * out.edge + (out.forward ? 0 : 1);
      const int a = find(head), b = find(tail);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  ShapeComplex c(name);
  std::map<int, int> vertex_of_root;
  for (int s = 0; s < slots; ++s) {
    const int r = find(s);
    if (!vertex_of_root.count(r)) {
      vertex_of_root[r] = c.AddVertex("x" + std::to_string(vertex_of_root.size()));
    }
  }
  for (size_t e = 0; e < edge_labels.size(); ++e) {
    c.AddEdge(vertex_of_root.at(find(2 * e)), vertex_of_root.at(find(2 * e + 1)),
              edge_labels[e]);
  }
  for (size_t f = 0; f < faces.size(); ++f) {
    std::vector<Side> sides;
    for (const ParsedSide& s : parsed[f]) sides.push_back({s.edge, s.forward, s.angle});
    c.AddFace(std::move(sides), faces[f].id);
  }
  return c;
}

namespace {

// Lozenge drawn with its obtuse corners left and right: a runs from the
// right corner to the top, b from the top to the left corner, c from the
// right corner to the bottom, d from the bottom to the left corner.
FaceWord Lozenge(const std::string& id, const std::string& a, const std::string& b,
                 const std::string& c, const std::string& d) {
  return {id, {{d + ":-", 2}, {c + ":-", 4}, {a + ":+", 2}, {b + ":+", 4}}};
}

// Triangle with bottom side z (left to right), right side x (upwards) and
// left side y (downwards), all oriented counterclockwise.
FaceWord Triangle(const std::string& id, const std::string& x, const std::string& y,
                  const std::string& z) {
  return {id, {{z + ":+", 2}, {x + ":+", 2}, {y + ":+", 2}}};
}

ShapeComplex SixLozenges(const std::string& name,
                         const std::vector<std::array<std::string, 4>>& lozenges) {
  std::vector<FaceWord> faces;
  for (size_t i = 0; i < lozenges.size(); ++i) {
    const auto& l = lozenges[i];
    faces.push_back(Lozenge("L" + std::to_string(i + 1), l[0], l[1], l[2], l[3]));
  }
  return ComplexFromWords(name, {"1", "2", "3", "4"}, faces);
}

ShapeComplex HexagonComplex(const std::string& name) {
  return ComplexFromWords(
      name, {"1", "2", "3", "4"},
      {{"H", {{"1:+", 4}, {"4:-", 4}, {"2:+", 4}, {"4:-", 4}, {"3:+", 4}, {"4:-", 4}}},
       Triangle("T1", "2", "3", "1"),
       Triangle("T2", "3", "2", "1")});
}

}  // namespace

std::vector<std::string> CatalogComplexNames() {
  return {"V6_0", "V6_1", "V6_3_sec4", "V6_3_sec6", "V1", "V2",
          "V3",   "V4",   "V_fig4",    "V_fig5",    "V_groupG"};
}

ShapeComplex CatalogComplex(const std::string& name) {
  if (name == "V6_0") {
    return SixLozenges(name, {{"1", "2", "2", "3"}, {"1", "4", "3", "2"}, {"1", "3", "4", "4"}});
  }
  if (name == "V6_1") {
    return SixLozenges(name, {{"1", "2", "3", "4"}, {"1", "3", "4", "2"}, {"1", "4", "2", "3"}});
  }
  if (name == "V6_3_sec4") {
    return SixLozenges(name, {{"1", "2", "3", "3"}, {"1", "3", "4", "4"}, {"1", "4", "2", "2"}});
  }
  if (name == "V6_3_sec6") {
    return SixLozenges(name, {{"1", "2", "2", "3"}, {"1", "3", "3", "4"}, {"1", "4", "4", "2"}});
  }
  if (name == "V1") {
    return ComplexFromWords(
        name, {"1", "2", "a", "b"},
        {{"T1", {{"1:+", 2}, {"b:+", 2}, {"a:-", 2}}},
         {"T2", {{"2:+", 2}, {"b:-", 2}, {"a:+", 2}}},
         {"S", {{"a:-", 6}, {"b:-", 2}, {"2:-", 6}, {"2:-", 2}, {"1:-", 6}, {"1:-", 2}}}});
  }
  if (name == "V2") {
    return ComplexFromWords(
        name, {"1", "2", "3", "4"},
        {Triangle("T1", "1", "4", "2"), Triangle("T2", "3", "4", "1"),
         {"P", {{"2:-", 6}, {"3:-", 4}, {"1:+", 2}, {"2:+", 6}, {"3:+", 4}, {"4:-", 2}}}});
  }
  if (name == "V3") {
    return ComplexFromWords(
        name, {"1", "2", "3", "4", "5"},
        {Triangle("T1", "4", "5", "3"), Triangle("T2", "2", "2", "5"),
         {"L1", {{"3:+", 2}, {"1:+", 4}, {"2:+", 2}, {"1:+", 4}}},
         {"L2", {{"3:-", 2}, {"4:-", 4}, {"5:+", 2}, {"4:+", 4}}}});
  }
  if (name == "V4") {
    return ComplexFromWords(
        name, {"1", "2", "3", "4"},
        {Triangle("T", "4", "3", "2"),
         {"L", {{"4:-", 2}, {"3:-", 4}, {"4:+", 2}, {"2:+", 4}}},
         {"Z", {{"1:-", 6}, {"1:-", 2}, {"3:-", 4}, {"1:+", 4}, {"2:-", 2}}}});
  }
  if (name == "V_fig4" || name == "V_groupG") return HexagonComplex(name);
  if (name == "V_fig5") {
    return ComplexFromWords(
        name, {"1", "2", "3", "4", "5", "6", "7", "8", "9"},
        {Triangle("T1", "1", "1", "2"),
         {"L", {{"5:-", 2}, {"3:-", 4}, {"9:+", 2}, {"9:+", 4}}},
         Triangle("T2", "9", "7", "4"), Triangle("T3", "6", "6", "2"),
         Triangle("T4", "8", "8", "2"),
         {"Z1", {{"4:-", 6}, {"8:-", 2}, {"7:-", 4}, {"3:+", 4}, {"5:-", 2}}},
         {"Z2", {{"6:-", 6}, {"7:-", 2}, {"3:-", 4}, {"5:+", 4}, {"4:-", 2}}}});
  }
  throw DomainError("no catalog complex named " + name);
}

}  // namespace chambers
