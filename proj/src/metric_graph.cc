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

#include "chambers/metric_graph.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "chambers/text_util.h"

namespace chambers {

int MetricGraph::AddVertex(std::string id) {
  if (id.empty()) id = "v" + std::to_string(vertex_ids_.size());
  if (vertex_index_.count(id)) throw DomainError("duplicate vertex id " + id);
  const int index = num_vertices();
  vertex_index_.emplace(id, index);
  vertex_ids_.push_back(std::move(id));
  incident_.emplace_back();
  return index;
}

int MetricGraph::AddEdge(int u, int v, int length, std::string id) {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) {
    throw DomainError("edge endpoint out of range");
  }
  if (length <= 0) throw DomainError("edge length must be positive");
  if (id.empty()) id = "e" + std::to_string(edges_.size());
  if (edge_index_.count(id)) throw DomainError("duplicate edge id " + id);
  const int index = num_edges();
  edge_index_.emplace(id, index);
  edges_.push_back(MetricEdge{std::move(id), u, v, length, {}});
  incident_[u].push_back(index);
  incident_[v].push_back(index);
  return index;
}

int MetricGraph::AddEdge(std::string_view u, std::string_view v, int length,
                         std::string id) {
  auto iu = FindVertex(u);
  auto iv = FindVertex(v);
  if (!iu || !iv) {
    throw DomainError("edge refers to unknown vertex " +
                      std::string(iu ? v : u));
  }
  return AddEdge(*iu, *iv, length, std::move(id));
}

std::optional<int> MetricGraph::FindVertex(std::string_view id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> MetricGraph::FindEdge(std::string_view id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

MetricGraph MetricGraph::WithoutEdges(const std::vector<int>& edges) const {
  std::set<int> drop(edges.begin(), edges.end());
  MetricGraph out(name_);
  for (const std::string& id : vertex_ids_) out.AddVertex(id);
  for (int e = 0; e < num_edges(); ++e) {
    if (drop.count(e)) continue;
    const MetricEdge& me = edges_[e];
    const int idx = out.AddEdge(me.u, me.v, me.length, me.id);
    out.edges_[idx].attributes = me.attributes;
  }
  return out;
}

bool MetricGraph::Adjacent(int u, int v) const {
  if (u == v) return false;
  for (int e : incident_[u]) {
    if (edges_[e].other(u) == v) return true;
  }
  return false;
}

MetricGraph ParseGraphText(std::string_view text) {
  MetricGraph g;
  bool seen_header = false;
  for (const TokenLine& line : TokenizeLines(text)) {
    const std::vector<std::string>& tokens = line.tokens;
    const std::string where = " (line " + std::to_string(line.line) + ")";
    const std::string& head = tokens[0];
    if (head == "graph") {
      if (seen_header) throw DomainError("repeated graph header" + where);
      if (tokens.size() != 2) throw DomainError("expected: graph <name>" + where);
      g.set_name(tokens[1]);
      seen_header = true;
    } else if (head == "vertex") {
      if (tokens.size() != 2) throw DomainError("expected: vertex <id>" + where);
      g.AddVertex(tokens[1]);
    } else if (head == "edge") {
      if (tokens.size() < 5) {
        throw DomainError("expected: edge <id> <u> <v> <length>" + where);
      }
      const int length = ParseInt(tokens[4], where);
      const int e = g.AddEdge(tokens[2], tokens[3], length, tokens[1]);
      for (size_t i = 5; i < tokens.size(); ++i) {
        const auto eq = tokens[i].find('=');
        if (eq == std::string::npos) {
          throw DomainError("expected key=value attribute" + where);
        }
        g.mutable_edge(e).attributes[tokens[i].substr(0, eq)] =
            tokens[i].substr(eq + 1);
      }
    } else {
      throw DomainError("unknown directive '" + head + "'" + where);
    }
  }
  if (!seen_header) throw DomainError("missing graph header");
  return g;
}

std::string GraphToText(const MetricGraph& g) {
  std::ostringstream out;
  out << "graph " << (g.name().empty() ? "unnamed" : g.name()) << "\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    out << "vertex " << g.vertex_id(v) << "\n";
  }
  for (const MetricEdge& e : g.edges()) {
    out << "edge " << e.id << " " << g.vertex_id(e.u) << " "
        << g.vertex_id(e.v) << " " << e.length;
    for (const auto& [k, v] : e.attributes) out << " " << k << "=" << v;
    out << "\n";
  }
  return out.str();
}

}  // namespace chambers
