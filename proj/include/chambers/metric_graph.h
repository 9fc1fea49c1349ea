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

#ifndef CHAMBERS_METRIC_GRAPH_H_
#define CHAMBERS_METRIC_GRAPH_H_

// Finite metric multigraphs whose edge lengths are positive integers in units
// of pi/6 (a full turn is 12 units). Loops and parallel edges are allowed.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chambers/error.h"

namespace chambers {

struct MetricEdge {
  std::string id;
  int u = -1;
  int v = -1;
  int length = 0;
  // Free-form key=value annotations carried through the text format.
  std::map<std::string, std::string> attributes;

  bool is_loop() const { return u == v; }
  int other(int w) const { return w == u ? v : u; }
};

class MetricGraph {
 public:
  MetricGraph() = default;
  explicit MetricGraph(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  int AddVertex(std::string id);
  // An empty id is replaced by "e<index>".
  int AddEdge(int u, int v, int length, std::string id = {});
  int AddEdge(std::string_view u, std::string_view v, int length,
              std::string id = {});

  int num_vertices() const { return static_cast<int>(vertex_ids_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
  std::optional<int> FindVertex(std::string_view id) const;
  std::optional<int> FindEdge(std::string_view id) const;

  const MetricEdge& edge(int e) const { return edges_[e]; }
  MetricEdge& mutable_edge(int e) { return edges_[e]; }
  const std::vector<MetricEdge>& edges() const { return edges_; }

  // Edge indices incident to v; a loop is listed twice.
  const std::vector<int>& incident(int v) const { return incident_[v]; }
  // Number of edge ends at v (loops count twice).
  int valency(int v) const { return static_cast<int>(incident_[v].size()); }

  // Copy without the listed edges; vertices are kept.
  MetricGraph WithoutEdges(const std::vector<int>& edges) const;

  // Adjacency between distinct vertices, ignoring loops and multiplicity.
  bool Adjacent(int u, int v) const;

 private:
  std::string name_;
  std::vector<std::string> vertex_ids_;
  std::map<std::string, int, std::less<>> vertex_index_;
  std::vector<MetricEdge> edges_;
  std::map<std::string, int, std::less<>> edge_index_;
  std::vector<std::vector<int>> incident_;
};

// Text format:
//   graph <name>
//   vertex <id>
//   edge <id> <u> <v> <length> [key=value ...]
// '#' starts a comment. Unknown vertices in an edge line are an error.
MetricGraph ParseGraphText(std::string_view text);
std::string GraphToText(const MetricGraph& g);

}  // namespace chambers

#endif  // CHAMBERS_METRIC_GRAPH_H_
