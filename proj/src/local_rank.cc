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

#include "chambers/local_rank.h"

#include "chambers/error.h"
#include "chambers/graph_metrics.h"

namespace chambers {

LocalRank LocalRankOfComplex(const ShapeComplex& c) {
  if (!CheckNpc(c).nonpositively_curved) {
    throw DomainError("complex " + c.name() + " fails the link condition");
  }
  LocalRank out;
  Rational sum(0);
  for (int v = 0; v < c.num_vertices(); ++v) {
    const MetricGraph link = Link(c, v);
    if (BranchVertices(link).empty()) {
      out.thick = false;
      out.per_vertex.push_back(std::nullopt);
      continue;
    }
    const Rational r = GraphRank(link);
    out.per_vertex.push_back(r);
    sum += r;
  }
  if (out.thick && c.num_vertices() > 0) {
    out.rank = sum / static_cast<int64_t>(c.num_vertices());
  }
  return out;
}

}  // namespace chambers
