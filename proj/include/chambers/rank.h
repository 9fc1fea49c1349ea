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

#ifndef CHAMBERS_RANK_H_
#define CHAMBERS_RANK_H_

// Roots of a metric graph and the rank interpolating between 1 and 2.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "chambers/metric_graph.h"

namespace chambers {

using Rational = boost::rational<int64_t>;

std::string ToString(const Rational& r);

// A root is a simple path of length pi (6 units) starting at a vertex of
// valency >= 3, read on the unit subdivision. Distinct edge sequences are
// distinct roots.
struct Root {
  int start = -1;                  // vertex of the input graph
  int end = -1;                    // vertex of the unit subdivision
  std::vector<int> path_vertices;  // 7 vertices of the unit subdivision
  std::vector<int> path_edges;     // 6 edges of the unit subdivision
  int branching = 0;               // valency(start) - 1
  int shortcuts = 0;               // other roots with the same start and end
  Rational rank() const;
};

// Throws DomainError unless the girth is at least 2 pi.
std::vector<Root> EnumerateRoots(const MetricGraph& g);

// Average root rank (p = 1). Throws DomainError if there are no roots.
Rational GraphRank(const MetricGraph& g);
// Maximum root rank (p = infinity).
Rational GraphRankMax(const MetricGraph& g);
// p-mean of root ranks for finite p >= 1.
double GraphRankPower(const MetricGraph& g, double p);

// Number of roots per rank value.
std::map<Rational, int> RootCensus(const MetricGraph& g);

// True when every root has at most one shortcut (N <= 1).
bool IsRankOnePlus(const MetricGraph& g);

// Rank of the incidence graph of a projective plane of order q with one edge
// removed, in closed form.
Rational OneMissingRank(int q);

}  // namespace chambers

#endif  // CHAMBERS_RANK_H_
