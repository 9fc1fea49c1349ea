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

#ifndef CHAMBERS_LOCAL_RANK_H_
#define CHAMBERS_LOCAL_RANK_H_

#include <optional>
#include <vector>

#include "chambers/complex.h"
#include "chambers/rank.h"

namespace chambers {

struct LocalRank {
  // Every vertex link has a root, i.e. a vertex of valency >= 3.
  bool thick = true;
  // Unweighted mean of the link ranks; set only for thick complexes.
  std::optional<Rational> rank;
  std::vector<std::optional<Rational>> per_vertex;
};

// Throws DomainError for complexes failing the link condition.
LocalRank LocalRankOfComplex(const ShapeComplex& c);

}  // namespace chambers

#endif  // CHAMBERS_LOCAL_RANK_H_
