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

#ifndef CHAMBERS_PERMUTATION_GROUP_H_
#define CHAMBERS_PERMUTATION_GROUP_H_

#include <cstdint>
#include <vector>

namespace chambers {

// p[x] is the image of x.
using Permutation = std::vector<int>;

Permutation IdentityPermutation(int n);
// (a * b)(x) = a(b(x)).
Permutation Compose(const Permutation& a, const Permutation& b);
Permutation Inverse(const Permutation& p);
bool IsIdentity(const Permutation& p);

// Orbit label (smallest member) of every point under the generated group.
std::vector<int> OrbitLabels(int n, const std::vector<Permutation>& generators);

// All elements of the generated group, sorted. Throws DomainError if the group
// has more than `limit` elements.
std::vector<Permutation> EnumerateGroup(int n,
                                        const std::vector<Permutation>& gens,
                                        size_t limit = 2'000'000);

// Base and strong generating set built by the deterministic Schreier-Sims
// procedure.
class StabilizerChain {
 public:
  StabilizerChain(int n, const std::vector<Permutation>& generators);

  uint64_t Order() const;
  bool Contains(const Permutation& p) const;
  std::vector<int> Base() const;
  std::vector<int> OrbitSizes() const;

 private:
  struct Level {
    int base_point = -1;
    std::vector<Permutation> generators;
    // transversal[x] maps base_point to x; empty if x is outside the orbit.
    std::vector<Permutation> transversal;
    std::vector<int> orbit;
  };

  void RebuildOrbit(Level& level) const;
  // Sifts g through levels from `from` on; returns the residue and the level
  // where sifting stopped (levels_.size() when it passed every level).
  Permutation Strip(Permutation g, size_t from, size_t* stop) const;

  int n_;
  std::vector<Level> levels_;
};

}  // namespace chambers

#endif  // CHAMBERS_PERMUTATION_GROUP_H_
