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

#include "chambers/permutation_group.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "chambers/error.h"

namespace chambers {

Permutation IdentityPermutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation Compose(const Permutation& a, const Permutation& b) {
  Permutation c(b.size());
  for (size_t x = 0; x < b.size(); ++x) c[x] = a[b[x]];
  return c;
}

Permutation Inverse(const Permutation& p) {
  Permutation q(p.size());
  for (size_t x = 0; x < p.size(); ++x) q[p[x]] = static_cast<int>(x);
  return q;
}

bool IsIdentity(const Permutation& p) {
  for (size_t x = 0; x < p.size(); ++x) {
    if (p[x] != static_cast<int>(x)) return false;
  }
  return true;
}

std::vector<int> OrbitLabels(int n, const std::vector<Permutation>& gens) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Permutation& g : gens) {
    for (int x = 0; x < n; ++x) {
      int a = find(x), b = find(g[x]);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      parent[b] = a;
    }
  }
  std::vector<int> label(n);
  for (int x = 0; x < n; ++x) label[x] = find(x);
  return label;
}

std::vector<Permutation> EnumerateGroup(int n,
                                        const std::vector<Permutation>& gens,
                                        size_t limit) {
  std::set<Permutation> seen{IdentityPermutation(n)};
  std::vector<Permutation> frontier{IdentityPermutation(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& p : frontier) {
      for (const Permutation& g : gens) {
        Permutation q = Compose(g, p);
        if (seen.insert(q).second) {
          if (seen.size() > limit) throw DomainError("group too large");
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

StabilizerChain::StabilizerChain(int n, const std::vector<Permutation>& gens)
    : n_(n) {
  std::vector<Permutation> strong;
  for (const Permutation& g : gens) {
    if (!IsIdentity(g)) strong.push_back(g);
  }
  auto first_moved = [](const Permutation& p) {
    for (size_t x = 0; x < p.size(); ++x) {
      if (p[x] != static_cast<int>(x)) return static_cast<int>(x);
    }
    return -1;
  };
  // Every generator must move some base point.
  for (const Permutation& g : strong) {
    bool moves = false;
    for (const Level& l : levels_) moves = moves || g[l.base_point] != l.base_point;
    if (!moves) {
      Level l;
      l.base_point = first_moved(g);
      levels_.push_back(std::move(l));
    }
  }
  for (const Permutation& g : strong) {
    for (Level& l : levels_) {
      l.generators.push_back(g);
      if (g[l.base_point] != l.base_point) break;
    }
  }

  int i = static_cast<int>(levels_.size()) - 1;
  while (i >= 0) {
    RebuildOrbit(levels_[i]);
    bool restarted = false;
    for (size_t oi = 0; !restarted && oi < levels_[i].orbit.size(); ++oi) {
      const int p = levels_[i].orbit[oi];
      for (size_t si = 0; si < levels_[i].generators.size(); ++si) {
        const Permutation& s = levels_[i].generators[si];
        const Permutation h =
            Compose(Inverse(levels_[i].transversal[s[p]]),
                    Compose(s, levels_[i].transversal[p]));
        size_t stop = 0;
        Permutation r = Strip(h, i + 1, &stop);
        if (IsIdentity(r)) continue;
        if (stop == levels_.size()) {
          Level l;
          l.base_point = first_moved(r);
          levels_.push_back(std::move(l));
        }
        for (size_t l = i + 1; l <= stop; ++l) levels_[l].generators.push_back(r);
        i = static_cast<int>(stop);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

void StabilizerChain::RebuildOrbit(Level& level) const {
  level.transversal.assign(n_, Permutation{});
  level.orbit.clear();
  level.transversal[level.base_point] = IdentityPermutation(n_);
  level.orbit.push_back(level.base_point);
  for (size_t k = 0; k < level.orbit.size(); ++k) {
    const int x = level.orbit[k];
    for (const Permutation& s : level.generators) {
      const int y = s[x];
      if (level.transversal[y].empty()) {
        level.transversal[y] = Compose(s, level.transversal[x]);
        level.orbit.push_back(y);
      }
    }
  }
}

Permutation StabilizerChain::Strip(Permutation g, size_t from,
                                   size_t* stop) const {
  for (size_t l = from; l < levels_.size(); ++l) {
    const int beta = g[levels_[l].base_point];
    if (levels_[l].transversal.empty() || levels_[l].transversal[beta].empty()) {
      *stop = l;
      return g;
    }
    g = Compose(Inverse(levels_[l].transversal[beta]), g);
  }
  *stop = levels_.size();
  return g;
}

uint64_t StabilizerChain::Order() const {
  uint64_t order = 1;
  for (const Level& l : levels_) order *= l.orbit.size();
  return order;
}

bool StabilizerChain::Contains(const Permutation& p) const {
  size_t stop = 0;
  return IsIdentity(Strip(p, 0, &stop));
}

std::vector<int> StabilizerChain::Base() const {
  std::vector<int> out;
  for (const Level& l : levels_) out.push_back(l.base_point);
  return out;
}

std::vector<int> StabilizerChain::OrbitSizes() const {
  std::vector<int> out;
  for (const Level& l : levels_) out.push_back(static_cast<int>(l.orbit.size()));
  return out;
}

}  // namespace chambers
