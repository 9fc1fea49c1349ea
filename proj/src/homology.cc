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

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <sstream>

#include "chambers/complex.h"
#include "chambers/error.h"

namespace chambers {

std::vector<int64_t> SmithInvariants(std::vector<std::vector<int64_t>> m) {
  const size_t rows = m.size();
  const size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<int64_t> invariants;
  auto swap_cols = [&m](size_t a, size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
  };
  for (size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest non-zero entry of the remaining block becomes the pivot.
    size_t pi = rows, pj = cols;
    for (size_t i = t; i < rows; ++i) {
      for (size_t j = t; j < cols; ++j) {
        if (m[i][j] != 0 && (pi == rows || std::llabs(m[i][j]) < std::llabs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;
    std::swap(m[t], m[pi]);
    swap_cols(t, pj);
    while (true) {
      bool clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const int64_t q = m[i][t] / m[t][t];
        for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const int64_t q = m[t][j] / m[t][t];
        for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // The pivot must divide the rest of the block.
      bool divides = true;
      for (size_t i = t + 1; i < rows && divides; ++i) {
        for (size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    invariants.push_back(std::llabs(m[t][t]));
  }
  return invariants;
}

std::string HomologyGroup::ToString() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (int64_t t : torsion) parts.push_back("Z/" + std::to_string(t));
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

HomologyGroup FirstHomology(const ShapeComplex& c) {
  const int nv = c.num_vertices(), ne = c.num_edges(), nf = c.num_faces();
  std::vector<std::vector<int64_t>> d1(nv, std::vector<int64_t>(ne, 0));
  for (int e = 0; e < ne; ++e) {
    d1[c.edge(e).src][e] -= 1;
    d1[c.edge(e).dst][e] += 1;
  }
  std::vector<std::vector<int64_t>> d2(ne, std::vector<int64_t>(nf, 0));
  for (int f = 0; f < nf; ++f) {
    for (const Side& s : c.face(f).sides) d2[s.edge][f] += s.forward ? 1 : -1;
  }
  const auto inv1 = SmithInvariants(d1);
  const auto inv2 = SmithInvariants(d2);
  HomologyGroup h;
  h.free_rank = ne - static_cast<int>(inv1.size()) - static_cast<int>(inv2.size());
  for (int64_t x : inv2) {
    if (x > 1) h.torsion.push_back(x);
  }
  std::sort(h.torsion.begin(), h.torsion.end());
  return h;
}

namespace {

using Word = std::vector<std::pair<int, int>>;

void FreelyReduce(Word& w) {
  Word out;
  for (const auto& letter : w) {
    if (!out.empty() && out.back().first == letter.first &&
        out.back().second == -letter.second) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  // Cyclic reduction.
  size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo].first == out[hi - 1].first &&
         out[lo].second == -out[hi - 1].second) {
    ++lo;
    --hi;
  }
  w.assign(out.begin() + lo, out.begin() + hi);
}

}  // namespace

Presentation FundamentalGroupPresentation(const ShapeComplex& c) {
  Presentation p;
  const int nv = c.num_vertices();
  std::vector<bool> in_tree_edge(c.num_edges(), false);
  std::vector<bool> reached(nv, false);
  if (nv > 0) {
    std::vector<std::vector<int>> incident(nv);
    for (int e = 0; e < c.num_edges(); ++e) {
      incident[c.edge(e).src].push_back(e);
      incident[c.edge(e).dst].push_back(e);
    }
    std::queue<int> queue;
    reached[0] = true;
    queue.push(0);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int e : incident[v]) {
        const int w = c.edge(e).src == v ? c.edge(e).dst : c.edge(e).src;
        if (reached[w]) continue;
        reached[w] = true;
        in_tree_edge[e] = true;
        queue.push(w);
      }
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
    throw DomainError("complex is not connected");
  }
  std::vector<int> generator_of(c.num_edges(), -1);
  for (int e = 0; e < c.num_edges(); ++e) {
    if (in_tree_edge[e]) continue;
    generator_of[e] = static_cast<int>(p.generators.size());
    p.generators.push_back(c.edge(e).id);
  }
  for (const Face& f : c.faces()) {
    Word w;
    for (const Side& s : f.sides) {
      if (generator_of[s.edge] >= 0) w.push_back({generator_of[s.edge], s.forward ? 1 : -1});
    }
    FreelyReduce(w);
    p.relators.push_back(std::move(w));
  }
  return p;
}

std::string Presentation::ToString() const {
  std::ostringstream out;
  out << "<";
  for (size_t i = 0; i < generators.size(); ++i) out << (i ? ", " : "") << generators[i];
  out << " |";
  for (size_t r = 0; r < relators.size(); ++r) {
    out << (r ? ", " : " ");
    if (relators[r].empty()) out << "1";
    for (size_t k = 0; k < relators[r].size(); ++k) {
      out << (k ? " " : "") << generators[relators[r][k].first];
      if (relators[r][k].second < 0) out << "^-1";
    }
  }
  out << ">";
  return out.str();
}

HomologyGroup Presentation::Abelianization() const {
  std::vector<std::vector<int64_t>> m;
  for (const auto& r : relators) {
    std::vector<int64_t> row(generators.size(), 0);
    for (auto [g, e] : r) row[g] += e;
    m.push_back(std::move(row));
  }
  HomologyGroup h;
  std::vector<int64_t> inv;
  if (!m.empty() && !generators.empty()) inv = SmithInvariants(m);
  h.free_rank = static_cast<int>(generators.size()) - static_cast<int>(inv.size());
  for (int64_t x : inv) {
    if (x > 1) h.torsion.push_back(x);
  }
  std::sort(h.torsion.begin(), h.torsion.end());
  return h;
}

}  // namespace chambers
