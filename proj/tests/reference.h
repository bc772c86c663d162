// Copyright 2026 The fracdim Authors.
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

// Slow, independent re-implementations used as test oracles. Nothing here
// calls into the library beyond the Graph container and Rational.

#ifndef FRACDIM_TESTS_REFERENCE_H_
#define FRACDIM_TESTS_REFERENCE_H_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "fracdim/graph.h"
#include "fracdim/rational.h"

namespace fracdim::ref {

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Floyd-Warshall over the adjacency predicate.
inline std::vector<std::vector<int>> Distances(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < n; ++j) {
      if (i != j && g.HasEdge(i, j)) d[i][j] = 1;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  for (auto& row : d) {
    for (auto& x : row) x = x >= kInf ? kInf : x;
  }
  return d;
}

inline std::vector<int> Resolving(const std::vector<std::vector<int>>& d, int x, int y) {
  std::vector<int> out;
  for (int z = 0; z < static_cast<int>(d.size()); ++z) {
    if (d[x][z] != d[y][z]) out.push_back(z);
  }
  return out;
}

// Every R{x,y} over all members, unreduced.
inline std::vector<std::vector<int>> AllConstraints(const std::vector<Graph>& members) {
  std::vector<std::vector<int>> out;
  for (const auto& g : members) {
    const auto d = Distances(g);
    for (int x = 0; x < g.order(); ++x) {
      for (int y = x + 1; y < g.order(); ++y) out.push_back(Resolving(d, x, y));
    }
  }
  return out;
}

// Smallest vertex subset meeting every set, by enumeration in order of size.
inline int BruteForceHittingSet(int n, const std::vector<std::vector<int>>& sets) {
  int best = n;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    bool hits = true;
    for (const auto& s : sets) {
      bool any = false;
      for (int v : s) any = any || ((mask >> v) & 1);
      if (!any) {
        hits = false;
        break;
      }
    }
    if (hits) best = size;
  }
  return best;
}

inline bool Twins(const Graph& g, int u, int w) {
  for (int x = 0; x < g.order(); ++x) {
    if (x == u || x == w) continue;
    if (g.HasEdge(u, x) != g.HasEdge(w, x)) return false;
  }
  return true;
}

inline bool AllTwinClassesNontrivial(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    bool has = false;
    for (int w = 0; w < g.order() && !has; ++w) has = w != u && Twins(g, u, w);
    if (!has) return false;
  }
  return true;
}

// (sigma - ex1) / 2 computed from definitions.
inline Rational TreeFormula(const Graph& t) {
  const auto d = Distances(t);
  const int n = t.order();
  std::vector<int> majors;
  int sigma = 0;
  for (int v = 0; v < n; ++v) {
    if (t.degree(v) >= 3) majors.push_back(v);
    if (t.degree(v) == 1) ++sigma;
  }
  std::vector<int> ter(n, 0);
  for (int leaf = 0; leaf < n; ++leaf) {
    if (t.degree(leaf) != 1) continue;
    int owner = -1;
    for (int m : majors) {
      bool strict = true;
      for (int other : majors) {
        if (other != m && d[leaf][other] <= d[leaf][m]) strict = false;
      }
      if (strict) owner = m;
    }
    if (owner >= 0) ++ter[owner];
  }
  const auto ex1 = std::count(ter.begin(), ter.end(), 1);
  return Rational(sigma - static_cast<int>(ex1), 2);
}

// Independent strong-duality check for min 1.x s.t. Ax >= 1, 0 <= x <= 1,
// against the dual max 1.y - 1.z s.t. A^T y - z <= 1, y, z >= 0.
inline std::string CertificateError(int n, const std::vector<std::vector<int>>& sets,
                                    const std::vector<Rational>& x,
                                    const std::vector<Rational>& dual,
                                    const Rational& value) {
  const std::size_t m = sets.size();
  if (x.size() != static_cast<std::size_t>(n) || dual.size() != m + n) return "length";
  Rational primal;
  for (const auto& xi : x) {
    if (xi.sign() < 0 || Rational(1) < xi) return "x out of box";
    primal = primal + xi;
  }
  for (const auto& s : sets) {
    Rational lhs;
    for (int v : s) lhs = lhs + x[v];
    if (lhs < Rational(1)) return "primal infeasible";
  }
  Rational dual_obj;
  std::vector<Rational> col(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (dual[i].sign() < 0) return "negative y";
    dual_obj = dual_obj + dual[i];
    for (int v : sets[i]) col[v] = col[v] + dual[i];
  }
  for (int v = 0; v < n; ++v) {
    const Rational& z = dual[m + v];
    if (z.sign() < 0) return "negative z";
    dual_obj = dual_obj - z;
    if (Rational(1) < col[v] - z) return "dual infeasible";
  }
  if (primal != value) return "value mismatch";
  if (dual_obj != value) return "duality gap " + (value - dual_obj).ToString();
  return "";
}

}  // namespace fracdim::ref

#endif  // FRACDIM_TESTS_REFERENCE_H_
