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

// Metric structure of a graph: the resolving constraint R{x,y} of every
// vertex pair, twin classes, the minimum constraint size r(G), and the
// end-vertex/major-vertex profile of trees.

#ifndef FRACDIM_METRIC_H_
#define FRACDIM_METRIC_H_

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fracdim/covering_lp.h"
#include "fracdim/family.h"
#include "fracdim/graph.h"

namespace fracdim {

// R{x,y}: the vertices whose distances to x and to y differ (x < y).
struct ResolvingConstraint {
  Vertex x = 0;
  Vertex y = 0;
  std::vector<Vertex> members;  // sorted
};

inline ResolvingConstraint ComputeResolvingConstraint(const DistanceMatrix& dm,
                                                      Vertex x, Vertex y) {
  if (x == y) throw std::invalid_argument("resolving constraint needs x != y");
  if (x > y) std::swap(x, y);
  ResolvingConstraint out{x, y, {}};
  for (Vertex z = 0; z < dm.order(); ++z) {
    if (dm(x, z) != dm(y, z)) out.members.push_back(z);
  }
  return out;
}

namespace internal {

class VertexBits {
 public:
  explicit VertexBits(const std::vector<Vertex>& members, int n)
      : words_((static_cast<std::size_t>(n) + 63) / 64, 0) {
    for (Vertex v : members) words_[v / 64] |= std::uint64_t{1} << (v % 64);
  }
  bool SubsetOf(const VertexBits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }
  bool operator==(const VertexBits&) const = default;

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace internal

// Keeps one representative of every distinct inclusion-minimal member set,
// in the order of first appearance. Pair labels of dropped constraints are
// discarded.
inline std::vector<ResolvingConstraint> ReduceConstraints(
    const std::vector<ResolvingConstraint>& all, int n) {
  std::vector<internal::VertexBits> bits;
  bits.reserve(all.size());
  for (const auto& c : all) bits.emplace_back(c.members, n);
  std::vector<ResolvingConstraint> kept;
  std::vector<std::size_t> kept_index;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < all.size() && !drop; ++j) {
      if (j == i || all[j].members.size() > all[i].members.size()) continue;
      if (!bits[j].SubsetOf(bits[i])) continue;
      // Strict subset, or an equal set that appeared earlier.
      drop = all[j].members.size() < all[i].members.size() || j < i;
    }
    if (!drop) kept.push_back(all[i]);
  }
  return kept;
}

// One constraint per unordered pair in lexicographic (x, y) order, optionally
// reduced to the distinct minimal sets.
inline std::vector<ResolvingConstraint> ConstraintSystem(const Graph& g,
                                                         bool reduce) {
  if (g.order() < 2) throw std::invalid_argument("constraint system needs n >= 2");
  const auto dm = AllPairsDistances(g);
  std::vector<ResolvingConstraint> all;
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = x + 1; y < g.order(); ++y) {
      all.push_back(ComputeResolvingConstraint(dm, x, y));
    }
  }
  return reduce ? ReduceConstraints(all, g.order()) : all;
}

// Union of the members' systems, reduced jointly.
inline std::vector<ResolvingConstraint> ConstraintSystem(const GraphFamily& fam,
                                                         bool reduce) {
  std::vector<ResolvingConstraint> all;
  for (const auto& g : fam.members()) {
    auto part = ConstraintSystem(g, false);
    all.insert(all.end(), part.begin(), part.end());
  }
  return reduce ? ReduceConstraints(all, fam.order()) : all;
}

inline CoveringLp ToCoveringLp(const std::vector<ResolvingConstraint>& system,
                               int n) {
  CoveringLp lp{n, {}};
  lp.cover_sets.reserve(system.size());
  for (const auto& c : system) lp.cover_sets.push_back(c.members);
  return lp;
}

struct TwinPartition {
  std::vector<std::vector<Vertex>> classes;  // sorted by smallest member
  std::vector<int> class_of;                 // vertex -> index into classes

  const std::vector<Vertex>& ClassOf(Vertex v) const { return classes[class_of[v]]; }
  bool AllNontrivial() const {
    return std::all_of(classes.begin(), classes.end(),
                       [](const auto& c) { return c.size() >= 2; });
  }
};

// N(u) - {w} == N(w) - {u}.
inline bool AreTwins(const Graph& g, Vertex u, Vertex w) {
  if (u == w) return true;
  std::vector<Vertex> nu;
  std::vector<Vertex> nw;
  for (Vertex x : g.neighbors(u)) {
    if (x != w) nu.push_back(x);
  }
  for (Vertex x : g.neighbors(w)) {
    if (x != u) nw.push_back(x);
  }
  return nu == nw;
}

inline TwinPartition ComputeTwinPartition(const Graph& g) {
  TwinPartition out;
  out.class_of.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (std::size_t c = 0; c < out.classes.size(); ++c) {
      if (AreTwins(g, out.classes[c].front(), v)) {
        out.classes[c].push_back(v);
        out.class_of[v] = static_cast<int>(c);
        break;
      }
    }
    if (out.class_of[v] < 0) {
      out.class_of[v] = static_cast<int>(out.classes.size());
      out.classes.push_back({v});
    }
  }
  return out;
}

// r(G): the smallest |R{x,y}| over all pairs.
inline int MinConstraintSize(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("r(G) needs n >= 2");
  const auto dm = AllPairsDistances(g);
  std::size_t best = static_cast<std::size_t>(g.order());
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = x + 1; y < g.order(); ++y) {
      best = std::min(best, ComputeResolvingConstraint(dm, x, y).members.size());
    }
  }
  return static_cast<int>(best);
}

struct ExteriorMajor {
  Vertex vertex = 0;
  int terminal_degree = 0;
  std::vector<Vertex> terminals;
};

struct TreeProfile {
  int sigma = 0;  // number of end-vertices
  std::vector<ExteriorMajor> exterior_majors;
  int ex = 0;
  int ex1 = 0;
};

// An end-vertex is terminal for the major vertex (degree >= 3) that is
// strictly closer to it than every other major vertex; equidistant
// end-vertices are terminal for none.
inline TreeProfile ComputeTreeProfile(const Graph& g) {
  if (!IsTree(g)) throw std::invalid_argument("tree profile needs a tree");
  TreeProfile out;
  std::vector<Vertex> majors;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) ++out.sigma;
    if (g.degree(v) >= 3) majors.push_back(v);
  }
  std::vector<ExteriorMajor> by_major(majors.size());
  for (std::size_t i = 0; i < majors.size(); ++i) by_major[i].vertex = majors[i];
  for (Vertex leaf = 0; leaf < g.order(); ++leaf) {
    if (g.degree(leaf) != 1 || majors.empty()) continue;
    const auto dist = BfsDistances(g, leaf);
    std::size_t nearest = 0;
    bool unique = true;
    for (std::size_t i = 1; i < majors.size(); ++i) {
      if (dist[majors[i]] < dist[majors[nearest]]) {
        nearest = i;
        unique = true;
      } else if (dist[majors[i]] == dist[majors[nearest]]) {
        unique = false;
      }
    }
    if (unique) by_major[nearest].terminals.push_back(leaf);
  }
  for (auto& m : by_major) {
    m.terminal_degree = static_cast<int>(m.terminals.size());
    if (m.terminal_degree == 0) continue;
    ++out.ex;
    if (m.terminal_degree == 1) ++out.ex1;
    out.exterior_majors.push_back(std::move(m));
  }
  return out;
}

// Number of members in which u lies in a twin class of size >= 2.
inline int FamilyTwinMultiplicity(const GraphFamily& fam, Vertex u) {
  if (u < 0 || u >= fam.order()) throw std::invalid_argument("vertex out of range");
  int count = 0;
  for (const auto& g : fam.members()) {
    if (ComputeTwinPartition(g).ClassOf(u).size() >= 2) ++count;
  }
  return count;
}

}  // namespace fracdim

#endif  // FRACDIM_METRIC_H_
