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

// Small-graph isomorphism and vertex-transitivity by backtracking. Candidate
// images are pruned by a per-vertex signature (sorted distance profile) and
// by requiring every partial map to preserve pairwise distances.

#ifndef FRACDIM_AUTOMORPHISM_H_
#define FRACDIM_AUTOMORPHISM_H_

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "fracdim/graph.h"

namespace fracdim {

inline constexpr int kDefaultAutomorphismCap = 16;

namespace internal {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& from, const Graph& to)
      : n_(from.order()),
        d_from_(AllPairsDistances(from)),
        d_to_(AllPairsDistances(to)),
        sig_from_(Signatures(d_from_)),
        sig_to_(Signatures(d_to_)),
        image_(static_cast<std::size_t>(n_), -1),
        used_(static_cast<std::size_t>(n_), false) {}

  // Is there an isomorphism sending `source` to `target`?
  bool Exists(Vertex source, Vertex target) {
    std::fill(image_.begin(), image_.end(), -1);
    std::fill(used_.begin(), used_.end(), false);
    order_.clear();
    order_.push_back(source);
    for (Vertex v = 0; v < n_; ++v) {
      if (v != source) order_.push_back(v);
    }
    if (!Compatible(source, target)) return false;
    Assign(source, target);
    return Extend(1);
  }

 private:
  static std::vector<std::vector<Distance>> Signatures(const DistanceMatrix& d) {
    std::vector<std::vector<Distance>> out(static_cast<std::size_t>(d.order()));
    for (Vertex v = 0; v < d.order(); ++v) {
      for (Vertex w = 0; w < d.order(); ++w) out[v].push_back(d(v, w));
      std::sort(out[v].begin(), out[v].end());
    }
    return out;
  }

  bool Compatible(Vertex u, Vertex w) const {
    if (used_[w] || sig_from_[u] != sig_to_[w]) return false;
    for (Vertex p = 0; p < n_; ++p) {
      if (image_[p] >= 0 && d_from_(u, p) != d_to_(w, image_[p])) return false;
    }
    return true;
  }

  void Assign(Vertex u, Vertex w) {
    image_[u] = w;
    used_[w] = true;
  }
  void Unassign(Vertex u) {
    used_[image_[u]] = false;
    image_[u] = -1;
  }

  bool Extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex u = order_[depth];
    for (Vertex w = 0; w < n_; ++w) {
      if (!Compatible(u, w)) continue;
      Assign(u, w);
      if (Extend(depth + 1)) return true;
      Unassign(u);
    }
    return false;
  }

  int n_;
  DistanceMatrix d_from_;
  DistanceMatrix d_to_;
  std::vector<std::vector<Distance>> sig_from_;
  std::vector<std::vector<Distance>> sig_to_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
  std::vector<Vertex> order_;
};

inline void CheckCap(const Graph& g, int cap) {
  if (g.order() > cap) {
    throw std::invalid_argument("instance too large for exact automorphism search");
  }
}

}  // namespace internal

inline bool AreIsomorphic(const Graph& a, const Graph& b,
                          int cap = kDefaultAutomorphismCap) {
  internal::CheckCap(a, cap);
  if (a.order() != b.order() || a.size() != b.size()) return false;
  internal::IsomorphismSearch search(a, b);
  for (Vertex w = 0; w < b.order(); ++w) {
    if (search.Exists(0, w)) return true;
  }
  return false;
}

// True iff every vertex is the image of vertex 0 under some automorphism.
inline bool IsVertexTransitive(const Graph& g, int cap = kDefaultAutomorphismCap) {
  internal::CheckCap(g, cap);
  internal::IsomorphismSearch search(g, g);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (!search.Exists(0, v)) return false;
  }
  return true;
}

}  // namespace fracdim

#endif  // FRACDIM_AUTOMORPHISM_H_
