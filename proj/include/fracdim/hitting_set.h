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

#ifndef FRACDIM_HITTING_SET_H_
#define FRACDIM_HITTING_SET_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "fracdim/covering_lp.h"

namespace fracdim {

inline constexpr int kMaxHittingSetVars = 64;

namespace internal {

// Iterative-deepening branch and bound over the cardinality budget. Branches
// on the uncovered set with the fewest admissible elements; an element that
// failed in one branch is excluded from its later siblings.
class HittingSetSearch {
 public:
  HittingSetSearch(std::vector<std::uint64_t> sets, std::vector<int> order)
      : sets_(std::move(sets)), order_(std::move(order)) {}

  bool Run(int budget, std::uint64_t& solution) {
    return Search(0, 0, budget, solution);
  }

 private:
  bool Search(std::uint64_t chosen, std::uint64_t excluded, int budget,
              std::uint64_t& solution) {
    int best = -1;
    int best_count = 65;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (sets_[i] & chosen) continue;
      const int count = std::popcount(sets_[i] & ~excluded);
      if (count == 0) return false;
      if (count < best_count) {
        best_count = count;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) {
      solution = chosen;
      return true;
    }
    if (budget == 0) return false;
    const std::uint64_t candidates = sets_[best] & ~excluded;
    for (int v : order_) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (!(candidates & bit)) continue;
      if (Search(chosen | bit, excluded, budget - 1, solution)) return true;
      excluded |= bit;
    }
    return false;
  }

  std::vector<std::uint64_t> sets_;
  std::vector<int> order_;
};

}  // namespace internal

// Smallest S with S intersecting every cover set, as sorted variable indices.
// Supports n_vars <= 64; ties resolve deterministically.
inline std::vector<int> MinHittingSet(const CoveringLp& input) {
  const CoveringLp lp = NormalizeCoveringLp(input);
  if (lp.n_vars > kMaxHittingSetVars) {
    throw std::invalid_argument("hitting-set search supports at most 64 variables");
  }
  std::vector<std::uint64_t> masks;
  std::vector<int> membership(static_cast<std::size_t>(lp.n_vars), 0);
  for (const auto& set : lp.cover_sets) {
    std::uint64_t mask = 0;
    for (int v : set) {
      mask |= std::uint64_t{1} << v;
      ++membership[v];
    }
    masks.push_back(mask);
  }
  std::vector<int> order(static_cast<std::size_t>(lp.n_vars));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return membership[a] > membership[b];
  });

  std::vector<int> result;
  if (masks.empty()) return result;
  const mpz_class lower = SolveCoveringLp(lp).value.Ceil();
  internal::HittingSetSearch search(std::move(masks), std::move(order));
  for (int budget = static_cast<int>(lower.get_si()); budget <= lp.n_vars; ++budget) {
    std::uint64_t solution = 0;
    if (search.Run(budget, solution)) {
      for (int v = 0; v < lp.n_vars; ++v) {
        if (solution & (std::uint64_t{1} << v)) result.push_back(v);
      }
      return result;
    }
  }
  throw InvariantViolation("no hitting set found within n_vars elements");
}

}  // namespace fracdim

#endif  // FRACDIM_HITTING_SET_H_
