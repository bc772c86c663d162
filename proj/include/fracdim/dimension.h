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

// Fractional and integral (simultaneous) metric dimension. Every quantity is
// the optimum of the covering problem over the jointly reduced resolving
// constraints of the family; a single graph is the one-member family.
//
// Disconnected members are accepted: distances to other components are
// infinite and compare equal only to each other.

#ifndef FRACDIM_DIMENSION_H_
#define FRACDIM_DIMENSION_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracdim/covering_lp.h"
#include "fracdim/error.h"
#include "fracdim/family.h"
#include "fracdim/hitting_set.h"
#include "fracdim/metric.h"
#include "fracdim/rational.h"

namespace fracdim {

struct DimensionResult {
  Rational value;
  std::vector<Rational> assignment;
  std::vector<Rational> certificate;
  std::size_t constraint_count = 0;
  CoveringLp lp;  // the reduced system that was solved
};

namespace internal {

inline CoveringLp ReducedLp(const GraphFamily& fam) {
  if (fam.order() < 2) throw std::invalid_argument("dimension needs n >= 2");
  return ToCoveringLp(ConstraintSystem(fam, /*reduce=*/true), fam.order());
}

}  // namespace internal

inline DimensionResult SimultaneousFractionalDimension(const GraphFamily& fam) {
  DimensionResult out;
  out.lp = internal::ReducedLp(fam);
  out.constraint_count = out.lp.cover_sets.size();
  LpSolution sol = SolveCoveringLp(out.lp);
  out.value = std::move(sol.value);
  out.assignment = std::move(sol.assignment);
  out.certificate = std::move(sol.dual);
  return out;
}

inline DimensionResult FractionalDimension(const Graph& g) {
  return SimultaneousFractionalDimension(GraphFamily({g}));
}

inline int SimultaneousDimension(const GraphFamily& fam) {
  return static_cast<int>(MinHittingSet(internal::ReducedLp(fam)).size());
}

inline int MetricDimension(const Graph& g) {
  return SimultaneousDimension(GraphFamily({g}));
}

struct BoundsReport {
  Rational max_dimf;
  Rational sum_dimf;
  Rational half_n;
  Rational sdf;
  int sd = 0;
  std::vector<Rational> per_member_dimf;
};

// max dim_f <= Sd_f <= min(sum dim_f, n/2) and Sd_f <= Sd; a violation
// raises InvariantViolation.
inline BoundsReport ComputeBoundsReport(const GraphFamily& fam) {
  if (fam.size() < 2) throw std::invalid_argument("bounds report needs k >= 2");
  BoundsReport out;
  for (const auto& g : fam.members()) {
    out.per_member_dimf.push_back(FractionalDimension(g).value);
    out.max_dimf = Max(out.max_dimf, out.per_member_dimf.back());
    out.sum_dimf += out.per_member_dimf.back();
  }
  out.half_n = Rational(fam.order(), 2);
  out.sdf = SimultaneousFractionalDimension(fam).value;
  out.sd = SimultaneousDimension(fam);
  if (!(out.max_dimf <= out.sdf && out.sdf <= Min(out.sum_dimf, out.half_n) &&
        out.sdf <= Rational(out.sd))) {
    throw InvariantViolation("bound sandwich violated: max " + out.max_dimf.ToString() +
                             ", sdf " + out.sdf.ToString() + ", sum " +
                             out.sum_dimf.ToString() + ", sd " + std::to_string(out.sd));
  }
  return out;
}

}  // namespace fracdim

#endif  // FRACDIM_DIMENSION_H_
