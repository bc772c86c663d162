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

// Exact solver for box-constrained covering LPs:
//
//   minimize    sum_v x_v
//   subject to  sum_{v in S} x_v >= 1   for every cover set S
//               0 <= x_v <= 1
//
// Two-phase primal simplex on a dense rational tableau with Bland's rule.
// Every returned solution carries a dual certificate (y per cover row, z per
// upper-bound row) that is re-checked by direct substitution before return.

#ifndef FRACDIM_COVERING_LP_H_
#define FRACDIM_COVERING_LP_H_

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracdim/error.h"
#include "fracdim/rational.h"

namespace fracdim {

struct CoveringLp {
  int n_vars = 0;
  // Each set lists variable indices; duplicates and supersets are allowed.
  std::vector<std::vector<int>> cover_sets;
};

enum class LpStatus { kOptimal, kInfeasible };

struct LpSolution {
  LpStatus status = LpStatus::kOptimal;
  Rational value;
  std::vector<Rational> assignment;
  // cover_sets.size() cover-row duals followed by n_vars upper-bound duals.
  std::vector<Rational> dual;
};

// Sorts and deduplicates every set; rejects out-of-range indices, empty sets
// and n_vars < 1.
inline CoveringLp NormalizeCoveringLp(CoveringLp lp) {
  if (lp.n_vars < 1) throw std::invalid_argument("covering LP needs n_vars >= 1");
  for (auto& set : lp.cover_sets) {
    if (set.empty()) throw std::invalid_argument("trivially infeasible constraint");
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.front() < 0 || set.back() >= lp.n_vars) {
      throw std::invalid_argument("cover set index out of range");
    }
  }
  return lp;
}

// Checks primal feasibility, value = sum(assignment), dual feasibility and
// equality of primal and dual objectives. Returns a description of the first
// failure, or nullopt when the certificate is valid.
inline std::optional<std::string> CheckCertificate(const CoveringLp& lp,
                                                   const LpSolution& sol) {
  const auto n = static_cast<std::size_t>(lp.n_vars);
  const auto m = lp.cover_sets.size();
  if (sol.status != LpStatus::kOptimal) return "solution is not optimal";
  if (sol.assignment.size() != n) return "assignment has wrong length";
  if (sol.dual.size() != m + n) return "dual has wrong length";
  Rational total;
  for (const auto& x : sol.assignment) {
    if (x < 0 || x > 1) return "assignment entry outside [0,1]";
    total += x;
  }
  if (total != sol.value) return "value differs from sum of assignment";
  for (std::size_t i = 0; i < m; ++i) {
    Rational covered;
    for (int v : lp.cover_sets[i]) covered += sol.assignment[v];
    if (covered < 1) return "cover constraint " + std::to_string(i) + " violated";
  }
  std::vector<Rational> load(n);
  Rational dual_value;
  for (std::size_t i = 0; i < m; ++i) {
    const Rational& y = sol.dual[i];
    if (y < 0) return "negative cover dual";
    dual_value += y;
    for (int v : lp.cover_sets[i]) load[v] += y;
  }
  for (std::size_t v = 0; v < n; ++v) {
    const Rational& z = sol.dual[m + v];
    if (z < 0) return "negative upper-bound dual";
    dual_value -= z;
    if (load[v] - z > 1) return "dual constraint " + std::to_string(v) + " violated";
  }
  if (dual_value != sol.value) return "dual objective differs from primal value";
  return std::nullopt;
}

namespace internal {

class CoveringTableau {
 public:
  explicit CoveringTableau(const CoveringLp& lp)
      : n_(static_cast<std::size_t>(lp.n_vars)),
        m_(lp.cover_sets.size()),
        rows_(m_ + n_),
        cols_(2 * n_ + 2 * m_),
        a_(rows_, std::vector<mpq_class>(cols_)),
        rhs_(rows_, mpq_class(1)),
        basis_(rows_),
        barred_(cols_, false) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (int v : lp.cover_sets[i]) a_[i][static_cast<std::size_t>(v)] = 1;
      a_[i][Surplus(i)] = -1;
      a_[i][Artificial(i)] = 1;
      basis_[i] = Artificial(i);
    }
    for (std::size_t v = 0; v < n_; ++v) {
      a_[m_ + v][v] = 1;
      a_[m_ + v][Slack(v)] = 1;
      basis_[m_ + v] = Slack(v);
    }
  }

  std::size_t Surplus(std::size_t i) const { return n_ + i; }
  std::size_t Slack(std::size_t v) const { return n_ + m_ + v; }
  std::size_t Artificial(std::size_t i) const { return 2 * n_ + m_ + i; }
  bool IsArtificial(std::size_t j) const { return j >= 2 * n_ + m_; }

  LpSolution Solve() {
    // Phase 1: minimize the sum of artificials.
    std::vector<mpq_class> cost(cols_);
    for (std::size_t i = 0; i < m_; ++i) cost[Artificial(i)] = 1;
    LoadObjective(cost);
    RunSimplex();
    if (obj_rhs_ != 0) {
      LpSolution out;
      out.status = LpStatus::kInfeasible;
      return out;
    }
    DriveOutArtificials();
    for (std::size_t i = 0; i < m_; ++i) barred_[Artificial(i)] = true;

    // Phase 2: minimize sum x.
    std::fill(cost.begin(), cost.end(), mpq_class(0));
    for (std::size_t v = 0; v < n_; ++v) cost[v] = 1;
    LoadObjective(cost);
    RunSimplex();
    return Extract();
  }

 private:
  // obj_[j] = c_j - c_B B^-1 A_j; obj_rhs_ = c_B B^-1 b.
  void LoadObjective(const std::vector<mpq_class>& cost) {
    obj_ = cost;
    obj_rhs_ = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      const mpq_class& cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (a_[r][j] != 0) obj_[j] -= cb * a_[r][j];
      }
      obj_rhs_ += cb * rhs_[r];
    }
  }

  void RunSimplex() {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!barred_[j] && sgn(obj_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return;
      std::size_t leave = rows_;
      mpq_class best_ratio;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (sgn(a_[r][enter]) <= 0) continue;
        mpq_class ratio = rhs_[r] / a_[r][enter];
        if (leave == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      // Every variable is bounded by a row, so the LP is never unbounded.
      if (leave == rows_) throw InvariantViolation("simplex found an unbounded ray");
      Pivot(leave, enter);
    }
  }

  void DriveOutArtificials() {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!IsArtificial(basis_[r])) continue;
      std::size_t col = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!IsArtificial(j) && a_[r][j] != 0) {
          col = j;
          break;
        }
      }
      // Surplus and slack columns give the constraint matrix full row rank.
      if (col == cols_) throw InvariantViolation("redundant row after phase 1");
      Pivot(r, col);
    }
  }

  void Pivot(std::size_t r, std::size_t c) {
    const mpq_class inv = 1 / a_[r][c];
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (a_[r][j] != 0) {
        a_[r][j] *= inv;
        support.push_back(j);
      }
    }
    rhs_[r] *= inv;
    auto eliminate = [&](std::vector<mpq_class>& row, mpq_class& row_rhs) {
      if (row[c] == 0) return;
      const mpq_class factor = row[c];
      for (std::size_t j : support) row[j] -= factor * a_[r][j];
      row_rhs -= factor * rhs_[r];
    };
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != r) eliminate(a_[i], rhs_[i]);
    }
    // The objective row stores c - c_B B^-1 A with rhs c_B B^-1 b, so it is
    // updated with the opposite sign on the right-hand side.
    if (obj_[c] != 0) {
      const mpq_class factor = obj_[c];
      for (std::size_t j : support) obj_[j] -= factor * a_[r][j];
      obj_rhs_ += factor * rhs_[r];
    }
    basis_[r] = c;
  }

  LpSolution Extract() const {
    LpSolution out;
    out.status = LpStatus::kOptimal;
    out.assignment.assign(n_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < n_) out.assignment[basis_[r]] = Rational(rhs_[r]);
    }
    for (const auto& x : out.assignment) out.value += x;
    out.dual.reserve(m_ + n_);
    for (std::size_t i = 0; i < m_; ++i) out.dual.emplace_back(obj_[Surplus(i)]);
    for (std::size_t v = 0; v < n_; ++v) out.dual.emplace_back(obj_[Slack(v)]);
    return out;
  }

  std::size_t n_, m_, rows_, cols_;
  std::vector<std::vector<mpq_class>> a_;
  std::vector<mpq_class> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<bool> barred_;
  std::vector<mpq_class> obj_;
  mpq_class obj_rhs_;
};

}  // namespace internal

// Deterministic: fixed pivot rule, no randomness. Throws std::invalid_argument
// for invalid input and InvariantViolation if the certificate check fails.
inline LpSolution SolveCoveringLp(const CoveringLp& input) {
  const CoveringLp lp = NormalizeCoveringLp(input);
  internal::CoveringTableau tableau(lp);
  LpSolution sol = tableau.Solve();
  if (sol.status != LpStatus::kOptimal) {
    throw InvariantViolation("covering LP reported infeasible");
  }
  if (auto err = CheckCertificate(lp, sol)) {
    throw InvariantViolation("LP certificate rejected: " + *err);
  }
  return sol;
}

}  // namespace fracdim

#endif  // FRACDIM_COVERING_LP_H_
