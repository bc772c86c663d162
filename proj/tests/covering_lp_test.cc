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

#include "fracdim/covering_lp.h"

#include <random>
#include <vector>

#include "fracdim/hitting_set.h"
#include "gtest/gtest.h"
#include "reference.h"

namespace fracdim {
namespace {

LpSolution SolveChecked(const CoveringLp& lp) {
  const LpSolution sol = SolveCoveringLp(lp);
  if (sol.status == LpStatus::kOptimal) {
    const CoveringLp norm = NormalizeCoveringLp(lp);
    EXPECT_EQ(ref::CertificateError(norm.n_vars, norm.cover_sets, sol.assignment, sol.dual,
                                    sol.value),
              "");
  }
  return sol;
}

TEST(CoveringLpTest, SingleSetNeedsOne) {
  const LpSolution sol = SolveChecked({3, {{0, 1, 2}}});
  EXPECT_EQ(sol.value, Rational(1));
}

TEST(CoveringLpTest, TriangleOfPairsIsThreeHalves) {
  const LpSolution sol = SolveChecked({3, {{0, 1}, {1, 2}, {0, 2}}});
  EXPECT_EQ(sol.value, Rational(3, 2));
}

TEST(CoveringLpTest, SingletonsForceUpperBounds) {
  const LpSolution sol = SolveChecked({4, {{0}, {1}, {2, 3}}});
  EXPECT_EQ(sol.value, Rational(3));
  EXPECT_EQ(sol.assignment[0], Rational(1));
  EXPECT_EQ(sol.assignment[1], Rational(1));
}

TEST(CoveringLpTest, DuplicateAndSupersetRowsAreHarmless) {
  const LpSolution sol = SolveChecked({3, {{0, 1}, {1, 0}, {0, 1, 2}, {1, 2}, {2, 0}}});
  EXPECT_EQ(sol.value, Rational(3, 2));
}

TEST(CoveringLpTest, EmptySetIsRejected) {
  EXPECT_THROW(SolveCoveringLp({2, {{0}, {}}}), std::invalid_argument);
}

TEST(CoveringLpTest, RejectsBadInput) {
  EXPECT_THROW(SolveCoveringLp({0, {}}), std::invalid_argument);
  EXPECT_THROW(SolveCoveringLp({2, {{2}}}), std::invalid_argument);
  EXPECT_THROW(SolveCoveringLp({2, {{-1}}}), std::invalid_argument);
}

TEST(CoveringLpTest, NoConstraintsGivesZero) {
  const LpSolution sol = SolveChecked({3, {}});
  EXPECT_EQ(sol.value, Rational(0));
}

TEST(CoveringLpTest, CertificateCheckerCatchesTampering) {
  const CoveringLp lp{3, {{0, 1}, {1, 2}, {0, 2}}};
  LpSolution sol = SolveCoveringLp(lp);
  EXPECT_FALSE(CheckCertificate(lp, sol).has_value());
  LpSolution bad = sol;
  bad.dual[0] = bad.dual[0] + Rational(1);
  EXPECT_TRUE(CheckCertificate(lp, bad).has_value());
  bad = sol;
  bad.assignment[0] = Rational(0);
  bad.assignment[1] = Rational(0);
  EXPECT_TRUE(CheckCertificate(lp, bad).has_value());
  bad = sol;
  bad.value = Rational(2);
  EXPECT_TRUE(CheckCertificate(lp, bad).has_value());
}

TEST(HittingSetTest, SmallCases) {
  EXPECT_EQ(MinHittingSet({3, {{0, 1}, {1, 2}, {0, 2}}}).size(), 2u);
  EXPECT_EQ(MinHittingSet({4, {{0, 1}, {2, 3}}}).size(), 2u);
  EXPECT_EQ(MinHittingSet({4, {}}).size(), 0u);
  EXPECT_THROW(MinHittingSet({kMaxHittingSetVars + 1, {{0}}}), std::invalid_argument);
}

class RandomCoveringTest : public ::testing::TestWithParam<int> {};

TEST_P(RandomCoveringTest, LpAndHittingSetAgreeWithReferences) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
  const int n = 2 + static_cast<int>(rng() % 10);
  const int m = 1 + static_cast<int>(rng() % 14);
  CoveringLp lp{n, {}};
  for (int i = 0; i < m; ++i) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v) {
      if (rng() % 3 == 0) s.push_back(v);
    }
    if (s.empty()) s.push_back(static_cast<int>(rng() % n));
    lp.cover_sets.push_back(s);
  }
  const LpSolution sol = SolveChecked(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  const std::vector<int> hs = MinHittingSet(lp);
  EXPECT_EQ(static_cast<int>(hs.size()), ref::BruteForceHittingSet(n, lp.cover_sets));
  for (const auto& s : lp.cover_sets) {
    bool hit = false;
    for (int v : s) hit = hit || std::find(hs.begin(), hs.end(), v) != hs.end();
    EXPECT_TRUE(hit);
  }
  // The relaxation never exceeds the integer optimum.
  EXPECT_LE(sol.value, Rational(static_cast<std::int64_t>(hs.size())));
  EXPECT_GE(sol.value, Rational(1));
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomCoveringTest, ::testing::Range(1, 201));

}  // namespace
}  // namespace fracdim
