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

#include "fracdim/metric.h"

#include <set>
#include <string>

#include "fracdim/covering_lp.h"
#include "fracdim/generators.h"
#include "gtest/gtest.h"
#include "reference.h"

namespace fracdim {
namespace {

TEST(ResolvingConstraintTest, SixCyclePairs) {
  const auto dm = AllPairsDistances(GenerateGraph("cycle(6)"));
  const ResolvingConstraint antipodal = ComputeResolvingConstraint(dm, 3, 0);
  EXPECT_EQ(antipodal.x, 0);
  EXPECT_EQ(antipodal.y, 3);
  EXPECT_EQ(antipodal.members.size(), 6u);
  EXPECT_EQ(ComputeResolvingConstraint(dm, 0, 2).members, (std::vector<Vertex>{0, 2, 3, 5}));
  EXPECT_THROW(ComputeResolvingConstraint(dm, 1, 1), std::invalid_argument);
}

TEST(ResolvingConstraintTest, DisconnectedPairUsesInfinity) {
  const auto dm = AllPairsDistances(Graph(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(ComputeResolvingConstraint(dm, 0, 2).members, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(ComputeResolvingConstraint(dm, 0, 1).members, (std::vector<Vertex>{0, 1}));
}

TEST(ConstraintSystemTest, PetersenReducedSetsHaveSizeSix) {
  const auto sys = ConstraintSystem(GenerateGraph("petersen"), true);
  ASSERT_FALSE(sys.empty());
  for (const auto& c : sys) EXPECT_EQ(c.members.size(), 6u);
}

TEST(ConstraintSystemTest, MinConstraintSizes) {
  EXPECT_EQ(MinConstraintSize(GenerateGraph("cycle(5)")), 4);
  EXPECT_EQ(MinConstraintSize(GenerateGraph("petersen")), 6);
  EXPECT_EQ(MinConstraintSize(GenerateGraph("complete(7)")), 2);
}

TEST(ConstraintSystemTest, UnreducedMatchesReference) {
  for (const char* spec : {"petersen", "fig2", "unicyclic_b(2,3)", "complement(cycle(7))"}) {
    const GraphFamily fam = Generate(spec);
    const auto sys = ConstraintSystem(fam, false);
    const auto want = ref::AllConstraints(fam.members());
    ASSERT_EQ(sys.size(), want.size()) << spec;
    for (std::size_t i = 0; i < sys.size(); ++i) EXPECT_EQ(sys[i].members, want[i]) << spec;
  }
}

TEST(ConstraintSystemTest, ReducedSetsAreMinimalAndDistinct) {
  const GraphFamily fam = Generate("fig3");
  const auto all = ConstraintSystem(fam, false);
  const auto reduced = ConstraintSystem(fam, true);
  std::set<std::vector<Vertex>> seen;
  for (const auto& c : reduced) {
    EXPECT_TRUE(seen.insert(c.members).second);
    for (const auto& d : all) {
      const bool subset = std::includes(c.members.begin(), c.members.end(), d.members.begin(),
                                        d.members.end());
      EXPECT_FALSE(subset && d.members.size() < c.members.size());
    }
  }
  for (const auto& d : all) {
    bool covered = false;
    for (const auto& c : reduced) {
      covered = covered || std::includes(d.members.begin(), d.members.end(),
                                         c.members.begin(), c.members.end());
    }
    EXPECT_TRUE(covered);
  }
}

TEST(ConstraintSystemTest, ReductionPreservesLpValue) {
  for (const char* spec : {"fig1a", "fig1b", "fig3", "star_family(5)", "wheel(7)"}) {
    const GraphFamily fam = Generate(spec);
    const auto full = SolveCoveringLp(ToCoveringLp(ConstraintSystem(fam, false), fam.order()));
    const auto red = SolveCoveringLp(ToCoveringLp(ConstraintSystem(fam, true), fam.order()));
    EXPECT_EQ(full.value, red.value) << spec;
  }
}

TEST(TwinTest, FigureTwoFirstMember) {
  const TwinPartition tp = ComputeTwinPartition(Generate("fig2")[0]);
  std::vector<std::vector<Vertex>> nontrivial;
  for (const auto& c : tp.classes) {
    if (c.size() >= 2) nontrivial.push_back(c);
  }
  EXPECT_EQ(nontrivial, (std::vector<std::vector<Vertex>>{{0, 1}, {6, 7}}));
}

TEST(TwinTest, FigureThreeFirstMember) {
  const TwinPartition tp = ComputeTwinPartition(Generate("fig3")[0]);
  std::vector<std::vector<Vertex>> nontrivial;
  for (const auto& c : tp.classes) {
    if (c.size() >= 2) nontrivial.push_back(c);
  }
  EXPECT_EQ(nontrivial, (std::vector<std::vector<Vertex>>{{0, 1}}));
}

TEST(TwinTest, CompleteAndEmptyGraphsAreSingleClass) {
  EXPECT_EQ(ComputeTwinPartition(GenerateGraph("complete(5)")).classes.size(), 1u);
  EXPECT_EQ(ComputeTwinPartition(Graph(4)).classes.size(), 1u);
  EXPECT_EQ(ComputeTwinPartition(GenerateGraph("path(5)")).classes.size(), 5u);
}

TEST(TwinTest, PartitionMatchesReferenceOnLabeledGraphs) {
  for (int code = 0; code < 1024; code += 7) {
    const Graph g = GenerateGraph("labeled(5," + std::to_string(code) + ")");
    const TwinPartition tp = ComputeTwinPartition(g);
    for (Vertex u = 0; u < 5; ++u) {
      for (Vertex w = 0; w < 5; ++w) {
        EXPECT_EQ(tp.class_of[u] == tp.class_of[w], u == w || ref::Twins(g, u, w));
      }
    }
    EXPECT_EQ(tp.AllNontrivial(), ref::AllTwinClassesNontrivial(g));
  }
}

TEST(TwinMultiplicityTest, FigureThreeIsConstantTwo) {
  const GraphFamily fam = Generate("fig3");
  for (Vertex u = 0; u < fam.order(); ++u) EXPECT_EQ(FamilyTwinMultiplicity(fam, u), 2);
}

TEST(TreeProfileTest, FigureTwoFirstMember) {
  const TreeProfile p = ComputeTreeProfile(Generate("fig2")[0]);
  EXPECT_EQ(p.sigma, 4);
  EXPECT_EQ(p.ex, 2);
  EXPECT_EQ(p.ex1, 0);
  ASSERT_EQ(p.exterior_majors.size(), 2u);
  std::set<std::pair<Vertex, int>> got;
  for (const auto& m : p.exterior_majors) got.insert({m.vertex, m.terminal_degree});
  EXPECT_EQ(got, (std::set<std::pair<Vertex, int>>{{5, 2}, {11, 2}}));
}

TEST(TreeProfileTest, PathHasNoMajors) {
  const TreeProfile p = ComputeTreeProfile(GenerateGraph("path(6)"));
  EXPECT_EQ(p.sigma, 2);
  EXPECT_TRUE(p.exterior_majors.empty());
  EXPECT_THROW(ComputeTreeProfile(GenerateGraph("cycle(4)")), std::invalid_argument);
}

TEST(TreeProfileTest, MatchesReferenceOnRandomTrees) {
  for (int seed = 1; seed <= 100; ++seed) {
    const Graph t = GenerateGraph("random_tree(" + std::to_string(4 + seed % 12) + "," +
                                  std::to_string(seed) + ")");
    const TreeProfile p = ComputeTreeProfile(t);
    EXPECT_EQ(Rational(p.sigma - p.ex1, 2), ref::TreeFormula(t)) << seed;
    if (p.ex >= 1) {
      int terminals = 0;
      for (const auto& m : p.exterior_majors) {
        EXPECT_GE(m.terminal_degree, 1);
        terminals += m.terminal_degree;
      }
      EXPECT_EQ(terminals, p.sigma) << seed;
    }
  }
}

class MetricPropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(MetricPropertyTest, TwinAndConstraintInvariants) {
  const int seed = GetParam();
  const std::string spec = "random_connected(" + std::to_string(3 + seed % 8) + "," +
                           std::to_string(seed * 13 % 90) + "," + std::to_string(seed) + ")";
  const Graph g = GenerateGraph(spec);
  const Graph gc = Complement(g);
  const auto d = AllPairsDistances(g);
  const auto dc = AllPairsDistances(gc);
  const TwinPartition tp = ComputeTwinPartition(g);
  for (const auto& cls : tp.classes) {
    int edges = 0;
    for (Vertex u : cls) {
      for (Vertex w : cls) edges += u < w && g.HasEdge(u, w);
    }
    const int pairs = static_cast<int>(cls.size() * (cls.size() - 1) / 2);
    EXPECT_TRUE(edges == 0 || edges == pairs) << spec;
  }
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = x + 1; y < g.order(); ++y) {
      const auto r = ComputeResolvingConstraint(d, x, y).members;
      EXPECT_TRUE(std::binary_search(r.begin(), r.end(), x));
      EXPECT_TRUE(std::binary_search(r.begin(), r.end(), y));
      const bool twins = tp.class_of[x] == tp.class_of[y];
      EXPECT_EQ(twins, (r == std::vector<Vertex>{x, y})) << spec;
      if (twins) EXPECT_EQ(ComputeResolvingConstraint(dc, x, y).members, r) << spec;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, MetricPropertyTest, ::testing::Range(1, 101));

}  // namespace
}  // namespace fracdim
