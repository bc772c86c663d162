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

#include "fracdim/generators.h"

#include <string>

#include "fracdim/error.h"
#include "fracdim/metric.h"
#include "fracdim/oracle.h"
#include "gtest/gtest.h"

namespace fracdim {
namespace {

TEST(SpecParserTest, NestedArguments) {
  const FamilySpec s = ParseSpec(" relabel( pair(cycle(5)) , 7 )");
  EXPECT_EQ(s.kind, "relabel");
  ASSERT_EQ(s.children.size(), 1u);
  EXPECT_EQ(s.children[0].kind, "pair");
  EXPECT_EQ(s.children[0].children[0].params, (std::vector<std::int64_t>{5}));
  EXPECT_EQ(s.params, (std::vector<std::int64_t>{7}));
  EXPECT_EQ(s.ToString(), "relabel(pair(cycle(5)),7)");
}

TEST(SpecParserTest, ListArgument) {
  const FamilySpec s = ParseSpec("bouquet([3,4,5])");
  EXPECT_EQ(s.list, (std::vector<std::int64_t>{3, 4, 5}));
  EXPECT_EQ(ParseSpec(s.ToString()), s);
}

TEST(SpecParserTest, RejectsMalformedText) {
  for (const char* bad : {"", "cycle(", "cycle(5", "cycle(5))", "cycle(,)", "(5)", "cycle(5,)",
                          "bouquet([3,)", "cycle(5) x"}) {
    EXPECT_THROW(ParseSpec(bad), ParseError) << bad;
  }
}

TEST(GenerateTest, RejectsOutOfRangeAndUnknown) {
  EXPECT_THROW(Generate("cycle(2)"), std::invalid_argument);
  EXPECT_THROW(Generate("wheel(3)"), std::invalid_argument);
  EXPECT_THROW(Generate("star_family(3)"), std::invalid_argument);
  EXPECT_THROW(Generate("labeled(3,8)"), std::invalid_argument);
  EXPECT_THROW(Generate("nosuch(3)"), std::invalid_argument);
  EXPECT_THROW(Generate("path(3,4)"), std::invalid_argument);
  EXPECT_THROW(GenerateGraph("fig3"), std::invalid_argument);
}

TEST(GenerateTest, BasicShapes) {
  EXPECT_TRUE(IsPath(GenerateGraph("path(7)")));
  EXPECT_TRUE(IsCycle(GenerateGraph("cycle(7)")));
  EXPECT_TRUE(IsComplete(GenerateGraph("complete(6)")));
  const Graph w = GenerateGraph("wheel(8)");
  EXPECT_EQ(w.degree(0), 7);
  EXPECT_EQ(w.size(), 14);
  const Graph p = GenerateGraph("petersen");
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3);
  EXPECT_EQ(Diameter(p), 2u);
  EXPECT_EQ(MinConstraintSize(p), 6);
}

TEST(GenerateTest, BouquetGluesCyclesAtZero) {
  const Graph b = GenerateGraph("bouquet(3)");
  EXPECT_EQ(b.order(), 7);
  EXPECT_EQ(b.degree(0), 6);
  const Graph mix = GenerateGraph("bouquet([3,4,5])");
  EXPECT_EQ(mix.order(), 10);
  EXPECT_EQ(mix.size(), 12);
}

TEST(GenerateTest, FigureFamiliesHaveCommonOrder) {
  EXPECT_EQ(Generate("fig1a").size(), 3u);
  EXPECT_EQ(Generate("fig1b").size(), 3u);
  EXPECT_EQ(Generate("fig2").order(), 12);
  EXPECT_EQ(Generate("fig3").size(), 5u);
  EXPECT_EQ(Generate("fig3(1,2,4)").size(), 3u);
  const GraphFamily fig2 = Generate("fig2");
  for (const auto& g : fig2.members()) EXPECT_TRUE(IsTree(g));
  const GraphFamily fig3 = Generate("fig3");
  for (const auto& g : fig3.members()) EXPECT_TRUE(IsTree(g));
}

TEST(GenerateTest, UnicyclicTemplatesHaveDiameterThreeBothWays) {
  for (const char* kind : {"unicyclic_a", "unicyclic_b", "unicyclic_d"}) {
    for (int a = 1; a <= 5; ++a) {
      for (int b = 1; b <= 5; ++b) {
        const std::string spec =
            std::string(kind) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        const Graph g = GenerateGraph(spec);
        EXPECT_TRUE(IsUnicyclic(g)) << spec;
        EXPECT_EQ(Diameter(g), 3u) << spec;
        EXPECT_EQ(Diameter(Complement(g)), 3u) << spec;
      }
    }
  }
  for (int a = 1; a <= 5; ++a) {
    const Graph g = GenerateGraph("unicyclic_c(" + std::to_string(a) + ")");
    EXPECT_EQ(Diameter(g), 3u);
    EXPECT_EQ(Diameter(Complement(g)), 3u);
  }
}

TEST(GenerateTest, ExceptionalGraphs) {
  EXPECT_EQ(GenerateGraph("h1"), GenerateGraph("kite(4)"));
  EXPECT_FALSE(HasFixedPointFreeTwinPermutation(GenerateGraph("kite(4)")));
  EXPECT_EQ(GenerateGraph("h2").order(), 5);
  EXPECT_EQ(GenerateGraph("h3").order(), 6);
  EXPECT_TRUE(IsUnicyclic(GenerateGraph("h3")));
}

TEST(GenerateTest, GapFamilies) {
  const GraphFamily stars = Generate("star_family(5)");
  EXPECT_EQ(stars.size(), 5u);
  for (std::size_t c = 0; c < 5; ++c) EXPECT_EQ(stars[c].degree(static_cast<Vertex>(c)), 4);
  for (int k = 3; k <= 6; ++k) {
    const GraphFamily a = Generate("remark_a_family(" + std::to_string(k) + ")");
    const GraphFamily b = Generate("remark_b_family(" + std::to_string(k) + ")");
    EXPECT_EQ(a.order(), 3 * k);
    EXPECT_EQ(b.order(), k + 3);
    for (const auto& g : a.members()) EXPECT_TRUE(IsTree(g));
    for (const auto& g : b.members()) EXPECT_TRUE(IsTree(g));
  }
  const Graph t = GenerateGraph("fig5_tree(3)");
  EXPECT_EQ(t.order(), 12);
  EXPECT_TRUE(IsTree(t));
}

TEST(GenerateTest, PathFamilies) {
  const GraphFamily shared = Generate("path_family(6,shared_end)");
  for (const auto& g : shared.members()) {
    EXPECT_TRUE(IsPath(g));
    EXPECT_EQ(g.degree(0), 1);
  }
  const GraphFamily rot = Generate("path_family(6,rotations)");
  EXPECT_EQ(rot.size(), 6u);
  for (Vertex v = 0; v < 6; ++v) {
    bool interior_somewhere = false;
    for (const auto& g : rot.members()) interior_somewhere = interior_somewhere || g.degree(v) == 2;
    EXPECT_TRUE(interior_somewhere);
  }
}

TEST(GenerateTest, SeededGeneratorsAreDeterministic) {
  for (const char* spec : {"random_tree(12,5)", "random_unicyclic(9,3)",
                           "random_connected(10,30,8)", "random_family(3,8,40,2)",
                           "random_path_family(7,3,1)", "relabel(fig3,9)"}) {
    const GraphFamily a = Generate(spec);
    const GraphFamily b = Generate(spec);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]) << spec;
  }
  EXPECT_NE(GenerateGraph("random_tree(12,5)"), GenerateGraph("random_tree(12,6)"));
}

TEST(GenerateTest, RandomShapes) {
  for (int seed = 0; seed < 50; ++seed) {
    const std::string s = std::to_string(seed);
    EXPECT_TRUE(IsTree(GenerateGraph("random_tree(11," + s + ")")));
    EXPECT_TRUE(IsUnicyclic(GenerateGraph("random_unicyclic(9," + s + ")")));
    EXPECT_TRUE(IsConnected(GenerateGraph("random_connected(9,20," + s + ")")));
  }
}

TEST(GenerateTest, LabeledEnumeratesPairsLexicographically) {
  EXPECT_EQ(GenerateGraph("labeled(4,1)"), Graph(4, {{0, 1}}));
  EXPECT_EQ(GenerateGraph("labeled(4,8)"), Graph(4, {{1, 2}}));
  EXPECT_EQ(GenerateGraph("labeled(4,63)"), GenerateGraph("complete(4)"));
}

TEST(GenerateTest, Combinators) {
  const GraphFamily p = Generate("pair(path(4))");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[1], Complement(p[0]));
  EXPECT_EQ(Generate("family(path(4),cycle(4),star(4))").size(), 3u);
  EXPECT_THROW(Generate("family(path(4),cycle(5))"), std::invalid_argument);
  const GraphFamily r = Generate("relabel(fig1a,3)");
  const GraphFamily o = Generate("fig1a");
  for (std::size_t i = 0; i < r.size(); ++i) {
    EXPECT_EQ(r[i].size(), o[i].size());
  }
}

}  // namespace
}  // namespace fracdim
