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

// Named graphs and graph families, addressed by spec strings such as
// "cycle(7)", "unicyclic_d(2,3)", "bouquet([3,4,5])" or
// "pair(random_tree(12,7))".
//
// Grammar:   spec := name [ "(" arg { "," arg } ")" ]
//            arg  := integer | "[" integer { "," integer } "]" | spec
//
// Randomized kinds take the seed as their last integer and draw from
// std::mt19937_64, whose output sequence is fixed by the C++ standard;
// bounded integers use rejection sampling so seeds are portable.

#ifndef FRACDIM_GENERATORS_H_
#define FRACDIM_GENERATORS_H_

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fracdim/error.h"
#include "fracdim/family.h"
#include "fracdim/graph.h"

namespace fracdim {

struct FamilySpec {
  std::string kind;
  std::vector<std::int64_t> params;
  std::vector<std::int64_t> list;  // bracketed argument, e.g. bouquet lengths
  std::vector<FamilySpec> children;

  // Canonical text: children first, then the list, then integers.
  std::string ToString() const {
    std::vector<std::string> args;
    for (const auto& c : children) args.push_back(c.ToString());
    if (!list.empty()) {
      std::string s = "[";
      for (std::size_t i = 0; i < list.size(); ++i) {
        s += (i ? "," : "") + std::to_string(list[i]);
      }
      args.push_back(s + "]");
    }
    for (auto p : params) args.push_back(std::to_string(p));
    if (args.empty()) return kind;
    std::string out = kind + "(";
    for (std::size_t i = 0; i < args.size(); ++i) out += (i ? "," : "") + args[i];
    return out + ")";
  }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

namespace internal {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  FamilySpec ParseAll() {
    FamilySpec spec = ParseSpec();
    SkipSpace();
    if (pos_ != text_.size()) Fail("trailing characters");
    return spec;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError("bad spec '" + std::string(text_) + "': " + what +
                     " at offset " + std::to_string(pos_));
  }
  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool Accept(char c) {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void Expect(char c) {
    if (!Accept(c)) Fail(std::string("expected '") + c + "'");
  }
  bool AtInteger() {
    SkipSpace();
    return pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-');
  }
  std::int64_t ParseInteger() {
    SkipSpace();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits.size() > 18) Fail("bad integer");
    return std::stoll(digits);
  }
  FamilySpec ParseSpec() {
    SkipSpace();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) Fail("expected a name");
    FamilySpec spec;
    spec.kind = std::string(text_.substr(start, pos_ - start));
    if (!Accept('(')) return spec;
    do {
      if (Accept('[')) {
        if (!spec.list.empty()) Fail("more than one list argument");
        do {
          spec.list.push_back(ParseInteger());
        } while (Accept(','));
        Expect(']');
      } else if (AtInteger()) {
        spec.params.push_back(ParseInteger());
      } else {
        spec.children.push_back(ParseSpec());
      }
    } while (Accept(','));
    Expect(')');
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Uniform integer in [0, bound) by rejection; portable across platforms.
inline std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

inline std::vector<Vertex> RandomPermutation(std::mt19937_64& rng, int n) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(UniformBelow(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

// Decodes a uniformly random Pruefer sequence.
inline Graph RandomTree(std::mt19937_64& rng, int n) {
  Graph g(n);
  if (n == 2) g.AddEdge(0, 1);
  if (n <= 2) return g;
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = static_cast<int>(UniformBelow(rng, static_cast<std::uint64_t>(n)));
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[c];
  for (int c : code) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    g.AddEdge(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) rest.push_back(v);
  }
  g.AddEdge(rest[0], rest[1]);
  return g;
}

inline Graph PathThrough(const std::vector<Vertex>& order, int n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) g.AddEdge(order[i], order[i + 1]);
  return g;
}

inline Graph FromOneBased(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.AddEdge(u - 1, v - 1);
  return g;
}

inline Graph Relabel(const Graph& g, const std::vector<Vertex>& perm) {
  Graph out(g.order());
  for (const auto& [u, v] : g.Edges()) out.AddEdge(perm[u], perm[v]);
  return out;
}

class Generator {
 public:
  explicit Generator(const FamilySpec& spec) : spec_(spec) {}

  GraphFamily Run() const;

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw std::invalid_argument(spec_.kind + ": " + what);
  }
  void Arity(std::size_t ints, std::size_t children = 0) const {
    if (spec_.params.size() != ints || spec_.children.size() != children ||
        !spec_.list.empty()) {
      Fail("expects " + std::to_string(ints) + " integer and " +
           std::to_string(children) + " spec arguments");
    }
  }
  int Int(std::size_t i, std::int64_t lo, std::int64_t hi, const char* name) const {
    const std::int64_t v = spec_.params.at(i);
    if (v < lo || v > hi) {
      Fail(std::string(name) + " must be in " + std::to_string(lo) + ".." +
           std::to_string(hi));
    }
    return static_cast<int>(v);
  }
  std::mt19937_64 Rng(std::size_t i) const {
    return std::mt19937_64(static_cast<std::uint64_t>(spec_.params.at(i)));
  }
  static GraphFamily One(Graph g) { return GraphFamily({std::move(g)}); }

  GraphFamily Bouquet() const;
  GraphFamily Figure1a() const;
  GraphFamily Figure1b() const;
  GraphFamily Figure2() const;
  GraphFamily Figure3() const;
  GraphFamily Unicyclic(char shape) const;
  GraphFamily PathFamily() const;
  GraphFamily StarFamily() const;
  GraphFamily SpiderFamilyA() const;
  GraphFamily SpiderFamilyB() const;
  GraphFamily Fig5Tree() const;
  GraphFamily Labeled() const;
  GraphFamily Combinator() const;

  const FamilySpec& spec_;
};

}  // namespace internal

inline FamilySpec ParseSpec(std::string_view text) {
  return internal::SpecParser(text).ParseAll();
}

// Deterministic for a fixed spec (seed included). Throws
// std::invalid_argument naming the valid range for out-of-range parameters.
inline GraphFamily Generate(const FamilySpec& spec) {
  return internal::Generator(spec).Run();
}

inline GraphFamily Generate(std::string_view spec) { return Generate(ParseSpec(spec)); }

// For specs that describe a single graph.
inline Graph GenerateGraph(const FamilySpec& spec) {
  GraphFamily fam = Generate(spec);
  if (fam.size() != 1) {
    throw std::invalid_argument(spec.ToString() + " describes a family, not a graph");
  }
  return fam[0];
}

inline Graph GenerateGraph(std::string_view spec) { return GenerateGraph(ParseSpec(spec)); }

namespace internal {

inline constexpr std::int64_t kMaxN = 4096;

inline GraphFamily Generator::Run() const {
  const std::string& k = spec_.kind;
  if (k == "path") {
    Arity(1);
    const int n = Int(0, 1, kMaxN, "n");
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return One(PathThrough(order, n));
  }
  if (k == "cycle") {
    Arity(1);
    const int n = Int(0, 3, kMaxN, "n");
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.AddEdge(v, (v + 1) % n);
    return One(std::move(g));
  }
  if (k == "complete") {
    Arity(1);
    return One(Complement(Graph(Int(0, 1, 512, "n"))));
  }
  if (k == "star") {
    Arity(1);
    const int n = Int(0, 2, kMaxN, "n");
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.AddEdge(0, v);
    return One(std::move(g));
  }
  if (k == "wheel") {
    // Hub 0 joined to the rim cycle 1..n-1.
    Arity(1);
    const int n = Int(0, 4, kMaxN, "n");
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) {
      g.AddEdge(0, v);
      g.AddEdge(v, v % (n - 1) + 1);
    }
    return One(std::move(g));
  }
  if (k == "kite") {
    // Star centred at 0 plus the edge 1-2.
    Arity(1);
    const int n = Int(0, 3, kMaxN, "n");
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.AddEdge(0, v);
    g.AddEdge(1, 2);
    return One(std::move(g));
  }
  if (k == "petersen") {
    Arity(0);
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
      g.AddEdge(i, (i + 1) % 5);          // outer 5-cycle
      g.AddEdge(i, i + 5);                // spokes
      g.AddEdge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return One(std::move(g));
  }
  if (k == "bouquet") return Bouquet();
  if (k == "fig1a") return Figure1a();
  if (k == "fig1b") return Figure1b();
  if (k == "fig2") return Figure2();
  if (k == "fig3") return Figure3();
  if (k == "unicyclic_a") return Unicyclic('a');
  if (k == "unicyclic_b") return Unicyclic('b');
  if (k == "unicyclic_c") return Unicyclic('c');
  if (k == "unicyclic_d") return Unicyclic('d');
  if (k == "h1") {
    Arity(0);
    return One(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}));
  }
  if (k == "h2") {
    Arity(0);
    return Generate(ParseSpec("unicyclic_c(1)"));
  }
  if (k == "h3") {
    Arity(0);
    return Generate(ParseSpec("unicyclic_d(1,1)"));
  }
  if (k == "path_family") return PathFamily();
  if (k == "star_family") return StarFamily();
  if (k == "remark_a_family") return SpiderFamilyA();
  if (k == "remark_b_family") return SpiderFamilyB();
  if (k == "fig5_tree") return Fig5Tree();
  if (k == "random_tree") {
    Arity(2);
    auto rng = Rng(1);
    return One(RandomTree(rng, Int(0, 1, kMaxN, "n")));
  }
  if (k == "random_unicyclic") {
    Arity(2);
    const int n = Int(0, 3, kMaxN, "n");
    auto rng = Rng(1);
    Graph g = RandomTree(rng, n);
    for (;;) {
      const auto u = static_cast<Vertex>(UniformBelow(rng, static_cast<std::uint64_t>(n)));
      const auto v = static_cast<Vertex>(UniformBelow(rng, static_cast<std::uint64_t>(n)));
      if (u != v && !g.HasEdge(u, v)) {
        g.AddEdge(u, v);
        return One(std::move(g));
      }
    }
  }
  if (k == "random_connected") {
    // Random spanning tree plus every other pair with probability p percent.
    Arity(3);
    const int n = Int(0, 1, kMaxN, "n");
    const int p = Int(1, 0, 100, "p (percent)");
    auto rng = Rng(2);
    Graph g = RandomTree(rng, n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        const bool pick = UniformBelow(rng, 100) < static_cast<std::uint64_t>(p);
        if (pick && !g.HasEdge(u, v)) g.AddEdge(u, v);
      }
    }
    return One(std::move(g));
  }
  if (k == "random_family") {
    // k random connected graphs on n vertices with edge probability p percent.
    Arity(4);
    const int count = Int(0, 1, 64, "k");
    const int n = Int(1, 2, kMaxN, "n");
    const int p = Int(2, 0, 100, "p (percent)");
    const std::int64_t seed = spec_.params[3];
    std::vector<Graph> members;
    for (int i = 0; i < count; ++i) {
      FamilySpec member{"random_connected", {n, p, seed * 1000003 + i}, {}, {}};
      members.push_back(GenerateGraph(member));
    }
    return GraphFamily(std::move(members));
  }
  if (k == "random_path_family") {
    Arity(3);
    const int n = Int(0, 2, kMaxN, "n");
    const int count = Int(1, 1, 64, "k");
    auto rng = Rng(2);
    std::vector<Graph> members;
    for (int i = 0; i < count; ++i) members.push_back(PathThrough(RandomPermutation(rng, n), n));
    return GraphFamily(std::move(members));
  }
  if (k == "labeled") return Labeled();
  return Combinator();
}

inline GraphFamily Generator::Bouquet() const {
  // Cycles of the given lengths glued at vertex 0; bouquet(m) uses triangles.
  std::vector<std::int64_t> lengths = spec_.list;
  if (!spec_.children.empty() || spec_.params.size() > 1 ||
      (spec_.params.empty() == lengths.empty())) {
    Fail("expects bouquet(m) or bouquet([l1,...,lm])");
  }
  if (lengths.empty()) lengths.assign(static_cast<std::size_t>(Int(0, 2, 1024, "m")), 3);
  if (lengths.size() < 2) Fail("needs m >= 2 cycles");
  int n = 1;
  for (auto len : lengths) {
    if (len < 3 || len > kMaxN) Fail("cycle lengths must be >= 3");
    n += static_cast<int>(len) - 1;
  }
  Graph g(n);
  Vertex next = 1;
  for (auto len : lengths) {
    Vertex prev = 0;
    for (std::int64_t i = 1; i < len; ++i) {
      g.AddEdge(prev, next);
      prev = next++;
    }
    g.AddEdge(prev, 0);
  }
  return One(std::move(g));
}

// Figure families use u_i -> vertex i-1.
inline GraphFamily Generator::Figure1a() const {
  Arity(0);
  return GraphFamily(
      {FromOneBased(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}}),
       FromOneBased(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 2},
                        {1, 3}, {1, 4}, {1, 5}, {1, 6}}),
       FromOneBased(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}})});
}

inline GraphFamily Generator::Figure1b() const {
  Arity(0);
  return GraphFamily(
      {FromOneBased(6, {{1, 5}, {5, 4}, {4, 3}, {2, 1}, {1, 6}}),
       FromOneBased(6, {{1, 3}, {3, 2}, {2, 6}, {6, 1}, {1, 4}, {4, 5}, {5, 1}}),
       FromOneBased(6, {{1, 4}, {4, 3}, {2, 5}, {5, 6}, {4, 5}})},
      {"H1", "H2", "H3"});
}

inline GraphFamily Generator::Figure2() const {
  Arity(0);
  return GraphFamily(
      {FromOneBased(12, {{1, 12}, {12, 2}, {12, 11}, {11, 10}, {10, 9}, {9, 3},
                         {3, 4}, {4, 5}, {5, 6}, {7, 6}, {6, 8}}),
       FromOneBased(12, {{3, 5}, {5, 4}, {5, 6}, {6, 7}, {7, 8}, {8, 9},
                         {9, 10}, {2, 7}, {1, 8}, {11, 10}, {10, 12}}),
       FromOneBased(12, {{5, 4}, {4, 6}, {4, 3}, {3, 2}, {2, 12}, {12, 11},
                         {3, 7}, {1, 2}, {8, 12}, {9, 11}, {11, 10}})});
}

inline GraphFamily Generator::Figure3() const {
  if (!spec_.children.empty() || !spec_.list.empty()) Fail("expects member indices only");
  const std::vector<std::vector<Edge>> all = {
      {{1, 3}, {3, 2}, {3, 4}, {4, 5}},
      {{2, 1}, {1, 3}, {1, 4}, {4, 5}},
      {{3, 2}, {2, 4}, {5, 1}, {1, 2}},
      {{4, 1}, {1, 5}, {1, 2}, {2, 3}},
      {{5, 4}, {4, 1}, {2, 3}, {3, 4}}};
  std::vector<int> pick;
  for (std::size_t i = 0; i < spec_.params.size(); ++i) pick.push_back(Int(i, 1, 5, "member"));
  if (pick.empty()) pick = {1, 2, 3, 4, 5};
  std::vector<Graph> members;
  std::vector<std::string> names;
  for (int i : pick) {
    members.push_back(FromOneBased(5, all[static_cast<std::size_t>(i - 1)]));
    names.push_back("G" + std::to_string(i));
  }
  return GraphFamily(std::move(members), std::move(names));
}

// Cycle vertices u1.. are 0..c-1; pendant vertices follow in order.
//  a: triangle, u1 adjacent to s_1..s_b, s_1 adjacent to l_1..l_a
//  b: triangle, u1 carries a leaves, u2 carries b leaves
//  c: 4-cycle, u1 carries a leaves
//  d: 4-cycle, u1 carries a leaves, u2 carries b leaves
inline GraphFamily Generator::Unicyclic(char shape) const {
  const bool two = shape != 'c';
  Arity(two ? 2 : 1);
  const int a = Int(0, 1, kMaxN, "a");
  const int b = two ? Int(1, 1, kMaxN, "b") : 0;
  const int cycle = (shape == 'a' || shape == 'b') ? 3 : 4;
  Graph g(cycle + a + b);
  for (Vertex v = 0; v < cycle; ++v) g.AddEdge(v, (v + 1) % cycle);
  Vertex next = cycle;
  if (shape == 'a') {
    const Vertex s1 = next;
    for (int i = 0; i < b; ++i) g.AddEdge(0, next++);
    for (int i = 0; i < a; ++i) g.AddEdge(s1, next++);
  } else {
    for (int i = 0; i < a; ++i) g.AddEdge(0, next++);
    for (int i = 0; i < b; ++i) g.AddEdge(1, next++);
  }
  return One(std::move(g));
}

inline GraphFamily Generator::PathFamily() const {
  if (spec_.params.size() != 1 || spec_.children.size() != 1 || !spec_.list.empty()) {
    Fail("expects path_family(n, shared_end|rotations)");
  }
  const int n = Int(0, 3, kMaxN, "n");
  const std::string& mode = spec_.children[0].kind;
  std::vector<Graph> members;
  if (mode == "shared_end") {
    // All members end at vertex 0.
    std::vector<Vertex> forward(static_cast<std::size_t>(n));
    std::iota(forward.begin(), forward.end(), 0);
    std::vector<Vertex> backward{0};
    for (Vertex v = n - 1; v >= 1; --v) backward.push_back(v);
    std::vector<Vertex> evens_odds;
    for (Vertex v = 0; v < n; v += 2) evens_odds.push_back(v);
    for (Vertex v = 1; v < n; v += 2) evens_odds.push_back(v);
    members = {PathThrough(forward, n), PathThrough(backward, n),
               PathThrough(evens_odds, n)};
  } else if (mode == "rotations") {
    // Member i runs i, i+1, ..., i+n-1 (mod n); no end-vertex is shared.
    for (Vertex start = 0; start < n; ++start) {
      std::vector<Vertex> order;
      for (int t = 0; t < n; ++t) order.push_back((start + t) % n);
      members.push_back(PathThrough(order, n));
    }
  } else {
    Fail("mode must be shared_end or rotations");
  }
  return GraphFamily(std::move(members));
}

inline GraphFamily Generator::StarFamily() const {
  Arity(1);
  const int k = Int(0, 4, 64, "k");
  std::vector<Graph> members;
  for (Vertex c = 0; c < k; ++c) {
    Graph g(k);
    for (Vertex v = 0; v < k; ++v) {
      if (v != c) g.AddEdge(c, v);
    }
    members.push_back(std::move(g));
  }
  return GraphFamily(std::move(members));
}

// Vertex u_{i,t} is 3i+t. Member i is a spider centred at u_{i,0} with legs
// u_{i,1}, u_{i,2} and one long leg that starts at u_{j,0} (j = i+1 mod k),
// runs through every other triple, and ends at u_{j,2}.
inline GraphFamily Generator::SpiderFamilyA() const {
  Arity(1);
  const int k = Int(0, 3, 64, "k");
  const int n = 3 * k;
  std::vector<Graph> members;
  for (int i = 0; i < k; ++i) {
    const int j = (i + 1) % k;
    std::vector<Vertex> leg{3 * i, 3 * j, 3 * j + 1};
    for (int step = 2; step < k; ++step) {
      const int m = (i + step) % k;
      for (int t = 0; t < 3; ++t) leg.push_back(3 * m + t);
    }
    leg.push_back(3 * j + 2);
    Graph g = PathThrough(leg, n);
    g.AddEdge(3 * i, 3 * i + 1);
    g.AddEdge(3 * i, 3 * i + 2);
    members.push_back(std::move(g));
  }
  return GraphFamily(std::move(members));
}

// Vertices w0, w1, w2 are 0, 1, 2 and u_i is 3+i. Member i is a spider
// centred at w0 with legs w1, w2 and a long leg starting at u_i that visits
// u_{i+2}, ..., u_{i-1} and ends at u_{i+1} (indices mod k).
inline GraphFamily Generator::SpiderFamilyB() const {
  Arity(1);
  const int k = Int(0, 3, 64, "k");
  std::vector<Graph> members;
  for (int i = 0; i < k; ++i) {
    std::vector<Vertex> leg{0, 3 + i};
    for (int step = 2; step < k; ++step) leg.push_back(3 + (i + step) % k);
    leg.push_back(3 + (i + 1) % k);
    Graph g = PathThrough(leg, k + 3);
    g.AddEdge(0, 1);
    g.AddEdge(0, 2);
    members.push_back(std::move(g));
  }
  return GraphFamily(std::move(members));
}

// Spine v_1..v_k is 0..k-1; v_i carries leaves k+3i, k+3i+1, k+3i+2.
inline GraphFamily Generator::Fig5Tree() const {
  Arity(1);
  const int k = Int(0, 2, 1024, "k");
  Graph g(4 * k);
  for (Vertex v = 0; v + 1 < k; ++v) g.AddEdge(v, v + 1);
  for (Vertex v = 0; v < k; ++v) {
    for (int t = 0; t < 3; ++t) g.AddEdge(v, k + 3 * v + t);
  }
  return One(std::move(g));
}

// labeled(n, code): bit t of code selects the t-th pair in lexicographic
// order (0,1), (0,2), ..., (n-2,n-1).
inline GraphFamily Generator::Labeled() const {
  Arity(2);
  const int n = Int(0, 1, 11, "n");
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const std::int64_t code = spec_.params[1];
  if (code < 0 || (pairs < 63 && code >= (std::int64_t{1} << pairs))) {
    Fail("code must be in 0..2^(n(n-1)/2)-1");
  }
  Graph g(n);
  int bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((code >> bit) & 1) g.AddEdge(u, v);
    }
  }
  return One(std::move(g));
}

inline GraphFamily Generator::Combinator() const {
  const std::string& k = spec_.kind;
  if (k == "family") {
    if (spec_.children.empty() || !spec_.params.empty() || !spec_.list.empty()) {
      Fail("expects one or more spec arguments");
    }
    std::vector<Graph> members;
    for (const auto& child : spec_.children) {
      const GraphFamily part = Generate(child);
      members.insert(members.end(), part.members().begin(), part.members().end());
    }
    return GraphFamily(std::move(members));
  }
  if (k == "complement") {
    Arity(0, 1);
    const GraphFamily base = Generate(spec_.children[0]);
    std::vector<Graph> members;
    for (const auto& g : base.members()) members.push_back(Complement(g));
    return GraphFamily(std::move(members));
  }
  if (k == "pair") {
    Arity(0, 1);
    return WithComplement(GenerateGraph(spec_.children[0]));
  }
  if (k == "relabel") {
    // Applies one seeded vertex permutation to every member.
    Arity(1, 1);
    const GraphFamily base = Generate(spec_.children[0]);
    auto rng = Rng(0);
    const auto perm = RandomPermutation(rng, base.order());
    std::vector<Graph> members;
    for (const auto& g : base.members()) members.push_back(Relabel(g, perm));
    return GraphFamily(std::move(members));
  }
  throw std::invalid_argument("unknown spec kind '" + k + "'");
}

}  // namespace internal

}  // namespace fracdim

#endif  // FRACDIM_GENERATORS_H_
