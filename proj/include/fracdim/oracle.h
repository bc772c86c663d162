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

// Closed-form values for fractional and simultaneous fractional dimension.
//
// Nothing here touches the LP solver. Values come from formulas over the
// spec parameters or over cheap structure (tree profiles, twin classes, r(G),
// diameters, automorphism search). Some results are stated relative to one
// member's dim_f, e.g. Sd_f(G, complement) = dim_f(complement); those are
// returned as a member index plus an offset and the caller resolves them.

#ifndef FRACDIM_ORACLE_H_
#define FRACDIM_ORACLE_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracdim/automorphism.h"
#include "fracdim/error.h"
#include "fracdim/family.h"
#include "fracdim/generators.h"
#include "fracdim/graph.h"
#include "fracdim/metric.h"
#include "fracdim/rational.h"

namespace fracdim {

struct OracleValue {
  // Exact when member < 0; otherwise the value is dim_f(member) + offset.
  Rational offset;
  int member = -1;
  std::string source;

  static OracleValue Exact(Rational v, std::string source) {
    return {std::move(v), -1, std::move(source)};
  }
  static OracleValue Relative(int member, Rational offset, std::string source) {
    return {std::move(offset), member, std::move(source)};
  }

  bool exact() const { return member < 0; }

  // Given dim_f of every member, the value the formula predicts.
  Rational Resolve(const std::vector<Rational>& member_dimf) const {
    return exact() ? offset : member_dimf.at(static_cast<std::size_t>(member)) + offset;
  }

  std::string Describe() const {
    if (exact()) return offset.ToString();
    std::string out = "dim_f(member " + std::to_string(member) + ")";
    if (offset != Rational(0)) out += " + " + offset.ToString();
    return out;
  }
};

// Predicted (Sd_f, dim_f(G), dim_f(complement)) for a graph paired with its
// complement. Entries without a known formula are empty.
struct PairOracle {
  std::optional<Rational> sdf;
  std::optional<Rational> dimf;
  std::optional<Rational> dimf_complement;
  std::string source;
};

// True iff every twin class has at least two vertices, i.e. some
// fixed-point-free permutation maps each vertex to a twin.
inline bool HasFixedPointFreeTwinPermutation(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("twin permutation needs n >= 2");
  return ComputeTwinPartition(g).AllNontrivial();
}

namespace internal {

inline Rational CycleDimf(int n) {
  return n % 2 ? Rational(n, n - 1) : Rational(n, n - 2);
}

inline Rational WheelDimf(int n) {
  if (n <= 5) return Rational(2);
  if (n == 6) return Rational(3, 2);
  return Rational(n - 1, 4);
}

inline Rational TreeDimf(const Graph& t) {
  const TreeProfile p = ComputeTreeProfile(t);
  return Rational(p.sigma - p.ex1, 2);
}

// Hub of degree n-1 over a rim that is a cycle.
inline bool IsWheel(const Graph& g) {
  const int n = g.order();
  if (n < 5 || g.size() != 2 * (n - 1)) return false;
  for (Vertex hub = 0; hub < n; ++hub) {
    if (g.degree(hub) != n - 1) continue;
    Graph rim(n - 1);
    for (const auto& [u, v] : g.Edges()) {
      if (u != hub && v != hub) rim.AddEdge(u < hub ? u : u - 1, v < hub ? v : v - 1);
    }
    return IsCycle(rim);
  }
  return false;
}

inline std::int64_t Param(const FamilySpec& s, std::size_t i) { return s.params.at(i); }

// Sd_f(T, complement) for T = fig5_tree(k).
inline Rational Fig5Value(std::int64_t k) { return Rational(3 * k, 2); }

// Unicyclic templates and related pairs whose three values are fixed by
// their parameters.
inline std::optional<PairOracle> NamedPairOracle(const FamilySpec& g) {
  const std::string& k = g.kind;
  auto all = [](Rational v, std::string src) {
    return PairOracle{v, v, v, std::move(src)};
  };
  if (k == "unicyclic_a") {
    const auto a = Param(g, 0), b = Param(g, 1);
    Rational v;
    if (a == 1) v = b <= 2 ? Rational(2) : Rational(b + 3, 2);
    else v = b <= 2 ? Rational(a + 3, 2) : Rational(a + b + 1, 2);
    return PairOracle{v, std::nullopt, v, "triangle with a pendant star template"};
  }
  if (k == "unicyclic_b") {
    const auto a = Param(g, 0), b = Param(g, 1);
    Rational v;
    if (a == 1 && b == 1) v = Rational(3, 2);
    else if (a == 1 || b == 1) v = Rational(std::max(a, b) + 2, 2);
    else v = Rational(a + b + 1, 2);
    return PairOracle{v, std::nullopt, v, "triangle with two leaf clusters template"};
  }
  if (k == "unicyclic_c" || k == "h2") {
    const auto a = k == "h2" ? 1 : Param(g, 0);
    if (a == 1) return PairOracle{Rational(2), Rational(2), Rational(3, 2), "4-cycle with one pendant"};
    return all(Rational(a + 2, 2), "4-cycle with one leaf cluster template");
  }
  if (k == "unicyclic_d" || k == "h3") {
    const auto a = k == "h3" ? 1 : Param(g, 0);
    const auto b = k == "h3" ? 1 : Param(g, 1);
    const std::string src = "4-cycle with two adjacent leaf clusters template";
    if (a == 1 && b == 1) return PairOracle{Rational(2), Rational(2), Rational(5, 3), src};
    if (a == 1 || b == 1) {
      const auto m = std::max(a, b);
      const Rational v = Rational(m, 2) + Rational(4, 3);
      return PairOracle{v, Rational(m, 2) + Rational(1), v, src};
    }
    const Rational v(a + b + 2, 2);
    return PairOracle{v, std::nullopt, v, src};
  }
  if (k == "h1" || (k == "kite" && Param(g, 0) == 4)) {
    return PairOracle{Rational(3, 2), Rational(3, 2), Rational(1), "triangle with one pendant"};
  }
  if (k == "kite" && Param(g, 0) >= 5) {
    return all(Rational(Param(g, 0) - 1, 2), "star plus one edge");
  }
  if (k == "fig5_tree") return all(Fig5Value(Param(g, 0)), "caterpillar with three leaves per spine vertex");
  if (k == "cycle") {
    const auto n = Param(g, 0);
    if (n <= 4) return all(Rational(n, 2), "small cycle with complement");
    return PairOracle{Rational(n, 4), CycleDimf(static_cast<int>(n)), Rational(n, 4),
                      "cycle with complement"};
  }
  if (k == "path" && Param(g, 0) == 4) {
    return PairOracle{Rational(4, 3), Rational(1), Rational(1), "P4 with complement"};
  }
  return std::nullopt;
}

}  // namespace internal

// dim_f from graph structure alone.
inline OracleValue OracleDimf(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("dimension needs n >= 2");
  if (IsTree(g)) return OracleValue::Exact(internal::TreeDimf(g), "tree end-vertex formula");
  if (IsCycle(g)) return OracleValue::Exact(internal::CycleDimf(n), "cycle formula");
  if (IsComplete(g)) return OracleValue::Exact(Rational(n, 2), "complete graph");
  if (internal::IsWheel(g)) return OracleValue::Exact(internal::WheelDimf(n), "wheel formula");
  if (IsConnected(g) && HasFixedPointFreeTwinPermutation(g)) {
    return OracleValue::Exact(Rational(n, 2), "all twin classes nontrivial");
  }
  if (n <= kDefaultAutomorphismCap && IsVertexTransitive(g)) {
    return OracleValue::Exact(Rational(n, MinConstraintSize(g)), "vertex-transitive n/r");
  }
  throw NoClosedForm("graph on " + std::to_string(n) + " vertices");
}

// dim_f for a single-graph spec.
inline OracleValue OracleDimf(const FamilySpec& spec) {
  const std::string& k = spec.kind;
  if (k == "relabel") return OracleDimf(spec.children.at(0));
  if (k == "path" && internal::Param(spec, 0) >= 2) return OracleValue::Exact(Rational(1), "path");
  if (k == "cycle") {
    return OracleValue::Exact(internal::CycleDimf(static_cast<int>(internal::Param(spec, 0))),
                              "cycle formula");
  }
  if (k == "petersen") return OracleValue::Exact(Rational(5, 3), "Petersen graph");
  if (k == "wheel") {
    return OracleValue::Exact(internal::WheelDimf(static_cast<int>(internal::Param(spec, 0))),
                              "wheel formula");
  }
  if (k == "complete") return OracleValue::Exact(Rational(internal::Param(spec, 0), 2), "complete graph");
  if (k == "bouquet") {
    const auto m = spec.list.empty() ? internal::Param(spec, 0) : static_cast<std::int64_t>(spec.list.size());
    return OracleValue::Exact(Rational(m), "bouquet of cycles");
  }
  if (auto pair = internal::NamedPairOracle(spec); pair && pair->dimf) {
    return OracleValue::Exact(*pair->dimf, pair->source);
  }
  return OracleDimf(GenerateGraph(spec));
}

// Sd_f(G, complement) from the structure of G alone.
inline OracleValue OracleComplementPair(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("dimension needs n >= 2");
  const Graph gc = Complement(g);
  if (n == 2 || (n == 3 && (IsPath(g) || IsPath(gc)))) {
    return OracleValue::Exact(Rational(1), "P2 or P3 with complement");
  }
  if (HasFixedPointFreeTwinPermutation(g)) {
    return OracleValue::Exact(Rational(n, 2), "all twin classes nontrivial");
  }
  const Distance d = Diameter(g);
  const Distance dc = Diameter(gc);
  if (!(d == 3 && dc == 3)) {
    return d <= dc ? OracleValue::Relative(0, Rational(0), "smaller diameter side")
                   : OracleValue::Relative(1, Rational(0), "smaller diameter side");
  }
  // Both diameters are 3 from here on.
  if (IsTree(g)) {
    if (IsPath(g)) return OracleValue::Exact(Rational(4, 3), "P4 with complement");
    return OracleValue::Relative(1, Rational(0), "tree with complement");
  }
  if (IsTree(gc)) {
    if (IsPath(gc)) return OracleValue::Exact(Rational(4, 3), "P4 with complement");
    return OracleValue::Relative(0, Rational(0), "tree with complement");
  }
  if (IsUnicyclic(g)) {
    if (AreIsomorphic(g, GenerateGraph(ParseSpec("h1"))) ||
        AreIsomorphic(g, GenerateGraph(ParseSpec("h2")))) {
      return OracleValue::Relative(1, Rational(1, 2), "exceptional unicyclic graph");
    }
    if (AreIsomorphic(g, GenerateGraph(ParseSpec("h3")))) {
      return OracleValue::Relative(1, Rational(1, 3), "exceptional unicyclic graph");
    }
    return OracleValue::Relative(1, Rational(0), "unicyclic with complement");
  }
  throw NoClosedForm("graph paired with its complement");
}

// Sd_f for a family from structure alone.
inline OracleValue OracleSdimf(const GraphFamily& fam) {
  const int n = fam.order();
  if (n < 2) throw std::invalid_argument("dimension needs n >= 2");
  if (fam.size() == 1) return OracleDimf(fam[0]);
  if (fam.size() == 2 && fam[1] == Complement(fam[0])) return OracleComplementPair(fam[0]);
  bool all_paths = true;
  for (const auto& g : fam.members()) all_paths = all_paths && IsPath(g);
  if (all_paths) {
    for (Vertex v = 0; v < n; ++v) {
      bool end_everywhere = true;
      for (const auto& g : fam.members()) end_everywhere = end_everywhere && g.degree(v) <= 1;
      if (end_everywhere) return OracleValue::Exact(Rational(1), "paths sharing an end-vertex");
    }
    return OracleValue::Exact(Rational(n, n - 1), "paths without a shared end-vertex");
  }
  const int m0 = FamilyTwinMultiplicity(fam, 0);
  bool constant = m0 > 0;
  for (Vertex v = 1; v < n && constant; ++v) constant = FamilyTwinMultiplicity(fam, v) == m0;
  if (constant) return OracleValue::Exact(Rational(n, 2), "constant twin multiplicity");
  if (n <= kDefaultAutomorphismCap) {
    Rational best;
    bool transitive = true;
    for (const auto& g : fam.members()) {
      if (!IsVertexTransitive(g)) {
        transitive = false;
        break;
      }
      best = Max(best, Rational(n, MinConstraintSize(g)));
    }
    if (transitive) return OracleValue::Exact(best, "vertex-transitive family");
  }
  throw NoClosedForm("family of " + std::to_string(fam.size()) + " graphs");
}

inline OracleValue OracleSdimf(const FamilySpec& spec) {
  const std::string& k = spec.kind;
  if (k == "relabel") return OracleSdimf(spec.children.at(0));
  if (k == "fig1a") return OracleValue::Exact(Rational(3, 2), "lower bound attained");
  if (k == "fig1b") return OracleValue::Exact(Rational(3), "upper bound attained");
  if (k == "fig2") return OracleValue::Exact(Rational(6), "three trees on 12 vertices");
  if (k == "fig3") {
    std::vector<std::int64_t> pick = spec.params;
    std::sort(pick.begin(), pick.end());
    if (pick.empty() || pick == std::vector<std::int64_t>{1, 2, 3, 4, 5}) {
      return OracleValue::Exact(Rational(5, 2), "five trees, constant twin multiplicity");
    }
    if (pick == std::vector<std::int64_t>{1, 2, 4}) {
      return OracleValue::Exact(Rational(2), "three trees below n/2");
    }
  }
  if (k == "path_family") {
    const auto n = internal::Param(spec, 0);
    if (spec.children.at(0).kind == "shared_end") {
      return OracleValue::Exact(Rational(1), "paths sharing an end-vertex");
    }
    return OracleValue::Exact(Rational(n, n - 1), "paths without a shared end-vertex");
  }
  if (k == "star_family") {
    return OracleValue::Exact(Rational(internal::Param(spec, 0), 2), "stars on rotating centres");
  }
  if (k == "remark_a_family") {
    return OracleValue::Exact(Rational(internal::Param(spec, 0)), "spiders with twin leaf pairs");
  }
  if (k == "remark_b_family") return OracleValue::Exact(Rational(3, 2), "spiders on a shared centre");
  if (k == "pair") {
    const FamilySpec& g = spec.children.at(0);
    if (g.kind == "path") {
      if (internal::Param(g, 0) == 4) return OracleValue::Exact(Rational(4, 3), "P4 with complement");
      if (internal::Param(g, 0) <= 3) return OracleValue::Exact(Rational(1), "P2 or P3 with complement");
      return OracleValue::Relative(1, Rational(0), "path with complement");
    }
    if (auto pair = internal::NamedPairOracle(g); pair && pair->sdf) {
      return OracleValue::Exact(*pair->sdf, pair->source);
    }
  }
  const GraphFamily fam = Generate(spec);
  if (fam.size() == 1) return OracleDimf(spec);
  return OracleSdimf(fam);
}

// The three predicted values for pair(g); empty entries have no formula.
inline PairOracle OraclePair(const FamilySpec& g) {
  if (auto named = internal::NamedPairOracle(g)) return *named;
  throw NoClosedForm("pair(" + g.ToString() + ")");
}

// Sd for the families where it has a closed form.
inline int OracleSdim(const FamilySpec& spec) {
  if (spec.kind == "star_family") return static_cast<int>(internal::Param(spec, 0)) - 1;
  if (spec.kind == "path_family" && spec.children.at(0).kind == "shared_end") return 1;
  throw NoClosedForm(spec.ToString());
}

}  // namespace fracdim

#endif  // FRACDIM_ORACLE_H_
