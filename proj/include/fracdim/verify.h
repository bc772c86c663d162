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

// Named verification suites. Each suite expands into a fixed list of checks
// that compare LP results against closed forms or structural properties.
// Checks may run on several threads (FRACDIM_THREADS); the report lists
// them in check-index order regardless of completion order.

#ifndef FRACDIM_VERIFY_H_
#define FRACDIM_VERIFY_H_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "fracdim/covering_lp.h"
#include "fracdim/dimension.h"
#include "fracdim/error.h"
#include "fracdim/family.h"
#include "fracdim/generators.h"
#include "fracdim/graph.h"
#include "fracdim/metric.h"
#include "fracdim/oracle.h"
#include "fracdim/rational.h"
#include "json.hpp"

namespace fracdim {

struct Witness {
  std::string spec;      // reproduces the instance with `fracdim <command> --spec`
  std::string command;   // dimf, sdimf, sdim, ...
  std::string expected;
  std::string actual;
};

struct Check {
  std::string description;
  bool pass = false;
  Witness witness;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  std::int64_t elapsed_ms = 0;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
  }
};

// Hook applied to every oracle value a suite consults; used to corrupt the
// oracle in self-tests.
using OracleTransform = std::function<OracleValue(const std::string& spec, OracleValue)>;

struct SuiteOptions {
  int max_n = 0;        // 0 keeps each suite's default size cap
  int threads = 1;
  bool timing = false;  // when false elapsed_ms is reported as 0
  OracleTransform oracle_transform;
};

// FRACDIM_THREADS, defaulting to 1.
inline int ThreadsFromEnvironment() {
  const char* env = std::getenv("FRACDIM_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) return 1;
  return static_cast<int>(std::min<long>(v, 256));
}

namespace internal {

using Task = std::function<Check()>;

class SuiteContext {
 public:
  explicit SuiteContext(const SuiteOptions& opts, int default_cap)
      : opts_(opts), cap_(opts.max_n > 0 ? opts.max_n : default_cap) {}

  int cap() const { return cap_; }

  OracleValue Oracle(const std::string& spec, OracleValue v) const {
    return opts_.oracle_transform ? opts_.oracle_transform(spec, std::move(v)) : v;
  }

 private:
  const SuiteOptions& opts_;
  int cap_;
};

inline std::string Str(const Rational& r) { return r.ToString(); }

inline Check Compare(std::string description, std::string spec, std::string command,
                     const Rational& expected, const Rational& actual) {
  Check c{std::move(description), expected == actual, {}};
  c.witness = {std::move(spec), std::move(command), Str(expected), Str(actual)};
  return c;
}

inline Check Verdict(std::string description, std::string spec, std::string command,
                     bool pass, std::string expected, std::string actual) {
  return Check{std::move(description), pass,
               {std::move(spec), std::move(command), std::move(expected), std::move(actual)}};
}

// Wraps a task so exceptions become failed checks naming the spec.
inline Task Guard(std::string spec, std::string command, Task task) {
  return [spec = std::move(spec), command = std::move(command), task = std::move(task)] {
    try {
      return task();
    } catch (const std::exception& e) {
      return Verdict("exception on " + spec, spec, command, false, "no exception", e.what());
    }
  };
}

inline std::vector<Rational> MemberDimf(const GraphFamily& fam) {
  std::vector<Rational> out;
  for (const auto& g : fam.members()) out.push_back(FractionalDimension(g).value);
  return out;
}

// Empty when the result carries a valid optimality certificate.
inline std::optional<std::string> CertificateProblem(const DimensionResult& r) {
  LpSolution sol{LpStatus::kOptimal, r.value, r.assignment, r.certificate};
  return CheckCertificate(r.lp, sol);
}

// Empty when every nontrivial twin class S of every member carries weight
// at least |S|/2.
inline std::optional<std::string> TwinBoundProblem(const GraphFamily& fam,
                                                   const std::vector<Rational>& x) {
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (const auto& cls : ComputeTwinPartition(fam[i]).classes) {
      if (cls.size() < 2) continue;
      Rational weight;
      for (Vertex v : cls) weight += x[v];
      if (weight < Rational(static_cast<std::int64_t>(cls.size()), 2)) {
        return "class of size " + std::to_string(cls.size()) + " in member " +
               std::to_string(i) + " has weight " + weight.ToString();
      }
    }
  }
  return std::nullopt;
}

// LP value against the oracle, with the certificate re-checked.
inline Task OracleTask(const SuiteContext& ctx, std::string spec_text, bool family) {
  const std::string command = family ? "sdimf" : "dimf";
  return Guard(spec_text, command, [&ctx, spec_text, family, command] {
    const FamilySpec spec = ParseSpec(spec_text);
    const GraphFamily fam = Generate(spec);
    const OracleValue oracle =
        ctx.Oracle(spec_text, family ? OracleSdimf(spec) : OracleDimf(spec));
    const DimensionResult r = SimultaneousFractionalDimension(fam);
    const Rational expected =
        oracle.exact() ? oracle.offset : oracle.Resolve(MemberDimf(fam));
    Check c = Compare(command + " " + spec_text + " = " + oracle.Describe(), spec_text,
                      command, expected, r.value);
    if (auto bad = CertificateProblem(r)) {
      c.pass = false;
      c.witness.actual += " (certificate: " + *bad + ")";
    }
    return c;
  });
}

inline std::string Call(const char* kind, std::initializer_list<std::int64_t> args) {
  std::string s = std::string(kind) + "(";
  bool first = true;
  for (auto a : args) {
    s += (first ? "" : ",") + std::to_string(a);
    first = false;
  }
  return s + ")";
}

// Seeded draw in [lo, hi].
inline int Draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(UniformBelow(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Random trees with n in [lo, hi]; P4 excluded on request.
inline std::vector<std::string> RandomTreeSpecs(int count, int lo, int hi, std::uint64_t salt,
                                                bool skip_p4) {
  std::vector<std::string> out;
  std::mt19937_64 rng(salt);
  while (static_cast<int>(out.size()) < count) {
    const int n = Draw(rng, lo, hi);
    const auto seed = static_cast<std::int64_t>(UniformBelow(rng, 1000000));
    const std::string spec = Call("random_tree", {n, seed});
    if (skip_p4 && n == 4 && IsPath(GenerateGraph(spec))) continue;
    out.push_back(spec);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suites

inline std::vector<Task> ClosedFormsSuite(const SuiteContext& ctx) {
  std::vector<std::string> specs;
  const int cap = ctx.cap();
  for (int n = 2; n <= cap; ++n) specs.push_back(Call("path", {n}));
  for (int n = 3; n <= cap; ++n) specs.push_back(Call("cycle", {n}));
  specs.push_back("petersen");
  for (int n = 4; n <= cap; ++n) specs.push_back(Call("wheel", {n}));
  for (int n = 2; n <= std::min(cap, 10); ++n) specs.push_back(Call("complete", {n}));
  for (int m = 2; 2 * m + 1 <= std::max(cap, 5) && m <= 4; ++m) specs.push_back(Call("bouquet", {m}));
  for (const char* mix : {"bouquet([3,4])", "bouquet([4,5])", "bouquet([3,5])",
                          "bouquet([4,4])", "bouquet([5,5])", "bouquet([3,4,5])"}) {
    specs.push_back(mix);
  }
  for (int n = 3; n <= std::min(cap, 12); ++n) specs.push_back(Call("kite", {n}));
  for (auto& t : RandomTreeSpecs(200, 4, std::max(4, cap), 101, false)) {
    specs.push_back(t);
  }
  std::vector<Task> tasks;
  for (auto& s : specs) tasks.push_back(OracleTask(ctx, s, false));
  return tasks;
}

inline std::vector<Task> SandwichSuite(const SuiteContext& ctx) {
  std::vector<Task> tasks;
  std::mt19937_64 rng(202);
  for (int i = 0; i < 200; ++i) {
    const int k = Draw(rng, 2, 4);
    const int n = Draw(rng, 3, std::max(3, std::min(ctx.cap(), 10)));
    const int p = Draw(rng, 0, 60);
    const std::string spec = Call("random_family", {k, n, p, i + 1});
    tasks.push_back(Guard(spec, "sdimf", [spec] {
      const BoundsReport b = ComputeBoundsReport(Generate(spec));
      const bool ok = b.max_dimf <= b.sdf && b.sdf <= Min(b.sum_dimf, b.half_n) &&
                      b.sdf <= Rational(b.sd);
      return Verdict("bounds " + spec, spec, "sdimf", ok,
                     "max <= sdf <= min(sum, n/2), sdf <= sd",
                     "max " + Str(b.max_dimf) + ", sdf " + Str(b.sdf) + ", sum " +
                         Str(b.sum_dimf) + ", n/2 " + Str(b.half_n) + ", sd " +
                         std::to_string(b.sd));
    }));
  }
  return tasks;
}

inline std::vector<Task> TwinBoundSuite(const SuiteContext& ctx) {
  std::vector<std::string> specs = {"complete(5)", "star(6)", "kite(5)", "petersen",
                                    "fig1a", "fig1b", "fig2", "fig3", "fig3(1,2,4)",
                                    "star_family(6)", "remark_a_family(4)",
                                    "remark_b_family(4)", "pair(fig5_tree(3))",
                                    "pair(unicyclic_b(3,2))", "pair(unicyclic_d(2,2))"};
  for (auto& t : RandomTreeSpecs(50, 4, std::max(4, ctx.cap()), 303, false)) {
    specs.push_back("pair(" + t + ")");
  }
  std::vector<Task> tasks;
  for (auto& spec : specs) {
    tasks.push_back(Guard(spec, "sdimf", [spec] {
      const GraphFamily fam = Generate(spec);
      const DimensionResult r = SimultaneousFractionalDimension(fam);
      const auto bad = TwinBoundProblem(fam, r.assignment);
      return Verdict("twin classes weigh at least half their size in " + spec, spec,
                     "sdimf", !bad, "every class S has g(S) >= |S|/2",
                     bad ? *bad : "holds");
    }));
  }
  return tasks;
}

// Sd_f = 1 iff the family consists of paths sharing an end-vertex.
inline std::vector<Task> SdfOneSuite(const SuiteContext& ctx) {
  std::vector<std::string> specs;
  for (int n = 3; n <= std::min(ctx.cap(), 10); ++n) {
    specs.push_back("path_family(" + std::to_string(n) + ",shared_end)");
    specs.push_back("path_family(" + std::to_string(n) + ",rotations)");
  }
  // Every pair of connected labeled graphs on 4 vertices.
  std::vector<std::int64_t> connected;
  for (std::int64_t code = 0; code < 64; ++code) {
    if (IsConnected(GenerateGraph(Call("labeled", {4, code})))) connected.push_back(code);
  }
  for (std::size_t i = 0; i < connected.size(); ++i) {
    for (std::size_t j = i; j < connected.size(); ++j) {
      specs.push_back("family(" + Call("labeled", {4, connected[i]}) + "," +
                      Call("labeled", {4, connected[j]}) + ")");
    }
  }
  std::mt19937_64 rng(404);
  for (int i = 0; i < 100; ++i) {
    const int n = Draw(rng, 5, std::max(5, std::min(ctx.cap(), 8)));
    specs.push_back(Call("random_path_family", {n, Draw(rng, 2, 4), i + 1}));
  }
  std::vector<Task> tasks;
  for (auto& spec : specs) {
    tasks.push_back(Guard(spec, "sdimf", [spec] {
      const GraphFamily fam = Generate(spec);
      bool paths = true;
      for (const auto& g : fam.members()) paths = paths && IsPath(g);
      bool shared = false;
      for (Vertex v = 0; paths && v < fam.order() && !shared; ++v) {
        bool end = true;
        for (const auto& g : fam.members()) end = end && g.degree(v) == 1;
        shared = end;
      }
      const Rational value = SimultaneousFractionalDimension(fam).value;
      const bool predicted = paths && shared;
      return Verdict("Sd_f = 1 iff shared-end paths: " + spec, spec, "sdimf",
                     (value == Rational(1)) == predicted,
                     predicted ? "1" : "> 1", Str(value));
    }));
  }
  return tasks;
}

inline std::vector<Task> FiguresSuite(const SuiteContext& ctx) {
  std::vector<Task> tasks;
  for (const char* s : {"fig1a", "fig1b", "fig2", "fig3", "fig3(1,2,4)"}) {
    tasks.push_back(OracleTask(ctx, s, true));
  }
  return tasks;
}

// Constant positive twin multiplicity forces Sd_f = n/2.
inline std::vector<Task> MgConstantSuite(const SuiteContext& ctx) {
  std::vector<std::string> specs = {"fig3", "relabel(fig3,7)", "pair(cycle(4))",
                                    "family(fig3,relabel(fig3,3))"};
  for (int k = 4; k <= std::min(ctx.cap(), 10); ++k) specs.push_back(Call("star_family", {k}));
  for (int n = 2; n <= std::min(ctx.cap(), 8); ++n) {
    specs.push_back("pair(" + Call("complete", {n}) + ")");
  }
  for (int s = 1; s <= 5; ++s) specs.push_back("relabel(star_family(5)," + std::to_string(s) + ")");
  std::vector<Task> tasks;
  for (auto& spec : specs) {
    tasks.push_back(Guard(spec, "sdimf", [spec] {
      const GraphFamily fam = Generate(spec);
      const int m = FamilyTwinMultiplicity(fam, 0);
      bool constant = m > 0;
      for (Vertex v = 1; v < fam.order(); ++v) {
        constant = constant && FamilyTwinMultiplicity(fam, v) == m;
      }
      const Rational value = SimultaneousFractionalDimension(fam).value;
      const Rational half(fam.order(), 2);
      return Verdict("constant twin multiplicity gives n/2: " + spec, spec, "sdimf",
                     constant && value == half,
                     "m constant > 0 and Sd_f = " + Str(half),
                     std::string(constant ? "m constant" : "m not constant") +
                         ", Sd_f = " + Str(value));
    }));
  }
  return tasks;
}

inline std::vector<Task> VertexTransitiveSuite(const SuiteContext& ctx) {
  std::vector<std::string> specs = {"family(petersen,relabel(petersen,1),relabel(petersen,2))",
                                    "family(cycle(5),complement(cycle(5)))"};
  for (int n = 5; n <= std::min(ctx.cap(), 12); ++n) {
    const std::string c = Call("cycle", {n});
    specs.push_back("family(" + c + ",relabel(" + c + ",1),relabel(" + c + ",2))");
    if (n >= 6) specs.push_back("family(" + c + ",complement(" + c + "))");
    specs.push_back("family(" + c + "," + Call("complete", {n}) + ")");
  }
  std::vector<Task> tasks;
  for (auto& spec : specs) {
    tasks.push_back(Guard(spec, "sdimf", [&ctx, spec] {
      const GraphFamily fam = Generate(spec);
      for (const auto& g : fam.members()) {
        if (!IsVertexTransitive(g)) {
          return Verdict("members vertex-transitive: " + spec, spec, "sdimf", false,
                         "vertex-transitive members", "a member is not vertex-transitive");
        }
      }
      const std::vector<Rational> member = MemberDimf(fam);
      Rational max_dimf;
      for (const auto& d : member) max_dimf = Max(max_dimf, d);
      const OracleValue oracle = ctx.Oracle(spec, OracleSdimf(ParseSpec(spec)));
      const Rational value = SimultaneousFractionalDimension(fam).value;
      return Verdict("Sd_f = max dim_f for " + spec, spec, "sdimf",
                     value == max_dimf && value == oracle.Resolve(member),
                     "max dim_f " + Str(max_dimf) + ", formula " + oracle.Describe(),
                     Str(value));
    }));
  }
  return tasks;
}

// Seeded random graphs of diameter 2 with n <= cap.
inline std::vector<std::string> Diameter2Specs(int count, int cap, std::uint64_t salt) {
  std::vector<std::string> out;
  std::mt19937_64 rng(salt);
  while (static_cast<int>(out.size()) < count) {
    const int n = Draw(rng, 4, std::max(4, cap));
    const int p = Draw(rng, 20, 80);
    const auto seed = static_cast<std::int64_t>(UniformBelow(rng, 1000000));
    const std::string spec = Call("random_connected", {n, p, seed});
    if (Diameter(GenerateGraph(spec)) == 2) out.push_back(spec);
  }
  return out;
}

inline std::vector<Task> Diam2SubsetSuite(const SuiteContext& ctx) {
  std::vector<Task> tasks;
  for (auto& spec : Diameter2Specs(500, std::min(ctx.cap(), 10), 505)) {
    tasks.push_back(Guard(spec, "twins", [spec] {
      const Graph g = GenerateGraph(spec);
      const auto d = AllPairsDistances(g);
      const auto dc = AllPairsDistances(Complement(g));
      std::string bad;
      for (Vertex x = 0; x < g.order() && bad.empty(); ++x) {
        for (Vertex y = x + 1; y < g.order() && bad.empty(); ++y) {
          const auto r = ComputeResolvingConstraint(d, x, y).members;
          const auto rc = ComputeResolvingConstraint(dc, x, y).members;
          if (!std::includes(rc.begin(), rc.end(), r.begin(), r.end())) {
            bad = "pair (" + std::to_string(x) + "," + std::to_string(y) + ")";
          }
        }
      }
      return Verdict("R_G within R_complement for " + spec, spec, "twins", bad.empty(),
                     "subset for every pair", bad.empty() ? "subset" : "fails at " + bad);
    }));
  }
  return tasks;
}

// Sd_f(G, complement) = dim_f(G) when diam(G) <= diam(complement) and the
// diameters are not both 3.
inline std::vector<Task> DiameterPairsSuite(const SuiteContext& ctx) {
  std::vector<std::string> specs;
  std::mt19937_64 rng(606);
  while (specs.size() < 100) {
    const int n = Draw(rng, 4, std::max(4, std::min(ctx.cap(), 10)));
    const std::string spec =
        Call("random_connected", {n, Draw(rng, 0, 70),
                                  static_cast<std::int64_t>(UniformBelow(rng, 1000000))});
    const Graph g = GenerateGraph(spec);
    const Distance d = Diameter(g);
    const Distance dc = Diameter(Complement(g));
    if (d <= dc && !(d == 3 && dc == 3)) specs.push_back(spec);
  }
  for (const char* s : {"petersen", "wheel(8)", "complete(5)", "kite(6)"}) specs.push_back(s);
  std::vector<Task> tasks;
  for (auto& spec : specs) {
    const std::string pair = "pair(" + spec + ")";
    tasks.push_back(Guard(pair, "sdimf", [spec, pair] {
      const Graph g = GenerateGraph(spec);
      const Rational expected = FractionalDimension(g).value;
      const Rational value = SimultaneousFractionalDimension(WithComplement(g)).value;
      return Compare("Sd_f(G, complement) = dim_f(G) for " + spec, pair, "sdimf", expected,
                     value);
    }));
  }
  return tasks;
}

// On every labeled graph with 2 <= n <= 5 (plus samples above): dim_f = n/2
// iff all twin classes are nontrivial; the same for Sd_f(G, complement); and
// Sd_f(G, complement) = 1 iff G is P2, P3 or a complement of one.
inline std::vector<Task> PairCharacterizationsSuite(const SuiteContext& ctx) {
  std::vector<std::string> specs;
  const int exhaustive = std::min(ctx.cap(), 5);
  for (int n = 2; n <= exhaustive; ++n) {
    for (std::int64_t code = 0; code < (std::int64_t{1} << (n * (n - 1) / 2)); ++code) {
      specs.push_back(Call("labeled", {n, code}));
    }
  }
  std::mt19937_64 rng(707);
  for (int i = 0; i < 100 && ctx.cap() >= 6; ++i) {
    const int n = Draw(rng, 6, std::min(ctx.cap(), 9));
    specs.push_back(Call("random_connected", {n, Draw(rng, 0, 80),
                                              static_cast<std::int64_t>(UniformBelow(rng, 1000000))}));
  }
  std::vector<Task> tasks;
  for (auto& spec : specs) {
    const std::string pair = "pair(" + spec + ")";
    tasks.push_back(Guard(pair, "sdimf", [spec, pair] {
      const Graph g = GenerateGraph(spec);
      const int n = g.order();
      const Graph gc = Complement(g);
      const bool twins = HasFixedPointFreeTwinPermutation(g);
      const bool small_path = n == 2 || (n == 3 && (IsPath(g) || IsPath(gc)));
      const Rational half(n, 2);
      const Rational dimf = FractionalDimension(g).value;
      const Rational sdf = SimultaneousFractionalDimension(WithComplement(g)).value;
      const bool ok = (dimf == half) == twins && (sdf == half) == twins &&
                      (sdf == Rational(1)) == small_path;
      std::ostringstream expected;
      expected << "twins " << (twins ? "all nontrivial" : "not all nontrivial")
               << ", P2/P3 family " << (small_path ? "yes" : "no");
      return Verdict("characterizations on " + spec, pair, "sdimf", ok, expected.str(),
                     "dim_f " + Str(dimf) + ", Sd_f(G, complement) " + Str(sdf));
    }));
  }
  return tasks;
}

inline std::vector<Task> TreePairsSuite(const SuiteContext& ctx) {
  std::vector<Task> tasks;
  for (auto& t : RandomTreeSpecs(100, 4, std::max(5, ctx.cap()), 808, true)) {
    const std::string pair = "pair(" + t + ")";
    tasks.push_back(Guard(pair, "sdimf", [t, pair] {
      const Graph g = GenerateGraph(t);
      const Rational dimf = FractionalDimension(g).value;
      const Rational dimf_c = FractionalDimension(Complement(g)).value;
      const Rational sdf = SimultaneousFractionalDimension(WithComplement(g)).value;
      return Verdict("Sd_f(T, complement) = dim_f(complement) >= dim_f(T) for " + t, pair,
                     "sdimf", sdf == dimf_c && dimf_c >= dimf,
                     "dim_f(complement) " + Str(dimf_c) + " >= dim_f(T) " + Str(dimf),
                     Str(sdf));
    }));
  }
  return tasks;
}

inline std::vector<Task> CyclePairsSuite(const SuiteContext& ctx) {
  std::vector<Task> tasks;
  for (int n = 3; n <= ctx.cap(); ++n) {
    tasks.push_back(OracleTask(ctx, "pair(" + Call("cycle", {n}) + ")", true));
  }
  return tasks;
}

inline std::vector<Task> PathPairsSuite(const SuiteContext& ctx) {
  std::vector<Task> tasks;
  for (int n = 2; n <= ctx.cap(); ++n) {
    tasks.push_back(OracleTask(ctx, "pair(" + Call("path", {n}) + ")", true));
  }
  return tasks;
}

// Checks all three pair values against their formulas; entries without a
// formula are only bounded by Sd_f.
inline Task PairTableTask(const SuiteContext& ctx, std::string g_spec) {
  const std::string pair = "pair(" + g_spec + ")";
  return Guard(pair, "sdimf", [&ctx, g_spec, pair] {
    const FamilySpec spec = ParseSpec(g_spec);
    const PairOracle o = OraclePair(spec);
    const Graph g = GenerateGraph(spec);
    const DimensionResult r = SimultaneousFractionalDimension(WithComplement(g));
    const Rational dimf = FractionalDimension(g).value;
    const Rational dimf_c = FractionalDimension(Complement(g)).value;
    const Rational sdf = ctx.Oracle(pair, OracleValue::Exact(*o.sdf, o.source)).offset;
    bool ok = r.value == sdf && !CertificateProblem(r);
    std::string expected = "Sd_f " + Str(sdf);
    if (o.dimf) {
      ok = ok && dimf == *o.dimf;
      expected += ", dim_f " + Str(*o.dimf);
    } else {
      ok = ok && dimf <= r.value;
      expected += ", dim_f <= Sd_f";
    }
    if (o.dimf_complement) {
      ok = ok && dimf_c == *o.dimf_complement;
      expected += ", dim_f(complement) " + Str(*o.dimf_complement);
    }
    return Verdict("pair table " + g_spec, pair, "sdimf", ok, expected,
                   "Sd_f " + Str(r.value) + ", dim_f " + Str(dimf) +
                       ", dim_f(complement) " + Str(dimf_c));
  });
}

inline std::vector<Task> UnicyclicTableSuite(const SuiteContext& ctx) {
  std::vector<Task> tasks;
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      tasks.push_back(PairTableTask(ctx, Call("unicyclic_a", {a, b})));
      tasks.push_back(PairTableTask(ctx, Call("unicyclic_b", {a, b})));
      tasks.push_back(PairTableTask(ctx, Call("unicyclic_d", {a, b})));
    }
    tasks.push_back(PairTableTask(ctx, Call("unicyclic_c", {a})));
  }
  for (const char* h : {"h1", "h2", "h3"}) tasks.push_back(PairTableTask(ctx, h));
  for (int n = 4; n <= std::min(ctx.cap(), 10); ++n) tasks.push_back(PairTableTask(ctx, Call("kite", {n})));
  tasks.push_back(PairTableTask(ctx, "cycle(4)"));
  tasks.push_back(PairTableTask(ctx, "cycle(5)"));
  // Both diameters equal 3 for every template.
  for (const char* kind : {"unicyclic_a", "unicyclic_b", "unicyclic_c", "unicyclic_d"}) {
    const std::string k = kind;
    tasks.push_back(Guard(k, "gen", [k] {
      std::string bad;
      for (int a = 1; a <= 5 && bad.empty(); ++a) {
        for (int b = 1; b <= (k == "unicyclic_c" ? 1 : 5) && bad.empty(); ++b) {
          const std::string s = k == "unicyclic_c" ? Call(k.c_str(), {a}) : Call(k.c_str(), {a, b});
          const Graph g = GenerateGraph(s);
          if (!IsUnicyclic(g) || Diameter(g) != 3 || Diameter(Complement(g)) != 3) bad = s;
        }
      }
      return Verdict("unicyclic with both diameters 3: " + k, bad.empty() ? k + "(1,1)" : bad,
                     "gen", bad.empty(), "diam 3 and complement diam 3",
                     bad.empty() ? "holds" : "fails");
    }));
  }
  // Random unicyclic graphs against the three-way split.
  std::mt19937_64 rng(909);
  for (int i = 0; i < 100; ++i) {
    const int n = Draw(rng, 3, std::max(3, std::min(ctx.cap(), 10)));
    const std::string g_spec =
        Call("random_unicyclic", {n, static_cast<std::int64_t>(UniformBelow(rng, 1000000))});
    const std::string pair = "pair(" + g_spec + ")";
    tasks.push_back(Guard(pair, "sdimf", [&ctx, g_spec, pair] {
      const Graph g = GenerateGraph(g_spec);
      const GraphFamily fam = WithComplement(g);
      const OracleValue o = ctx.Oracle(pair, OracleComplementPair(g));
      const std::vector<Rational> member = MemberDimf(fam);
      const Rational value = SimultaneousFractionalDimension(fam).value;
      return Compare("unicyclic pair " + g_spec + " = " + o.Describe(), pair, "sdimf",
                     o.Resolve(member), value);
    }));
  }
  return tasks;
}

inline std::vector<Task> GapFamiliesSuite(const SuiteContext& ctx) {
  std::vector<Task> tasks;
  for (int k = 3; k <= 6; ++k) {
    const std::string a = Call("remark_a_family", {k});
    tasks.push_back(Guard(a, "sdimf", [&ctx, a, k] {
      const GraphFamily fam = Generate(a);
      Rational max_dimf;
      for (const auto& d : MemberDimf(fam)) max_dimf = Max(max_dimf, d);
      const Rational sdf = SimultaneousFractionalDimension(fam).value;
      const Rational want = ctx.Oracle(a, OracleSdimf(ParseSpec(a))).offset;
      const Rational gap = Rational(k) - Rational(3, 2);
      return Verdict("Sd_f - max dim_f = k - 3/2 for " + a, a, "sdimf --bounds",
                     sdf == want && sdf - max_dimf == gap,
                     "Sd_f " + Str(want) + ", gap " + Str(gap),
                     "Sd_f " + Str(sdf) + ", gap " + Str(sdf - max_dimf));
    }));
    const std::string b = Call("remark_b_family", {k});
    tasks.push_back(Guard(b, "sdimf", [&ctx, b, k] {
      const BoundsReport r = ComputeBoundsReport(Generate(b));
      const Rational sdf = ctx.Oracle(b, OracleSdimf(ParseSpec(b))).offset;
      const Rational upper = Min(r.sum_dimf, r.half_n);
      return Verdict("min(sum, n/2) - Sd_f = k/2 for " + b, b, "sdimf --bounds",
                     r.sdf == sdf && upper == Rational(k + 3, 2) &&
                         upper - r.sdf == Rational(k, 2),
                     "Sd_f " + Str(sdf) + ", min(sum, n/2) " + Str(Rational(k + 3, 2)),
                     "Sd_f " + Str(r.sdf) + ", min(sum, n/2) " + Str(upper));
    }));
  }
  for (int k = 4; k <= 8; ++k) {
    const std::string s = Call("star_family", {k});
    tasks.push_back(Guard(s, "sdimf", [&ctx, s, k] {
      const GraphFamily fam = Generate(s);
      const Rational sdf = SimultaneousFractionalDimension(fam).value;
      const int sd = SimultaneousDimension(fam);
      const Rational want = ctx.Oracle(s, OracleSdimf(ParseSpec(s))).offset;
      return Verdict("Sd - Sd_f = (k-2)/2 for " + s, s, "sdimf --bounds",
                     sdf == want && sd == OracleSdim(ParseSpec(s)) &&
                         Rational(sd) - sdf == Rational(k - 2, 2),
                     "Sd " + std::to_string(k - 1) + ", Sd_f " + Str(want),
                     "Sd " + std::to_string(sd) + ", Sd_f " + Str(sdf));
    }));
  }
  for (int k = 2; k <= 4; ++k) {
    const std::string t = Call("fig5_tree", {k});
    const std::string pair = "pair(" + t + ")";
    tasks.push_back(Guard(pair, "sdimf", [&ctx, t, pair, k] {
      const Graph g = GenerateGraph(t);
      const BoundsReport r = ComputeBoundsReport(WithComplement(g));
      const Rational want = ctx.Oracle(pair, OracleSdimf(ParseSpec(pair))).offset;
      const Rational upper = Min(r.sum_dimf, r.half_n);
      return Verdict("min(sum, n/2) - Sd_f = k/2 for " + pair, pair, "sdimf --bounds",
                     r.sdf == want && r.per_member_dimf[0] == want &&
                         r.per_member_dimf[1] == want && upper - r.sdf == Rational(k, 2),
                     "all three " + Str(want) + ", gap " + Str(Rational(k, 2)),
                     "Sd_f " + Str(r.sdf) + ", dim_f " + Str(r.per_member_dimf[0]) +
                         ", dim_f(complement) " + Str(r.per_member_dimf[1]) + ", gap " +
                         Str(upper - r.sdf));
    }));
  }
  return tasks;
}

struct SuiteEntry {
  const char* name;
  int default_cap;
  std::vector<Task> (*build)(const SuiteContext&);
};

inline const std::vector<SuiteEntry>& Registry() {
  static const std::vector<SuiteEntry> kSuites = {
      {"closed_forms", 14, ClosedFormsSuite},
      {"sandwich", 10, SandwichSuite},
      {"twin_bound", 14, TwinBoundSuite},
      {"sdf_one", 8, SdfOneSuite},
      {"figures", 12, FiguresSuite},
      {"mg_constant", 8, MgConstantSuite},
      {"vertex_transitive", 12, VertexTransitiveSuite},
      {"diam2_subset", 10, Diam2SubsetSuite},
      {"diameter_pairs", 10, DiameterPairsSuite},
      {"pair_characterizations", 9, PairCharacterizationsSuite},
      {"tree_pairs", 14, TreePairsSuite},
      {"cycle_pairs", 12, CyclePairsSuite},
      {"path_pairs", 12, PathPairsSuite},
      {"unicyclic_table", 10, UnicyclicTableSuite},
      {"gap_families", 12, GapFamiliesSuite},
  };
  return kSuites;
}

inline std::vector<Check> RunTasks(const std::vector<Task>& tasks, int threads) {
  std::vector<Check> out(tasks.size());
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = tasks[i]();
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace internal

// Suite names in their fixed run order.
inline std::vector<std::string> SuiteNames() {
  std::vector<std::string> out;
  for (const auto& s : internal::Registry()) out.push_back(s.name);
  return out;
}

inline SuiteReport RunSuite(const std::string& name, const SuiteOptions& opts = {}) {
  for (const auto& entry : internal::Registry()) {
    if (name != entry.name) continue;
    const auto start = std::chrono::steady_clock::now();
    internal::SuiteContext ctx(opts, entry.default_cap);
    SuiteReport report{name, internal::RunTasks(entry.build(ctx), opts.threads), 0};
    if (opts.timing) {
      report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    }
    return report;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

inline nlohmann::ordered_json ToJson(const SuiteReport& r) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"description", c.description},
                      {"status", c.pass ? "pass" : "fail"},
                      {"witness",
                       {{"spec", c.witness.spec},
                        {"command", c.witness.command},
                        {"expected", c.witness.expected},
                        {"actual", c.witness.actual}}}});
  }
  return {{"suite", r.suite}, {"checks", checks}, {"elapsed_ms", r.elapsed_ms}};
}

// Human-readable table; failing rows carry the reproducing command.
inline std::string ToTable(const SuiteReport& r) {
  std::ostringstream out;
  out << "suite " << r.suite << ": " << (r.checks.size() - r.failures()) << "/"
      << r.checks.size() << " passed";
  if (r.elapsed_ms > 0) out << " in " << r.elapsed_ms << " ms";
  out << "\n";
  for (const auto& c : r.checks) {
    out << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.description << "\n";
    if (!c.pass) {
      out << "        expected: " << c.witness.expected << "\n"
          << "        actual:   " << c.witness.actual << "\n"
          << "        repro:    fracdim " << c.witness.command << " --spec '"
          << c.witness.spec << "'\n";
    }
  }
  return out.str();
}

}  // namespace fracdim

#endif  // FRACDIM_VERIFY_H_
