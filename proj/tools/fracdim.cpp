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

// Command-line front end.
//
//   fracdim dimf    [FILE | --spec S] [--assignment] [--certificate] [--json] [--decimal K]
//   fracdim sdimf   [FILE | --spec S] [--with-complement] [--bounds] [...as dimf]
//   fracdim dim     [FILE | --spec S] [--json]
//   fracdim sdim    [FILE | --spec S] [--with-complement] [--json]
//   fracdim twins   [FILE | --spec S] [--json]
//   fracdim profile [FILE | --spec S] [--json]
//   fracdim gen     --spec S
//   fracdim verify  SUITE|all [--budget n=CAP] [--json] [--timing]
//
// Exit status: 0 success, 1 verification failure, 2 bad input, 3 internal
// consistency failure.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fracdim/fracdim.h"
#include "json.hpp"

namespace {

using fracdim::GraphFamily;
using fracdim::Rational;
using Json = nlohmann::ordered_json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;

struct InputFlags {
  std::string file;
  std::string spec;
  bool with_complement = false;
};

struct OutputFlags {
  bool json = false;
  bool assignment = false;
  bool certificate = false;
  bool bounds = false;
  int decimal = -1;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fracdim::ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A file holding `graph` blocks is a family file; otherwise an edge list.
GraphFamily LoadFamily(const InputFlags& in) {
  if (in.file.empty() == in.spec.empty()) {
    throw fracdim::ParseError("give exactly one of FILE or --spec");
  }
  GraphFamily fam = [&] {
    if (!in.spec.empty()) return fracdim::Generate(in.spec);
    const std::string text = ReadFile(in.file);
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      const auto t = fracdim::internal::Trim(line);
      if (t.rfind("graph", 0) == 0) return fracdim::ParseFamily(text);
    }
    return GraphFamily({fracdim::ParseGraph(text)});
  }();
  if (!in.with_complement) return fam;
  if (fam.size() != 1) throw fracdim::ParseError("--with-complement needs a single graph");
  return fracdim::WithComplement(fam[0]);
}

fracdim::Graph LoadGraph(const InputFlags& in) {
  GraphFamily fam = LoadFamily(in);
  if (fam.size() != 1) throw fracdim::ParseError("expected a single graph, got a family");
  return fam[0];
}

Json Rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.ToString());
  return out;
}

std::string ValueText(const Rational& v, const OutputFlags& out) {
  std::string s = v.ToString();
  if (out.decimal >= 0) s += " (approx " + v.ToDecimal(out.decimal) + ")";
  return s;
}

int RunFractional(const InputFlags& in, const OutputFlags& out, bool family) {
  const GraphFamily fam = family ? LoadFamily(in) : GraphFamily({LoadGraph(in)});
  if (fam.order() < 2) throw fracdim::ParseError("dimension needs n >= 2");
  const fracdim::DimensionResult r = fracdim::SimultaneousFractionalDimension(fam);
  std::optional<fracdim::BoundsReport> bounds;
  if (out.bounds) {
    if (fam.size() < 2) throw fracdim::ParseError("--bounds needs a family of k >= 2 graphs");
    bounds = fracdim::ComputeBoundsReport(fam);
  }
  const std::size_t m = r.lp.cover_sets.size();
  const std::vector<Rational> cover_dual(r.certificate.begin(), r.certificate.begin() + m);
  const std::vector<Rational> bound_dual(r.certificate.begin() + m, r.certificate.end());

  if (out.json) {
    Json j;
    j["n"] = fam.order();
    j["k"] = fam.size();
    j["value"] = r.value.ToString();
    if (out.decimal >= 0) j["approx"] = r.value.ToDecimal(out.decimal);
    j["constraints"] = r.constraint_count;
    if (out.assignment) j["assignment"] = Rationals(r.assignment);
    if (out.certificate) {
      Json sets = Json::array();
      for (const auto& s : r.lp.cover_sets) sets.push_back(s);
      j["certificate"] = {{"cover_sets", sets},
                          {"cover_duals", Rationals(cover_dual)},
                          {"upper_bound_duals", Rationals(bound_dual)}};
    }
    if (bounds) {
      j["bounds"] = {{"max_dimf", bounds->max_dimf.ToString()},
                     {"sum_dimf", bounds->sum_dimf.ToString()},
                     {"half_n", bounds->half_n.ToString()},
                     {"sdf", bounds->sdf.ToString()},
                     {"sd", bounds->sd},
                     {"per_member_dimf", Rationals(bounds->per_member_dimf)}};
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (bounds) {
    std::cout << "sdf " << ValueText(bounds->sdf, out) << "\n"
              << "sd " << bounds->sd << "\n"
              << "max_dimf " << ValueText(bounds->max_dimf, out) << "\n"
              << "sum_dimf " << ValueText(bounds->sum_dimf, out) << "\n"
              << "half_n " << ValueText(bounds->half_n, out) << "\n";
    for (std::size_t i = 0; i < fam.size(); ++i) {
      std::cout << "dimf " << fam.names()[i] << " "
                << ValueText(bounds->per_member_dimf[i], out) << "\n";
    }
  } else {
    std::cout << ValueText(r.value, out) << "\n";
  }
  if (out.assignment) {
    for (std::size_t v = 0; v < r.assignment.size(); ++v) {
      std::cout << "x " << v << " " << r.assignment[v].ToString() << "\n";
    }
  }
  if (out.certificate) {
    for (std::size_t i = 0; i < m; ++i) {
      std::cout << "y " << i << " " << cover_dual[i].ToString() << " {";
      for (std::size_t t = 0; t < r.lp.cover_sets[i].size(); ++t) {
        std::cout << (t ? "," : "") << r.lp.cover_sets[i][t];
      }
      std::cout << "}\n";
    }
    for (std::size_t v = 0; v < bound_dual.size(); ++v) {
      std::cout << "z " << v << " " << bound_dual[v].ToString() << "\n";
    }
  }
  return 0;
}

int RunIntegral(const InputFlags& in, const OutputFlags& out, bool family) {
  const GraphFamily fam = family ? LoadFamily(in) : GraphFamily({LoadGraph(in)});
  if (fam.order() < 2) throw fracdim::ParseError("dimension needs n >= 2");
  if (fam.order() > fracdim::kMaxHittingSetVars) {
    throw fracdim::ParseError("integral dimension supports n <= " +
                              std::to_string(fracdim::kMaxHittingSetVars));
  }
  const fracdim::CoveringLp lp = fracdim::ToCoveringLp(fracdim::ConstraintSystem(fam, true),
                                                      fam.order());
  const std::vector<int> set = fracdim::MinHittingSet(lp);
  if (out.json) {
    std::cout << Json{{"value", set.size()}, {"set", set}}.dump(2) << "\n";
  } else {
    std::cout << set.size() << "\n";
  }
  return 0;
}

int RunTwins(const InputFlags& in, const OutputFlags& out) {
  const GraphFamily fam = LoadFamily(in);
  Json j = Json::array();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const auto part = fracdim::ComputeTwinPartition(fam[i]);
    if (out.json) {
      j.push_back({{"graph", fam.names()[i]}, {"classes", part.classes}});
      continue;
    }
    std::cout << fam.names()[i] << ":";
    for (const auto& cls : part.classes) {
      std::cout << " {";
      for (std::size_t t = 0; t < cls.size(); ++t) std::cout << (t ? "," : "") << cls[t];
      std::cout << "}";
    }
    std::cout << "\n";
  }
  if (out.json) std::cout << j.dump(2) << "\n";
  return 0;
}

int RunProfile(const InputFlags& in, const OutputFlags& out) {
  const fracdim::Graph g = LoadGraph(in);
  if (!fracdim::IsTree(g)) throw fracdim::ParseError("profile needs a tree");
  const fracdim::TreeProfile p = fracdim::ComputeTreeProfile(g);
  if (out.json) {
    Json majors = Json::array();
    for (const auto& m : p.exterior_majors) {
      majors.push_back({{"vertex", m.vertex},
                        {"terminal_degree", m.terminal_degree},
                        {"terminals", m.terminals}});
    }
    std::cout << Json{{"sigma", p.sigma}, {"ex", p.ex}, {"ex1", p.ex1},
                      {"exterior_majors", majors}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "sigma " << p.sigma << "\nex " << p.ex << "\nex1 " << p.ex1 << "\n";
  for (const auto& m : p.exterior_majors) {
    std::cout << "major " << m.vertex << " ter " << m.terminal_degree << " terminals";
    for (auto t : m.terminals) std::cout << " " << t;
    std::cout << "\n";
  }
  return 0;
}

int RunGen(const InputFlags& in) {
  const GraphFamily fam = LoadFamily(in);
  std::cout << (fam.size() == 1 ? fracdim::ToEdgeList(fam[0]) : fracdim::ToFamilyFile(fam));
  return 0;
}

int ParseBudget(const std::string& budget) {
  if (budget.empty()) return 0;
  const auto eq = budget.find('=');
  long cap = 0;
  if (eq == std::string::npos || budget.substr(0, eq) != "n" ||
      !fracdim::internal::ParseInt(budget.substr(eq + 1), cap) || cap < 2 || cap > 64) {
    throw fracdim::ParseError("budget must look like n=<cap> with 2 <= cap <= 64");
  }
  return static_cast<int>(cap);
}

int RunVerify(const std::string& suite, const std::string& budget, bool json, bool timing) {
  fracdim::SuiteOptions opts;
  opts.max_n = ParseBudget(budget);
  opts.threads = fracdim::ThreadsFromEnvironment();
  opts.timing = timing;
  std::vector<std::string> names;
  if (suite == "all") {
    names = fracdim::SuiteNames();
  } else {
    const auto all = fracdim::SuiteNames();
    if (std::find(all.begin(), all.end(), suite) == all.end()) {
      throw fracdim::ParseError("unknown suite '" + suite + "'");
    }
    names = {suite};
  }
  bool ok = true;
  Json reports = Json::array();
  for (const auto& name : names) {
    const fracdim::SuiteReport r = fracdim::RunSuite(name, opts);
    ok = ok && r.passed();
    if (json) {
      reports.push_back(fracdim::ToJson(r));
    } else {
      std::cout << fracdim::ToTable(r);
    }
  }
  if (json) std::cout << (names.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  return ok ? 0 : kExitVerifyFailed;
}

void AddInput(CLI::App* cmd, InputFlags& in, bool complement) {
  cmd->add_option("file", in.file, "edge-list or family file");
  cmd->add_option("--spec", in.spec, "generator spec, e.g. cycle(7) or pair(path(5))");
  if (complement) {
    cmd->add_flag("--with-complement", in.with_complement, "pair a single graph with its complement");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact fractional metric dimension of graphs and graph families"};
  app.require_subcommand(1);
  InputFlags in;
  OutputFlags out;
  std::string suite;
  std::string budget;
  bool timing = false;

  auto* dimf = app.add_subcommand("dimf", "fractional metric dimension of a graph");
  auto* sdimf = app.add_subcommand("sdimf", "simultaneous fractional dimension of a family");
  for (auto* cmd : {dimf, sdimf}) {
    AddInput(cmd, in, cmd == sdimf);
    cmd->add_flag("--assignment", out.assignment, "print an optimal resolving function");
    cmd->add_flag("--certificate", out.certificate, "print the dual optimality certificate");
    cmd->add_flag("--json", out.json, "JSON output");
    cmd->add_option("--decimal", out.decimal, "also print a K-digit decimal approximation")
        ->check(CLI::Range(0, 100));
  }
  sdimf->add_flag("--bounds", out.bounds, "print the max/sum/half-n bound sandwich");
  auto* dim = app.add_subcommand("dim", "metric dimension of a graph");
  auto* sdim = app.add_subcommand("sdim", "simultaneous metric dimension of a family");
  for (auto* cmd : {dim, sdim}) {
    AddInput(cmd, in, cmd == sdim);
    cmd->add_flag("--json", out.json, "JSON output");
  }
  auto* twins = app.add_subcommand("twins", "twin classes of every member");
  auto* profile = app.add_subcommand("profile", "end-vertex profile of a tree");
  for (auto* cmd : {twins, profile}) {
    AddInput(cmd, in, false);
    cmd->add_flag("--json", out.json, "JSON output");
  }
  auto* gen = app.add_subcommand("gen", "emit a spec as an edge list or family file");
  AddInput(gen, in, false);
  auto* verify = app.add_subcommand("verify", "run a verification suite, or all");
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  verify->add_option("--budget", budget, "size cap, n=<cap>");
  verify->add_flag("--json", out.json, "JSON report");
  verify->add_flag("--timing", timing, "report elapsed_ms (otherwise 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (dimf->parsed()) return RunFractional(in, out, false);
    if (sdimf->parsed()) return RunFractional(in, out, true);
    if (dim->parsed()) return RunIntegral(in, out, false);
    if (sdim->parsed()) return RunIntegral(in, out, true);
    if (twins->parsed()) return RunTwins(in, out);
    if (profile->parsed()) return RunProfile(in, out);
    if (gen->parsed()) return RunGen(in);
    if (verify->parsed()) return RunVerify(suite, budget, out.json, timing);
  } catch (const fracdim::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const fracdim::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitBadInput;
}
