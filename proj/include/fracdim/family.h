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

#ifndef FRACDIM_FAMILY_H_
#define FRACDIM_FAMILY_H_

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fracdim/error.h"
#include "fracdim/graph.h"

namespace fracdim {

// Graphs on one shared vertex set 0..n-1. A single member is allowed, which
// makes the simultaneous quantities coincide with the per-graph ones.
class GraphFamily {
 public:
  GraphFamily(std::vector<Graph> members, std::vector<std::string> names = {})
      : members_(std::move(members)), names_(std::move(names)) {
    if (members_.empty()) throw std::invalid_argument("graph family is empty");
    for (const auto& g : members_) {
      if (g.order() != members_.front().order()) {
        throw std::invalid_argument("family members have different orders");
      }
    }
    if (names_.empty()) {
      for (std::size_t i = 0; i < members_.size(); ++i) {
        names_.push_back("G" + std::to_string(i + 1));
      }
    }
    if (names_.size() != members_.size()) {
      throw std::invalid_argument("family names do not match members");
    }
  }

  int order() const { return members_.front().order(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<Graph>& members() const { return members_; }
  const Graph& operator[](std::size_t i) const { return members_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<Graph> members_;
  std::vector<std::string> names_;
};

inline GraphFamily WithComplement(const Graph& g) {
  return GraphFamily({g, Complement(g)}, {"G", "complement"});
}

// Family file: header `n <count>`, then blocks each opened by `graph <name>`
// and followed by edge lines. '#' comments and blank lines are ignored.
inline GraphFamily ParseFamily(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  int n = 0;
  std::vector<Graph> members;
  std::vector<std::string> names;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = internal::Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto toks = internal::Tokens(line);
    if (n == 0) {
      n = internal::ParseHeader(toks, line_no);
      continue;
    }
    if (toks.front() == "graph") {
      if (toks.size() != 2) {
        throw ParseError("expected 'graph <name>'" + internal::AtLine(line_no));
      }
      members.emplace_back(n);
      names.push_back(toks[1]);
      continue;
    }
    if (members.empty()) {
      throw ParseError("edge line before first 'graph' block" +
                       internal::AtLine(line_no));
    }
    internal::ParseEdgeLine(toks, line_no, members.back());
  }
  if (n == 0) throw ParseError("missing header 'n <count>'");
  if (members.empty()) throw ParseError("family file has no 'graph' block");
  return GraphFamily(std::move(members), std::move(names));
}

inline std::string ToFamilyFile(const GraphFamily& fam) {
  std::ostringstream out;
  out << "n " << fam.order() << "\n";
  for (std::size_t i = 0; i < fam.size(); ++i) {
    out << "graph " << fam.names()[i] << "\n";
    for (const auto& [u, v] : fam[i].Edges()) out << u << " " << v << "\n";
  }
  return out.str();
}

}  // namespace fracdim

#endif  // FRACDIM_FAMILY_H_
