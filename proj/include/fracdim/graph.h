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

// Simple undirected graphs on the dense vertex range 0..n-1, the edge-list
// text format, complements, and BFS distances with an explicit infinity for
// vertices in different components.

#ifndef FRACDIM_GRAPH_H_
#define FRACDIM_GRAPH_H_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fracdim/error.h"

namespace fracdim {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Graphs with more vertices are outside the supported range.
inline constexpr int kMaxVertices = 1 << 16;

class Graph {
 public:
  Graph() : Graph(1) {}
  explicit Graph(int n) : adj_(CheckOrder(n)) {}

  // Throws std::invalid_argument on a self-loop, duplicate edge or an
  // endpoint outside 0..n-1.
  Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (const auto& [u, v] : edges) AddEdge(u, v);
  }

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return num_edges_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

  bool HasEdge(Vertex u, Vertex v) const {
    const auto& nu = adj_.at(u);
    return std::binary_search(nu.begin(), nu.end(), v);
  }

  void AddEdge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= order() || v >= order()) {
      throw std::invalid_argument("vertex id out of range in edge " +
                                  std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (HasEdge(u, v)) {
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                  std::to_string(v));
    }
    InsertSorted(adj_[u], v);
    InsertSorted(adj_[v], u);
    ++num_edges_;
  }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> Edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(num_edges_));
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  static std::size_t CheckOrder(int n) {
    if (n < 1 || n > kMaxVertices) {
      throw std::invalid_argument("graph order must be in 1.." +
                                  std::to_string(kMaxVertices));
    }
    return static_cast<std::size_t>(n);
  }
  static void InsertSorted(std::vector<Vertex>& list, Vertex v) {
    list.insert(std::upper_bound(list.begin(), list.end(), v), v);
  }

  std::vector<std::vector<Vertex>> adj_;
  int num_edges_ = 0;
};

// Extended natural: a hop count or kInfinity. kInfinity equals only itself.
using Distance = std::uint32_t;
inline constexpr Distance kInfinity = std::numeric_limits<Distance>::max();

inline std::string DistanceToString(Distance d) {
  return d == kInfinity ? "inf" : std::to_string(d);
}

class DistanceMatrix {
 public:
  explicit DistanceMatrix(int n)
      : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                  kInfinity) {}
  int order() const { return n_; }
  Distance operator()(Vertex u, Vertex v) const { return d_[Index(u, v)]; }
  Distance& at(Vertex u, Vertex v) { return d_[Index(u, v)]; }

 private:
  std::size_t Index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }
  int n_;
  std::vector<Distance> d_;
};

inline std::vector<Distance> BfsDistances(const Graph& g, Vertex source) {
  std::vector<Distance> dist(static_cast<std::size_t>(g.order()), kInfinity);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kInfinity) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline DistanceMatrix AllPairsDistances(const Graph& g) {
  DistanceMatrix dm(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto row = BfsDistances(g, s);
    for (Vertex t = 0; t < g.order(); ++t) dm.at(s, t) = row[t];
  }
  return dm;
}

// Largest pairwise distance; kInfinity iff g is disconnected.
inline Distance Diameter(const DistanceMatrix& dm) {
  if (dm.order() < 2) {
    throw std::invalid_argument("diameter needs at least two vertices");
  }
  Distance best = 0;
  for (Vertex u = 0; u < dm.order(); ++u) {
    for (Vertex v = u + 1; v < dm.order(); ++v) best = std::max(best, dm(u, v));
  }
  return best;
}

inline Distance Diameter(const Graph& g) {
  if (g.order() < 2) {
    throw std::invalid_argument("diameter needs at least two vertices");
  }
  return Diameter(AllPairsDistances(g));
}

inline Graph Complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.HasEdge(u, v)) out.AddEdge(u, v);
    }
  }
  return out;
}

inline bool IsConnected(const Graph& g) {
  const auto d = BfsDistances(g, 0);
  return std::none_of(d.begin(), d.end(),
                      [](Distance x) { return x == kInfinity; });
}

inline bool IsTree(const Graph& g) {
  return g.size() == g.order() - 1 && IsConnected(g);
}

inline bool IsPath(const Graph& g) {
  if (!IsTree(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

inline bool IsCycle(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order() || !IsConnected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

inline bool IsComplete(const Graph& g) {
  return 2 * static_cast<long>(g.size()) ==
         static_cast<long>(g.order()) * (g.order() - 1);
}

inline bool IsUnicyclic(const Graph& g) {
  return g.size() == g.order() && IsConnected(g);
}

namespace internal {

inline std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string> Tokens(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline bool ParseInt(const std::string& tok, long& out) {
  if (tok.empty() || tok.size() > 9) return false;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
  }
  out = std::stol(tok);
  return true;
}

inline std::string AtLine(int line) { return " at line " + std::to_string(line); }

// Consumes one `u v` edge line into g, reporting errors with the line number.
inline void ParseEdgeLine(const std::vector<std::string>& toks, int line_no,
                          Graph& g) {
  long u = 0;
  long v = 0;
  if (toks.size() != 2 || !ParseInt(toks[0], u) || !ParseInt(toks[1], v)) {
    throw ParseError("malformed edge line" + AtLine(line_no));
  }
  if (u >= g.order() || v >= g.order()) {
    throw ParseError("vertex id out of range" + AtLine(line_no));
  }
  if (u == v) throw ParseError("self-loop" + AtLine(line_no));
  if (g.HasEdge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
    throw ParseError("duplicate edge" + AtLine(line_no));
  }
  g.AddEdge(static_cast<Vertex>(u), static_cast<Vertex>(v));
}

inline int ParseHeader(const std::vector<std::string>& toks, int line_no) {
  long n = 0;
  if (toks.size() != 2 || toks[0] != "n" || !ParseInt(toks[1], n) || n < 1 ||
      n > kMaxVertices) {
    throw ParseError("expected header 'n <count>'" + AtLine(line_no));
  }
  return static_cast<int>(n);
}

}  // namespace internal

// Edge-list format: a header line `n <count>`, then one `u v` pair per line.
// Blank lines and lines starting with '#' are ignored.
inline Graph ParseGraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  Graph g;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = internal::Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto toks = internal::Tokens(line);
    if (!have_header) {
      g = Graph(internal::ParseHeader(toks, line_no));
      have_header = true;
      continue;
    }
    internal::ParseEdgeLine(toks, line_no, g);
  }
  if (!have_header) throw ParseError("missing header 'n <count>'");
  return g;
}

inline std::string ToEdgeList(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << "\n";
  for (const auto& [u, v] : g.Edges()) out << u << " " << v << "\n";
  return out.str();
}

}  // namespace fracdim

#endif  // FRACDIM_GRAPH_H_
