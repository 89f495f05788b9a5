// Copyright 2026 The distdet Authors
//
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


#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <queue>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distdet/error.hpp"
#include "distdet/matrix.hpp"

namespace distdet {

using Vertex = std::size_t;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Throws GraphError on a loop, a repeated edge or an endpoint >= n.
  Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
    std::set<Edge> seen;
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
      if (e.v >= n)
        throw GraphError(GraphError::Reason::kVertexRange,
                         "edge endpoint " + std::to_string(e.v) +
                             " out of range for n=" + std::to_string(n));
      if (e.u == e.v)
        throw GraphError(GraphError::Reason::kLoop,
                         "loop at vertex " + std::to_string(e.u));
      if (!seen.insert(e).second)
        throw GraphError(GraphError::Reason::kDuplicateEdge,
                         "duplicate edge " + std::to_string(e.u) + " " +
                             std::to_string(e.v));
      edges_.push_back(e);
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
  }
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a >= order() || b >= order()) return false;
    const auto& na = adj_[a];
    return std::find(na.begin(), na.end(), b) != na.end();
  }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

/// Shortest-path lengths in hops.
using DistanceMatrix = Matrix<long>;

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

/// Splits on blanks and parses every token as a non-negative integer.
inline std::optional<std::vector<std::size_t>> parse_numbers(std::string_view s) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i == s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + j, value);
    if (ec != std::errc{} || ptr != s.data() + j) return std::nullopt;
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace detail

/// Parses the edge-list format: a vertex-count line, then one "u v" line per
/// edge. Blank lines and lines starting with '#' are skipped; CRLF is accepted.
inline Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = detail::trim(text.substr(pos, nl - pos));
    ++line_no;
    pos = nl + 1;
    if (line.empty() || line.front() == '#') continue;

    auto nums = detail::parse_numbers(line);
    using R = GraphError::Reason;
    if (!n) {
      if (!nums || nums->size() != 1)
        throw GraphError(R::kMalformed, "expected vertex count", line_no);
      n = nums->front();
      continue;
    }
    if (!nums || nums->size() != 2)
      throw GraphError(R::kMalformed, "expected \"u v\"", line_no);
    const std::size_t a = (*nums)[0], b = (*nums)[1];
    if (a >= *n || b >= *n)
      throw GraphError(R::kVertexRange, "vertex out of range", line_no);
    if (a == b)
      throw GraphError(R::kLoop, "loop at vertex " + std::to_string(a), line_no);
    if (!seen.insert(Edge(a, b)).second)
      throw GraphError(R::kDuplicateEdge, "duplicate edge", line_no);
    edges.emplace_back(a, b);
  }
  if (!n) throw GraphError(GraphError::Reason::kMalformed, "missing vertex count");
  return Graph(*n, edges);
}

inline Graph read_edge_list(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

inline void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.order() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

/// Hop distances from `source`; unreachable vertices get -1.
inline std::vector<long> bfs_distances(const Graph& g, Vertex source) {
  std::vector<long> dist(g.order(), -1);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex x = frontier.front();
    frontier.pop();
    for (Vertex y : g.neighbors(x))
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        frontier.push(y);
      }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](long x) { return x < 0; });
}

/// BFS from every vertex. Throws ConnectivityError on disconnected input.
inline DistanceMatrix distance_matrix(const Graph& g) {
  const std::size_t n = g.order();
  DistanceMatrix d(n, n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = bfs_distances(g, s);
    for (Vertex t = 0; t < n; ++t) {
      if (row[t] < 0) throw ConnectivityError();
      d(s, t) = row[t];
    }
  }
  return d;
}

/// Subgraph on `vertices` (relabelled 0..k-1 in the given order) with the
/// listed edges.
inline Graph relabeled_subgraph(std::span<const Vertex> vertices,
                                std::span<const Edge> edges) {
  std::map<Vertex, Vertex> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
  std::vector<Edge> local;
  local.reserve(edges.size());
  for (const Edge& e : edges) {
    auto a = index.find(e.u), b = index.find(e.v);
    if (a == index.end() || b == index.end())
      throw InvalidArgument("edge endpoint not among subgraph vertices");
    local.emplace_back(a->second, b->second);
  }
  return Graph(vertices.size(), local);
}

}  // namespace distdet
