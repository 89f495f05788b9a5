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
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "distdet/error.hpp"
#include "distdet/graph.hpp"
#include "distdet/theta.hpp"

namespace distdet {

/// Path with m edges on vertices 0..m in order.
inline Graph build_path(std::size_t m) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < m; ++i) edges.emplace_back(i, i + 1);
  return Graph(m + 1, edges);
}

/// Cycle 0-1-...-(n-1)-0. Requires n >= 3.
inline Graph build_cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

inline Graph build_complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

/// Theta graph with branch vertices 0 and 1, then the interior vertices of
/// the l-path, the p-path and the q-path, each walked from 0 towards 1.
inline Graph build_theta(std::size_t l, std::size_t p, std::size_t q) {
  if (l < 1 || p < 2 || q < 2)
    throw InvalidArgument("theta needs l >= 1, p >= 2, q >= 2, got " +
                          ThetaTriple{l, p, q}.to_string());
  std::vector<Edge> edges;
  Vertex next = 2;
  for (std::size_t len : {l, p, q}) {
    Vertex prev = 0;
    for (std::size_t i = 1; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 1);
  }
  return Graph(next, edges);
}

inline Graph build_theta(const ThetaTriple& t) { return build_theta(t.l, t.p, t.q); }

/// Identifies vertex `block_vertex` of `block` with vertex `at` of `host`.
/// The remaining block vertices are appended after the host's ids, in order.
inline Graph glue(const Graph& host, Vertex at, const Graph& block,
                  Vertex block_vertex) {
  if (at >= host.order() || block_vertex >= block.order())
    throw InvalidArgument("glue vertex out of range");
  std::vector<Vertex> map(block.order());
  Vertex next = host.order();
  for (Vertex v = 0; v < block.order(); ++v)
    map[v] = v == block_vertex ? at : next++;
  std::vector<Edge> edges = host.edges();
  for (const Edge& e : block.edges()) edges.emplace_back(map[e.u], map[e.v]);
  return Graph(next, edges);
}

/// Hangs a path of m new edges from v; the new vertices follow the old ids
/// in path order.
inline Graph attach_path(const Graph& g, Vertex v, std::size_t m) {
  if (v >= g.order()) throw InvalidArgument("attach_path vertex out of range");
  if (m == 0) return g;
  return glue(g, v, build_path(m), 0);
}

/// Vertex orders used by the congruence checks. With N = 2k+2s (or 2k+2 for
/// the (1,2,2k) layouts) every layout is the cycle 0-1-...-(N-1)-0 plus one
/// chord; the pendant variants add vertex N adjacent to vertex 0.
///
///   k_1_2_2k            chord 1 -- 2k+1         theta(1, 2, 2k)
///   k_1_2s_2k           chord s -- s+2k         theta(1, 2s, 2k)
///   k_1_2sm2_2kp2       chord s-1 -- s+2k+1     theta(1, 2s-2, 2k+2)
///
/// Vertex 0 is the midpoint of the even path opposite the short chord side.
enum class LabeledFamily {
  kTheta_1_2_2k,
  kTheta_1_2s_2k,
  kTheta_1_2sm2_2kp2,
  kPendant_1_2_2k,
  kPendant_1_2s_2k,
  kPendant_1_2sm2_2kp2,
};

inline Graph build_labeled_theta_family(LabeledFamily family, std::size_t k,
                                        std::size_t s = 0) {
  using F = LabeledFamily;
  const bool single = family == F::kTheta_1_2_2k || family == F::kPendant_1_2_2k;
  if (single ? k < 1 : (k < 2 || s < 2))
    throw InvalidArgument("labeled theta family parameters out of range");

  std::size_t n = 0;
  Edge chord;
  switch (family) {
    case F::kTheta_1_2_2k:
    case F::kPendant_1_2_2k:
      n = 2 * k + 2;
      chord = Edge(1, 2 * k + 1);
      break;
    case F::kTheta_1_2s_2k:
    case F::kPendant_1_2s_2k:
      n = 2 * k + 2 * s;
      chord = Edge(s, s + 2 * k);
      break;
    case F::kTheta_1_2sm2_2kp2:
    case F::kPendant_1_2sm2_2kp2:
      n = 2 * k + 2 * s;
      chord = Edge(s - 1, s + 2 * k + 1);
      break;
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  edges.push_back(chord);
  const bool pendant = family == F::kPendant_1_2_2k ||
                       family == F::kPendant_1_2s_2k ||
                       family == F::kPendant_1_2sm2_2kp2;
  if (pendant) {
    edges.emplace_back(0, n);
    ++n;
  }
  return Graph(n, edges);
}

/// Multiset of blocks to assemble into one connected graph.
struct BlockRequest {
  std::size_t edges = 0;
  std::vector<std::size_t> cycles;
  std::vector<ThetaTriple> thetas;
  /// Arbitrary 2-connected blocks (e.g. K4) outside the at-most-bicyclic class.
  std::vector<Graph> others;

  std::size_t block_count() const {
    return edges + cycles.size() + thetas.size() + others.size();
  }
  std::size_t vertex_count() const {
    std::size_t n = 1 + edges;
    for (auto c : cycles) n += c - 1;
    for (const auto& t : thetas) n += t.vertex_count() - 1;
    for (const auto& g : others) n += g.order() - 1;
    return n;
  }
};

/// Deterministic for a fixed seed. Blocks are attached in a shuffled order,
/// each at a uniformly chosen vertex of the graph built so far and through a
/// uniformly chosen vertex of its own; the result is then relabelled by a
/// random permutation.
inline Graph random_block_graph(const BlockRequest& request, std::uint64_t seed) {
  if (request.block_count() == 0) throw InvalidArgument("empty block request");
  std::vector<Graph> blocks;
  for (std::size_t i = 0; i < request.edges; ++i) blocks.push_back(build_path(1));
  for (auto c : request.cycles) blocks.push_back(build_cycle(c));
  for (const auto& t : request.thetas) {
    if (!t.valid()) throw InvalidArgument("invalid theta triple " + t.to_string());
    ThetaTriple s = t.sorted();
    blocks.push_back(build_theta(s.l, s.p, s.q));
  }
  for (const auto& g : request.others) blocks.push_back(g);

  std::mt19937_64 rng(seed);
  std::shuffle(blocks.begin(), blocks.end(), rng);
  auto pick = [&](std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
  };

  Graph g = blocks.front();
  for (std::size_t i = 1; i < blocks.size(); ++i)
    g = glue(g, pick(g.order()), blocks[i], pick(blocks[i].order()));

  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph(g.order(), edges);
}

struct RequestOptions {
  /// Allow even cycles and theta blocks whose distance matrix is singular.
  bool allow_zero_blocks = false;
  /// Allow K4 blocks, which no closed form here covers.
  bool allow_unsupported = false;
};

/// Random block multiset on between 2 and max(2, max_n) vertices.
inline BlockRequest random_block_request(std::size_t max_n, std::uint64_t seed,
                                         RequestOptions options = {}) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  BlockRequest req;
  const std::size_t target = uniform(2, std::max<std::size_t>(2, max_n));
  std::size_t n = 1;
  while (n < target) {
    const std::size_t room = target - n;  // vertices we may still add
    switch (uniform(0, 7)) {
      case 0:
      case 1:
        ++req.edges;
        ++n;
        break;
      case 2:
        if (room >= 2) {
          std::size_t len = 2 * uniform(1, room / 2) + 1;
          req.cycles.push_back(len);
          n += len - 1;
        }
        break;
      case 3:
        if (room >= 3) {
          // theta(1, 2a, 2b) adds 2a + 2b - 1 vertices
          std::size_t a = uniform(1, (room - 1) / 2);
          std::size_t b = uniform(1, std::max<std::size_t>(1, (room + 1) / 2 - a));
          if (2 * a + 2 * b - 1 > room) b = 1;
          if (2 * a + 2 * b - 1 > room) break;
          req.thetas.push_back(ThetaTriple{1, 2 * a, 2 * b}.sorted());
          n += 2 * a + 2 * b - 1;
        }
        break;
      case 4:
        if (room >= 4) {
          req.thetas.push_back({2, 2, 2});
          n += 4;
        }
        break;
      case 5:
        if (room >= 5) {
          std::size_t q = 2 * uniform(1, (room - 3) / 2) + 1;
          req.thetas.push_back({2, 2, q});
          n += q + 2;
        }
        break;
      case 6:
        if (options.allow_zero_blocks && room >= 3) {
          if (uniform(0, 1) == 0) {
            std::size_t len = 2 * uniform(2, std::max<std::size_t>(2, (room + 1) / 2));
            if (len - 1 <= room) {
              req.cycles.push_back(len);
              n += len - 1;
            }
          } else {
            ThetaTriple t{uniform(1, 4), uniform(2, 6), uniform(2, 6)};
            t = t.sorted();
            if (theta_case(t) == ThetaCase::kZero && t.vertex_count() - 1 <= room) {
              req.thetas.push_back(t);
              n += t.vertex_count() - 1;
            }
          }
        }
        break;
      case 7:
        if (options.allow_unsupported && room >= 3) {
          req.others.push_back(build_complete(4));
          n += 3;
        }
        break;
    }
  }
  return req;
}

/// Deterministic chain of nonsingular blocks on exactly n >= 2 vertices:
/// triangle, edge, theta(1,2,2), 5-cycle, theta(2,2,3), theta(2,2,2), repeated,
/// each glued to the newest vertex of the chain. Edges fill the tail.
inline Graph block_chain(std::size_t n) {
  if (n < 2) throw InvalidArgument("block_chain needs n >= 2");
  const std::vector<Graph> pattern = {build_cycle(3),       build_path(1),
                                      build_theta(1, 2, 2), build_cycle(5),
                                      build_theta(2, 2, 3), build_theta(2, 2, 2)};
  Graph g(1);
  std::size_t i = 0;
  while (g.order() < n) {
    const Graph& b = pattern[i++ % pattern.size()];
    const Graph& next = g.order() + b.order() - 1 <= n ? b : pattern[1];
    g = glue(g, g.order() - 1, next, 0);
  }
  return g;
}

}  // namespace distdet
