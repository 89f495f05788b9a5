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
#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "distdet/error.hpp"
#include "distdet/generators.hpp"
#include "distdet/graph.hpp"
#include "distdet/theta.hpp"

namespace distdet {

/// Maximal connected subgraph without a cut vertex, in original vertex ids.
struct Block {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // sorted

  /// The block as a standalone graph, vertices relabelled in sorted order.
  Graph as_graph() const { return relabeled_subgraph(vertices, edges); }
};

/// Blocks of a connected graph via one DFS with lowpoints and an edge stack.
/// K1 has no blocks. Throws ConnectivityError on disconnected input.
inline std::vector<Block> biconnected_components(const Graph& g) {
  const std::size_t n = g.order();
  if (!is_connected(g)) throw ConnectivityError();
  std::vector<Block> blocks;
  if (n <= 1) return blocks;

  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnseen), low(n, 0);
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  std::vector<Edge> edge_stack;
  std::size_t clock = 0;

  disc[0] = low[0] = clock++;
  stack.push_back({0, kUnseen});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const Vertex v = f.v;
    auto nbrs = g.neighbors(v);
    if (f.next < nbrs.size()) {
      const Vertex w = nbrs[f.next++];
      if (disc[w] == kUnseen) {
        edge_stack.emplace_back(v, w);
        disc[w] = low[w] = clock++;
        stack.push_back({w, v});
      } else if (w != f.parent && disc[w] < disc[v]) {
        edge_stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    if (stack.empty()) break;
    const Vertex u = stack.back().v;
    low[u] = std::min(low[u], low[v]);
    if (low[v] >= disc[u]) {
      // u separates v's subtree: everything above tree edge (u, v) is a block
      Block b;
      const Edge tree_edge(u, v);
      while (true) {
        Edge e = edge_stack.back();
        edge_stack.pop_back();
        b.edges.push_back(e);
        b.vertices.push_back(e.u);
        b.vertices.push_back(e.v);
        if (e == tree_edge) break;
      }
      std::sort(b.edges.begin(), b.edges.end());
      std::sort(b.vertices.begin(), b.vertices.end());
      b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()),
                       b.vertices.end());
      blocks.push_back(std::move(b));
    }
  }
  return blocks;
}

struct BlockKind {
  enum class Tag { kEdge, kCycle, kTheta, kUnsupported };

  Tag tag = Tag::kUnsupported;
  std::size_t cycle_length = 0;  // kCycle only
  ThetaTriple theta{};           // kTheta only, sorted ascending

  static BlockKind edge() { return {Tag::kEdge}; }
  static BlockKind cycle(std::size_t n) { return {Tag::kCycle, n}; }
  static BlockKind theta_block(ThetaTriple t) { return {Tag::kTheta, 0, t.sorted()}; }
  static BlockKind unsupported() { return {Tag::kUnsupported}; }

  friend bool operator==(const BlockKind&, const BlockKind&) = default;

  std::string to_string() const {
    switch (tag) {
      case Tag::kEdge:
        return "Edge";
      case Tag::kCycle:
        return "Cycle(" + std::to_string(cycle_length) + ")";
      case Tag::kTheta:
        return "Theta" + theta.to_string();
      case Tag::kUnsupported:
        break;
    }
    return "Unsupported";
  }
};

namespace detail {

inline std::map<Vertex, std::vector<Vertex>> block_adjacency(const Block& b) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (Vertex v : b.vertices) adj[v];
  for (const Edge& e : b.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

}  // namespace detail

/// Walks the three internally disjoint paths between the two degree-3
/// vertices of a theta block and returns their lengths sorted ascending.
inline ThetaTriple theta_params(const Block& b) {
  auto adj = detail::block_adjacency(b);
  std::vector<Vertex> branch;
  for (const auto& [v, nbrs] : adj) {
    if (nbrs.size() == 3) branch.push_back(v);
    else if (nbrs.size() != 2) throw InvariantError("theta block has a vertex of degree " + std::to_string(nbrs.size()));
  }
  if (branch.size() != 2) throw InvariantError("theta block needs two branch vertices");

  std::array<std::size_t, 3> lengths{};
  for (std::size_t i = 0; i < 3; ++i) {
    Vertex prev = branch[0];
    Vertex cur = adj[branch[0]][i];
    std::size_t len = 1;
    while (cur != branch[1]) {
      if (cur == branch[0] || len > b.edges.size())
        throw InvariantError("theta path does not reach the other branch vertex");
      const auto& nb = adj[cur];
      Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    lengths[i] = len;
  }
  ThetaTriple t = ThetaTriple{lengths[0], lengths[1], lengths[2]}.sorted();
  if (t.edge_count() != b.edges.size() || !t.valid())
    throw InvariantError("theta path lengths do not cover the block");
  return t;
}

/// Edge, cycle or theta by vertex/edge counts and degree pattern; anything
/// else is Unsupported.
inline BlockKind classify_block(const Block& b) {
  const std::size_t nv = b.vertices.size(), ne = b.edges.size();
  if (nv == 2 && ne == 1) return BlockKind::edge();
  auto adj = detail::block_adjacency(b);
  std::size_t deg2 = 0, deg3 = 0;
  for (const auto& [v, nbrs] : adj) {
    if (nbrs.size() == 2) ++deg2;
    else if (nbrs.size() == 3) ++deg3;
  }
  if (nv >= 3 && ne == nv && deg2 == nv) return BlockKind::cycle(nv);
  if (ne == nv + 1 && deg3 == 2 && deg2 == nv - 2)
    return BlockKind::theta_block(theta_params(b));
  return BlockKind::unsupported();
}

struct ClassifiedBlock {
  Block block;
  BlockKind kind;
};

inline std::vector<ClassifiedBlock> decompose(const Graph& g) {
  std::vector<ClassifiedBlock> out;
  for (auto& b : biconnected_components(g)) {
    BlockKind k = classify_block(b);
    out.push_back({std::move(b), k});
  }
  return out;
}

/// Thrown when a graph has a block that is not an edge, a cycle or a theta.
class UnsupportedGraphError : public Error {
 public:
  explicit UnsupportedGraphError(Block block)
      : Error(describe(block)), block_(std::move(block)) {}
  const Block& block() const noexcept { return block_; }

 private:
  static std::string describe(const Block& b) {
    std::string s = "unsupported block on vertices {";
    for (std::size_t i = 0; i < b.vertices.size(); ++i)
      s += (i ? "," : "") + std::to_string(b.vertices[i]);
    return s + "} with " + std::to_string(b.edges.size()) + " edges";
  }
  Block block_;
};

/// Census of the blocks of a graph whose blocks are edges, cycles and thetas.
struct BlockInventory {
  bool single_vertex = false;                // G = K1
  std::size_t edge_blocks = 0;               // m
  std::vector<std::size_t> cycle_lengths;    // every cycle block, sorted
  std::vector<ThetaTriple> theta_triples;    // every theta block, sorted

  std::vector<std::size_t> odd_cycle_lengths;
  std::vector<std::pair<std::size_t, std::size_t>> one_even_even;  // (p, q)
  std::size_t two_two_two = 0;
  std::vector<std::size_t> two_two_odd;      // q
  std::size_t zero_blocks = 0;               // even cycles + singular thetas

  std::size_t m() const { return edge_blocks; }
  std::size_t c() const { return cycle_lengths.size(); }
  std::size_t r() const { return one_even_even.size(); }
  std::size_t s() const { return two_two_two; }
  std::size_t t() const { return two_two_odd.size(); }
  bool has_zero_block() const { return zero_blocks > 0; }
  std::size_t block_count() const {
    return edge_blocks + cycle_lengths.size() + theta_triples.size();
  }
};

/// Throws UnsupportedGraphError carrying the first offending block.
inline BlockInventory census(std::span<const ClassifiedBlock> blocks) {
  BlockInventory inv;
  for (const auto& cb : blocks) {
    switch (cb.kind.tag) {
      case BlockKind::Tag::kEdge:
        ++inv.edge_blocks;
        break;
      case BlockKind::Tag::kCycle: {
        const std::size_t len = cb.kind.cycle_length;
        inv.cycle_lengths.push_back(len);
        if (len % 2) inv.odd_cycle_lengths.push_back(len);
        else ++inv.zero_blocks;
        break;
      }
      case BlockKind::Tag::kTheta: {
        const ThetaTriple& t = cb.kind.theta;
        inv.theta_triples.push_back(t);
        switch (theta_case(t)) {
          case ThetaCase::kOneEvenEven:
            inv.one_even_even.emplace_back(t.p, t.q);
            break;
          case ThetaCase::kTwoTwoTwo:
            ++inv.two_two_two;
            break;
          case ThetaCase::kTwoTwoOdd:
            inv.two_two_odd.push_back(t.q);
            break;
          case ThetaCase::kZero:
            ++inv.zero_blocks;
            break;
        }
        break;
      }
      case BlockKind::Tag::kUnsupported:
        throw UnsupportedGraphError(cb.block);
    }
  }
  std::sort(inv.cycle_lengths.begin(), inv.cycle_lengths.end());
  std::sort(inv.odd_cycle_lengths.begin(), inv.odd_cycle_lengths.end());
  std::sort(inv.theta_triples.begin(), inv.theta_triples.end());
  std::sort(inv.one_even_even.begin(), inv.one_even_even.end());
  std::sort(inv.two_two_odd.begin(), inv.two_two_odd.end());
  return inv;
}

inline BlockInventory inventory(const Graph& g) {
  auto blocks = decompose(g);
  BlockInventory inv = census(blocks);
  inv.single_vertex = g.order() == 1;
  return inv;
}

/// True when the inventory lists exactly the blocks of the request
/// (requests with non-theta extra blocks never match).
inline bool same_blocks(const BlockInventory& inv, const BlockRequest& req) {
  if (!req.others.empty()) return false;
  std::vector<std::size_t> cycles = req.cycles;
  std::sort(cycles.begin(), cycles.end());
  std::vector<ThetaTriple> thetas;
  for (const auto& t : req.thetas) thetas.push_back(t.sorted());
  std::sort(thetas.begin(), thetas.end());
  return inv.edge_blocks == req.edges && inv.cycle_lengths == cycles &&
         inv.theta_triples == thetas;
}

}  // namespace distdet
