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


#include <algorithm>

#include "gtest/gtest.h"

#include "distdet/blocks.hpp"
#include "distdet/closed_form.hpp"
#include "distdet/generators.hpp"
#include "distdet/verify.hpp"

namespace distdet {
namespace {

TEST(BiconnectedComponents, Path) {
  auto blocks = biconnected_components(build_path(2));
  ASSERT_EQ(blocks.size(), 2u);
  for (const auto& b : blocks) EXPECT_EQ(classify_block(b), BlockKind::edge());
}

TEST(BiconnectedComponents, CycleIsOneBlock) {
  auto blocks = biconnected_components(build_cycle(5));
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(blocks[0].vertices.size(), 5u);
  EXPECT_EQ(blocks[0].edges.size(), 5u);
}

TEST(BiconnectedComponents, TriangleWithPendant) {
  auto blocks = decompose(attach_path(build_cycle(3), 0, 1));
  ASSERT_EQ(blocks.size(), 2u);
  std::vector<std::string> kinds;
  for (const auto& b : blocks) kinds.push_back(b.kind.to_string());
  std::sort(kinds.begin(), kinds.end());
  EXPECT_EQ(kinds, (std::vector<std::string>{"Cycle(3)", "Edge"}));
}

TEST(BiconnectedComponents, SingleVertexAndDisconnected) {
  EXPECT_TRUE(biconnected_components(Graph(1)).empty());
  EXPECT_THROW(biconnected_components(Graph(3, {Edge(0, 1)})), ConnectivityError);
}

TEST(BiconnectedComponents, BowTieSharesCutVertex) {
  Graph g(5, {Edge(0, 1), Edge(1, 2), Edge(2, 0), Edge(2, 3), Edge(3, 4), Edge(4, 2)});
  auto blocks = biconnected_components(g);
  ASSERT_EQ(blocks.size(), 2u);
  for (const auto& b : blocks) {
    EXPECT_EQ(classify_block(b), BlockKind::cycle(3));
    EXPECT_TRUE(std::binary_search(b.vertices.begin(), b.vertices.end(), Vertex{2}));
  }
}

TEST(ClassifyBlock, Kinds) {
  EXPECT_EQ(classify_block(biconnected_components(build_path(1)).front()), BlockKind::edge());
  EXPECT_EQ(classify_block(biconnected_components(build_cycle(5)).front()), BlockKind::cycle(5));
  EXPECT_EQ(classify_block(biconnected_components(build_complete(4)).front()),
            BlockKind::unsupported());
  EXPECT_EQ(classify_block(biconnected_components(build_theta(3, 4, 3)).front()),
            BlockKind::theta_block({3, 3, 4}));
}

TEST(ClassifyBlock, DenseBlocksAreUnsupported) {
  // theta plus one chord: |E| = |V| + 2
  std::vector<Edge> edges = build_theta(2, 3, 3).edges();
  edges.emplace_back(2, 3);
  auto blocks = biconnected_components(Graph(7, edges));
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(classify_block(blocks[0]).tag, BlockKind::Tag::kUnsupported);
}

TEST(ThetaParams, ConstructionRoundTrip) {
  EXPECT_EQ(theta_params(biconnected_components(build_theta(1, 2, 2)).front()),
            (ThetaTriple{1, 2, 2}));
  EXPECT_EQ(theta_params(biconnected_components(build_theta(3, 3, 4)).front()),
            (ThetaTriple{3, 3, 4}));
  // K_{2,3}
  Graph k23(5, {Edge(0, 2), Edge(0, 3), Edge(0, 4), Edge(1, 2), Edge(1, 3), Edge(1, 4)});
  EXPECT_EQ(theta_params(biconnected_components(k23).front()), (ThetaTriple{2, 2, 2}));
}

TEST(ThetaParams, AllSmallTriplesRoundTripSorted) {
  for (std::size_t l = 1; l <= 7; ++l)
    for (std::size_t p = 2; p <= 7; ++p)
      for (std::size_t q = 2; q <= 7; ++q) {
        auto blocks = biconnected_components(build_theta(l, p, q));
        ASSERT_EQ(blocks.size(), 1u);
        EXPECT_EQ(classify_block(blocks[0]), BlockKind::theta_block({l, p, q}));
        EXPECT_EQ(theta_params(blocks[0]), (ThetaTriple{l, p, q}.sorted()));
      }
}

TEST(ThetaParams, RejectsNonTheta) {
  EXPECT_THROW(theta_params(biconnected_components(build_cycle(5)).front()), InvariantError);
}

TEST(Inventory, Tree) {
  Graph tree(6, {Edge(0, 1), Edge(1, 2), Edge(1, 3), Edge(3, 4), Edge(3, 5)});
  BlockInventory inv = inventory(tree);
  EXPECT_EQ(inv.m(), 5u);
  EXPECT_EQ(inv.c(), 0u);
  EXPECT_EQ(inv.r(), 0u);
  EXPECT_EQ(inv.s(), 0u);
  EXPECT_EQ(inv.t(), 0u);
  EXPECT_FALSE(inv.has_zero_block());
}

TEST(Inventory, WorkedInstance) {
  Graph g = random_block_graph({.edges = 1, .cycles = {3}, .thetas = {{1, 2, 2}}}, 7);
  BlockInventory inv = inventory(g);
  EXPECT_EQ(inv.m(), 1u);
  EXPECT_EQ(inv.c(), 1u);
  EXPECT_EQ(inv.odd_cycle_lengths, (std::vector<std::size_t>{3}));
  EXPECT_EQ(inv.r(), 1u);
  EXPECT_EQ(inv.one_even_even.front().first + inv.one_even_even.front().second, 4u);
  EXPECT_EQ(inv.s(), 0u);
  EXPECT_EQ(inv.t(), 0u);
}

TEST(Inventory, CensusClasses) {
  Graph g = random_block_graph(
      {.cycles = {3, 4}, .thetas = {{1, 2, 4}, {2, 2, 2}, {2, 2, 5}, {2, 3, 3}, {1, 3, 3}}}, 1);
  BlockInventory inv = inventory(g);
  EXPECT_EQ(inv.c(), 2u);
  EXPECT_EQ(inv.r(), 1u);
  EXPECT_EQ(inv.s(), 1u);
  EXPECT_EQ(inv.two_two_odd, (std::vector<std::size_t>{5}));
  EXPECT_EQ(inv.zero_blocks, 3u);  // C4, (2,3,3), (1,3,3)
  EXPECT_TRUE(inv.has_zero_block());
}

TEST(Inventory, UnsupportedBlockCarriesVertices) {
  Graph g = glue(build_complete(4), 2, build_cycle(3), 0);
  try {
    inventory(g);
    FAIL();
  } catch (const UnsupportedGraphError& e) {
    EXPECT_EQ(e.block().vertices, (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_EQ(e.block().edges.size(), 6u);
  }
}

TEST(Inventory, SingleVertex) {
  BlockInventory inv = inventory(Graph(1));
  EXPECT_TRUE(inv.single_vertex);
  EXPECT_EQ(inv.block_count(), 0u);
}

TEST(BlockProperties, EdgePartitionOnFuzzGraphs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Graph g = random_block_graph(
        random_block_request(40, seed, {.allow_zero_blocks = true, .allow_unsupported = true}),
        seed + 100);
    auto blocks = biconnected_components(g);
    std::vector<Edge> all;
    for (const auto& b : blocks) {
      all.insert(all.end(), b.edges.begin(), b.edges.end());
      // a block never has a cut vertex: removing any vertex keeps it connected
      Graph bg = b.as_graph();
      if (bg.order() > 2)
        for (Vertex drop = 0; drop < bg.order(); ++drop) {
          std::vector<Vertex> keep;
          for (Vertex v = 0; v < bg.order(); ++v)
            if (v != drop) keep.push_back(v);
          std::vector<Edge> kept;
          for (const Edge& e : bg.edges())
            if (e.u != drop && e.v != drop) kept.push_back(e);
          ASSERT_TRUE(is_connected(relabeled_subgraph(keep, kept)));
        }
    }
    std::sort(all.begin(), all.end());
    std::vector<Edge> expected = g.edges();
    std::sort(expected.begin(), expected.end());
    ASSERT_EQ(all, expected) << "seed " << seed;
  }
}

TEST(BlockProperties, EdgeCountsAddUp) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Graph g = campaign_graph(3, seed, 40, {.allow_zero_blocks = true});
    BlockInventory inv = inventory(g);
    std::size_t edges = inv.m();
    for (auto c : inv.cycle_lengths) edges += c;
    for (const auto& t : inv.theta_triples) edges += t.edge_count();
    ASSERT_EQ(edges, g.size());
  }
}

TEST(BlockProperties, CycleClassificationMatchesOracle) {
  // a block is a cycle exactly when its det/cof follow the cycle values
  for (std::size_t n = 3; n <= 12; ++n) {
    Graph c = build_cycle(n);
    EXPECT_EQ(classify_block(biconnected_components(c).front()), BlockKind::cycle(n));
    EXPECT_EQ(det_cof_oracle(c), cycle_detcof(n));
  }
}

}  // namespace
}  // namespace distdet
