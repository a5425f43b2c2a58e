// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "msgadv/graph.hpp"
#include "oracles.hpp"

using namespace msgadv;

namespace {

std::vector<oracle::Members> as_members(const std::vector<ProcessSet>& v) {
  std::vector<oracle::Members> out;
  for (ProcessSet s : v) out.push_back(oracle::to_members(s));
  return out;
}

}  // namespace

TEST(CommGraph, SelfLoopsAreImplied) {
  CommGraph g(3, {{1, 2}});
  EXPECT_TRUE(g.has_edge(2, 2));
  EXPECT_TRUE(validate_graph(g).empty());
  EXPECT_EQ(g.edges(false), (std::vector<Edge>{{1, 2}}));
  EXPECT_EQ(g.in(2), (ProcessSet{1, 2}));
  EXPECT_EQ(g.out(1), (ProcessSet{1, 2}));
}

TEST(CommGraph, ValidationReportsViolations) {
  const std::vector<Edge> es{{1, 2}, {2, 2}, {5, 1}};
  const auto v = validate_edges(3, es);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0].kind, GraphViolation::Kind::kEndpointOutOfRange);
  EXPECT_EQ(v[1].edge, (Edge{1, 1}));
  EXPECT_EQ(v[2].edge, (Edge{3, 3}));
  CommGraph bare(2, std::vector<Edge>{{1, 1}}, CommGraph::SelfLoops::kAsGiven);
  EXPECT_EQ(validate_graph(bare).size(), 1u);
  EXPECT_THROW(CommGraph(2, {{1, 3}}), InvalidArgument);
}

TEST(RootComponents, Examples) {
  EXPECT_EQ(root_components(CommGraph(3, {{1, 2}, {2, 3}})),
            std::vector<ProcessSet>{ProcessSet{1}});
  EXPECT_EQ(root_components(CommGraph(4, {{1, 2}, {2, 1}, {3, 4}, {4, 3}})),
            (std::vector<ProcessSet>{{1, 2}, {3, 4}}));
  EXPECT_EQ(root_components(CommGraph(3)),
            (std::vector<ProcessSet>{{1}, {2}, {3}}));
  EXPECT_EQ(root_components(CommGraph(4, {{2, 3}, {3, 2}, {3, 1}, {4, 1}})),
            (std::vector<ProcessSet>{{2, 3}, {4}}));
}

TEST(RootComponents, MatchesSubsetOracleOnRandomGraphs) {
  Rng rng(11);
  for (int i = 0; i < 400; ++i) {
    const int n = rng.range(1, 7);
    const CommGraph g = oracle::random_graph(rng, n, rng.range(5, 60));
    EXPECT_EQ(as_members(root_components(g)), oracle::roots_by_subsets(g));
  }
}

TEST(WeakConnectivity, MatchesBfs) {
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    const CommGraph g = oracle::random_graph(rng, rng.range(1, 8), rng.range(0, 40));
    EXPECT_EQ(is_weakly_connected(g), oracle::weakly_connected_bfs(g));
  }
}

TEST(HopDistance, PathAndUnreachable) {
  const CommGraph g(4, {{1, 2}, {2, 3}});
  EXPECT_EQ(hop_distance(g, 1, 1), 0);
  EXPECT_EQ(hop_distance(g, 1, 3), 2);
  EXPECT_EQ(hop_distance(g, 3, 1), -1);
  EXPECT_EQ(hop_distance(g, 1, 4), -1);
}

TEST(PartialGraph, MergeSubsetAndEquality) {
  PartialGraph a;
  a.add_edge(1, 2);
  PartialGraph b;
  b.add_edge(3, 2);
  EXPECT_FALSE(a.subset_of(b));
  b.merge(a);
  EXPECT_TRUE(a.subset_of(b));
  EXPECT_EQ(b.endpoints(), (ProcessSet{1, 2, 3}));
  EXPECT_TRUE(b.subset_of(CommGraph(3, {{1, 2}, {3, 2}})));
  EXPECT_FALSE(b.subset_of(CommGraph(3, {{1, 2}})));

  PartialGraph c;
  c.add_edge(1, 2);
  c.add_edge(3, 2);
  EXPECT_EQ(b, c);
  EXPECT_FALSE(PartialGraph{}.has_out_edge(1));
  EXPECT_TRUE(PartialGraph{}.empty());
  EXPECT_EQ(PartialGraph{}, PartialGraph{});
}

TEST(PartialGraph, RootsIncludeOwner) {
  PartialGraph g;
  EXPECT_EQ(g.roots(2), std::vector<ProcessSet>{ProcessSet{2}});
  g.add_edge(1, 2);
  g.add_edge(2, 2);
  EXPECT_EQ(g.roots(2), std::vector<ProcessSet>{ProcessSet{1}});
  g.add_edge(3, 3);
  EXPECT_EQ(g.roots(2), (std::vector<ProcessSet>{{1}, {3}}));
}
