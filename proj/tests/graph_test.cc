// Copyright 2026 The gpqspr Authors
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

#include "gpqspr/graph.h"

#include <random>
#include <utility>
#include <vector>

#include "gtest/gtest.h"
#include "test_support.h"

namespace gpqspr {
namespace {

using testing::EdgeList;

GraphErrorKind KindOf(int n, const EdgeList& edges) {
  try {
    build_graph(n, edges);
  } catch (const GraphError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a GraphError";
  return GraphErrorKind::kEmpty;
}

TEST(BuildGraphTest, Ethane) {
  const EdgeList edges = {{1, 2}};
  const MolecularGraph g = build_graph(2, edges, "ethane");
  EXPECT_EQ(g.vertex_count(), 2);
  EXPECT_EQ(g.name(), "ethane");
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_TRUE(g.adjacent(2, 1));
}

TEST(BuildGraphTest, SingleVertex) {
  const MolecularGraph g = build_graph(1, EdgeList{});
  EXPECT_EQ(g.vertex_count(), 1);
  EXPECT_TRUE(g.edges().empty());
}

TEST(BuildGraphTest, WorkedExampleKeepsNumbering) {
  const MolecularGraph g = testing::WorkedExampleGraph();
  EXPECT_EQ(g.vertex_count(), 8);
  EXPECT_EQ(g.edges().size(), 7u);
  EXPECT_EQ(g.degree(2), 3);
  EXPECT_EQ(g.degree(3), 3);
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_TRUE(g.adjacent(7, 8));
  EXPECT_FALSE(g.adjacent(1, 6));
}

TEST(BuildGraphTest, ErrorKindsAreDistinct) {
  EXPECT_EQ(KindOf(3, {{1, 2}}), GraphErrorKind::kDisconnected);
  EXPECT_EQ(KindOf(2, {{1, 1}, {1, 2}}), GraphErrorKind::kSelfLoop);
  EXPECT_EQ(KindOf(2, {{1, 2}, {2, 1}}), GraphErrorKind::kDuplicateEdge);
  EXPECT_EQ(KindOf(2, {{1, 2}, {1, 2}}), GraphErrorKind::kDuplicateEdge);
  EXPECT_EQ(KindOf(8, {{1, 9}}), GraphErrorKind::kOutOfRange);
  EXPECT_EQ(KindOf(2, {{0, 1}}), GraphErrorKind::kOutOfRange);
  EXPECT_EQ(KindOf(0, {}), GraphErrorKind::kEmpty);
}

TEST(BuildGraphTest, EdgesAreNormalizedAndSorted) {
  const EdgeList edges = {{3, 2}, {2, 1}};
  const MolecularGraph g = build_graph(3, edges);
  ASSERT_EQ(g.edges().size(), 2u);
  EXPECT_EQ(g.edges()[0], (Edge{1, 2}));
  EXPECT_EQ(g.edges()[1], (Edge{2, 3}));
  EXPECT_EQ(g, path_graph(3));
}

TEST(PathGraphTest, Shapes) {
  EXPECT_EQ(path_graph(1).vertex_count(), 1);
  EXPECT_TRUE(path_graph(1).edges().empty());

  const MolecularGraph butane = path_graph(4);
  EXPECT_EQ(butane.edges(), (std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}}));

  const MolecularGraph dotriacontane = path_graph(32);
  EXPECT_EQ(dotriacontane.vertex_count(), 32);
  EXPECT_EQ(dotriacontane.edges().size(), 31u);
  EXPECT_TRUE(dotriacontane.adjacent(31, 32));
}

TEST(DistanceMatrixTest, Examples) {
  EXPECT_EQ(distance_matrix(path_graph(3)).at(1, 3), 2);
  EXPECT_EQ(distance_matrix(path_graph(8)).at(1, 8), 7);
  const DistanceMatrix d = distance_matrix(testing::WorkedExampleGraph());
  EXPECT_EQ(d.at(5, 8), 4);
  EXPECT_EQ(d.at(1, 6), 2);
  EXPECT_EQ(d.at(4, 7), 2);
}

TEST(DistanceMatrixTest, PathDistancesAreLabelDifferences) {
  for (int n = 1; n <= 40; ++n) {
    const DistanceMatrix d = distance_matrix(path_graph(n));
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) ASSERT_EQ(d.at(i, j), std::abs(i - j));
    }
  }
}

TEST(DistanceMatrixTest, CycleDistances) {
  const DistanceMatrix d = distance_matrix(cycle_graph(6));
  EXPECT_EQ(d.at(1, 4), 3);
  EXPECT_EQ(d.at(1, 6), 1);
  EXPECT_EQ(d.at(2, 6), 2);
}

// Metric invariants and agreement with a BFS oracle on random graphs.
TEST(DistanceMatrixTest, MatchesBfsAndIsAMetric) {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const double p = (rng() % 4) * 0.05;
    const MolecularGraph g = testing::RandomConnectedGraph(rng, n, p);
    const DistanceMatrix d = distance_matrix(g);
    const auto oracle = testing::BfsDistances(g);
    for (int i = 1; i <= n; ++i) {
      ASSERT_EQ(d.at(i, i), 0);
      for (int j = 1; j <= n; ++j) {
        ASSERT_EQ(d.at(i, j), oracle[i - 1][j - 1]) << "trial " << trial;
        ASSERT_EQ(d.at(i, j), d.at(j, i));
        if (i != j) ASSERT_GE(d.at(i, j), 1);
        for (int k = 1; k <= n; ++k) {
          ASSERT_LE(d.at(i, k), d.at(i, j) + d.at(j, k));
        }
      }
    }
  }
}

}  // namespace
}  // namespace gpqspr
