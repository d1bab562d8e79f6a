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

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace gpqspr {

const char* ToString(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::kEmpty:
      return "empty";
    case GraphErrorKind::kOutOfRange:
      return "out-of-range";
    case GraphErrorKind::kSelfLoop:
      return "self-loop";
    case GraphErrorKind::kDuplicateEdge:
      return "duplicate-edge";
    case GraphErrorKind::kDisconnected:
      return "disconnected";
  }
  return "unknown";
}

bool MolecularGraph::adjacent(int u, int v) const {
  return adjacency_[static_cast<size_t>(u - 1) * vertex_count_ + (v - 1)] != 0;
}

int MolecularGraph::degree(int u) const {
  return static_cast<int>(neighbors_[u - 1].size());
}

std::span<const int> MolecularGraph::neighbors(int u) const {
  return neighbors_[u - 1];
}

MolecularGraph build_graph(int vertex_count,
                           std::span<const std::pair<int, int>> edges,
                           std::string name) {
  if (vertex_count < 1) {
    throw GraphError(GraphErrorKind::kEmpty,
                     "graph needs at least one vertex, got " +
                         std::to_string(vertex_count));
  }
  MolecularGraph g;
  g.vertex_count_ = vertex_count;
  g.name_ = std::move(name);
  g.neighbors_.assign(vertex_count, {});
  g.adjacency_.assign(static_cast<size_t>(vertex_count) * vertex_count, 0);

  for (const auto& [a, b] : edges) {
    const std::string pair =
        "{" + std::to_string(a) + "," + std::to_string(b) + "}";
    if (a < 1 || a > vertex_count || b < 1 || b > vertex_count) {
      throw GraphError(GraphErrorKind::kOutOfRange,
                       "edge " + pair + " has an endpoint outside 1.." +
                           std::to_string(vertex_count));
    }
    if (a == b) {
      throw GraphError(GraphErrorKind::kSelfLoop, "self-loop at " + pair);
    }
    auto& cell = g.adjacency_[static_cast<size_t>(a - 1) * vertex_count + (b - 1)];
    if (cell != 0) {
      throw GraphError(GraphErrorKind::kDuplicateEdge, "duplicate edge " + pair);
    }
    cell = 1;
    g.adjacency_[static_cast<size_t>(b - 1) * vertex_count + (a - 1)] = 1;
    g.neighbors_[a - 1].push_back(b);
    g.neighbors_[b - 1].push_back(a);
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  for (auto& list : g.neighbors_) std::sort(list.begin(), list.end());

  // Connectivity from vertex 1.
  std::vector<bool> seen(vertex_count, false);
  std::vector<int> stack = {1};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors_[u - 1]) {
      if (!seen[w - 1]) {
        seen[w - 1] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertex_count) {
    const auto it = std::find(seen.begin(), seen.end(), false);
    throw GraphError(GraphErrorKind::kDisconnected,
                     "graph is disconnected: vertex " +
                         std::to_string(it - seen.begin() + 1) +
                         " is unreachable from vertex 1");
  }
  return g;
}

MolecularGraph path_graph(int n, std::string name) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(n, edges, std::move(name));
}

MolecularGraph cycle_graph(int n, std::string name) {
  if (n < 3) {
    throw std::invalid_argument("a simple cycle needs at least 3 vertices");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n, 1);
  return build_graph(n, edges, std::move(name));
}

DistanceMatrix distance_matrix(const MolecularGraph& g) {
  const int n = g.vertex_count();
  // Large enough to never win a comparison, small enough that a sum of two
  // cannot overflow.
  constexpr int kUnreached = std::numeric_limits<int>::max() / 4;
  DistanceMatrix m(n);
  std::fill(m.d_.begin(), m.d_.end(), kUnreached);
  for (int i = 0; i < n; ++i) m.d_[m.index(i, i)] = 0;
  for (const Edge& e : g.edges()) {
    m.d_[m.index(e.u - 1, e.v - 1)] = 1;
    m.d_[m.index(e.v - 1, e.u - 1)] = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      const int dik = m.d_[m.index(i, k)];
      if (dik == kUnreached) continue;
      int* row = m.d_.data() + m.index(i, 0);
      const int* krow = m.d_.data() + m.index(k, 0);
      for (int j = 0; j < n; ++j) {
        row[j] = std::min(row[j], dik + krow[j]);
      }
    }
  }
  return m;
}

}  // namespace gpqspr
