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

// Hydrogen-suppressed molecular graphs and their all-pairs hop distances.
//
// Every public interface speaks 1-based vertex labels (1..n). Internally,
// adjacency and distances are stored 0-based.

#ifndef GPQSPR_GRAPH_H_
#define GPQSPR_GRAPH_H_

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gpqspr {

enum class GraphErrorKind {
  kEmpty,
  kOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kDisconnected,
};

const char* ToString(GraphErrorKind kind);

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  GraphErrorKind kind() const { return kind_; }

 private:
  GraphErrorKind kind_;
};

// Unordered vertex pair, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected, simple, connected graph. Only constructible through
// build_graph() (and helpers built on it), so every instance is valid.
class MolecularGraph {
 public:
  int vertex_count() const { return vertex_count_; }
  // Sorted ascending, each normalized to u < v.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& name() const { return name_; }

  bool adjacent(int u, int v) const;
  int degree(int u) const;
  // Neighbor labels of u, ascending.
  std::span<const int> neighbors(int u) const;

  // Structural equality: vertex count and edge set. The name is ignored.
  friend bool operator==(const MolecularGraph& a, const MolecularGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  friend MolecularGraph build_graph(int, std::span<const std::pair<int, int>>,
                                    std::string);

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::string name_;
  std::vector<std::vector<int>> neighbors_;  // 1-based labels, per 0-based row
  std::vector<std::uint8_t> adjacency_;      // n*n, row-major, 0-based
};

// Validates and builds a graph. Throws GraphError with a distinct kind for
// an empty vertex set, out-of-range endpoints, self-loops, duplicate edges
// (in either orientation) and disconnected input.
MolecularGraph build_graph(int vertex_count,
                           std::span<const std::pair<int, int>> edges,
                           std::string name = {});

// Path on n vertices: edges {i, i+1}. The unbranched alkane skeleton.
MolecularGraph path_graph(int n, std::string name = {});

// Cycle on n >= 3 vertices.
MolecularGraph cycle_graph(int n, std::string name = {});

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n, 0) {}

  int size() const { return n_; }
  // Hop count between labels u and v (1-based).
  int at(int u, int v) const { return d_[index(u - 1, v - 1)]; }
  // Row of label u, indexed 0-based by (label - 1).
  std::span<const int> row(int u) const {
    return {d_.data() + static_cast<size_t>(u - 1) * n_,
            static_cast<size_t>(n_)};
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  friend DistanceMatrix distance_matrix(const MolecularGraph& g);

  size_t index(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }

  int n_ = 0;
  std::vector<int> d_;
};

// All-pairs shortest-path hop counts by Floyd-Warshall, O(n^3).
DistanceMatrix distance_matrix(const MolecularGraph& g);

}  // namespace gpqspr

#endif  // GPQSPR_GRAPH_H_
