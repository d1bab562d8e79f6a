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

// Automorphism group enumeration and the orbit partition of the vertex set
// under the natural action of Aut(G).
//
// Two enumerators are provided. automorphisms_bruteforce() sweeps all n!
// permutations and is only meant as an oracle for small graphs.
// automorphisms() is a backtracking search: vertices are assigned in label
// order, each candidate image must share the vertex invariant (degree and
// sorted distance row) and preserve the distance to every vertex assigned so
// far. Since automorphisms are isometries this never rejects a true
// automorphism, and a complete distance-preserving assignment preserves
// adjacency. Both enumerators return members in lexicographic order of their
// image vectors.

#ifndef GPQSPR_SYMMETRY_H_
#define GPQSPR_SYMMETRY_H_

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpqspr/graph.h"

namespace gpqspr {

// Bijection of 1..n.
class Permutation {
 public:
  // Takes the images of 1..n in order. Throws std::invalid_argument unless
  // the vector is a permutation of 1..n.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[v - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  // Cycle notation with fixed points omitted, e.g. "(1 6)(4 7)(5 8)";
  // the identity renders as "()".
  std::string ToCycleString() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation&, const Permutation&);

  std::vector<int> images_;
};

// (outer o inner)(v) = outer(inner(v)).
Permutation compose(const Permutation& outer, const Permutation& inner);

struct AutomorphismSet {
  int n = 0;
  std::vector<Permutation> members;

  size_t size() const { return members.size(); }
  bool contains(const Permutation& p) const;
};

// True when p maps every edge to an edge (and, being a bijection on a finite
// edge set, every non-edge to a non-edge).
bool preserves_adjacency(const MolecularGraph& g, const Permutation& p);

class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr int kBruteForceMaxVertices = 10;

// Every permutation of 1..n that preserves adjacency. Throws SizeLimitError
// when n > kBruteForceMaxVertices; use automorphisms() for larger graphs.
AutomorphismSet automorphisms_bruteforce(const MolecularGraph& g);

// Pruned backtracking enumeration; same result as the brute-force sweep.
AutomorphismSet automorphisms(const MolecularGraph& g);
AutomorphismSet automorphisms(const MolecularGraph& g, const DistanceMatrix& d);

struct OrbitPartition {
  int n = 0;
  // Members ascending; orbits ordered by their smallest member.
  std::vector<std::vector<int>> orbits;

  size_t size() const { return orbits.size(); }
  friend bool operator==(const OrbitPartition&, const OrbitPartition&) = default;
};

OrbitPartition orbit_partition(const MolecularGraph& g,
                               const AutomorphismSet& aut);

// Renders "{1,6} {2} {3} {4,7} {5,8}".
std::string ToString(const OrbitPartition& orbits);

}  // namespace gpqspr

#endif  // GPQSPR_SYMMETRY_H_
