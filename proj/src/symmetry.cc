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

#include "gpqspr/symmetry.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace gpqspr {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n == 0) throw std::invalid_argument("permutation of an empty set");
  std::vector<bool> hit(n, false);
  for (int image : images_) {
    if (image < 1 || image > n || hit[image - 1]) {
      throw std::invalid_argument("not a permutation of 1.." +
                                  std::to_string(n));
    }
    hit[image - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images), Unchecked{});
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i] - 1] = i + 1;
  return Permutation(std::move(inv), Unchecked{});
}

std::string Permutation::ToCycleString() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (int start = 1; start <= size(); ++start) {
    if (done[start - 1] || images_[start - 1] == start) continue;
    out += '(';
    int v = start;
    do {
      if (v != start) out += ' ';
      out += std::to_string(v);
      done[v - 1] = true;
      v = images_[v - 1];
    } while (v != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) {
    throw std::invalid_argument("composing permutations of different degree");
  }
  std::vector<int> images(inner.size());
  for (int v = 1; v <= inner.size(); ++v) images[v - 1] = outer(inner(v));
  return Permutation(std::move(images), Permutation::Unchecked{});
}

bool AutomorphismSet::contains(const Permutation& p) const {
  return std::find(members.begin(), members.end(), p) != members.end();
}

bool preserves_adjacency(const MolecularGraph& g, const Permutation& p) {
  if (p.size() != g.vertex_count()) return false;
  for (const Edge& e : g.edges()) {
    if (!g.adjacent(p(e.u), p(e.v))) return false;
  }
  return true;
}

AutomorphismSet automorphisms_bruteforce(const MolecularGraph& g) {
  const int n = g.vertex_count();
  if (n > kBruteForceMaxVertices) {
    throw SizeLimitError("brute-force automorphism sweep is capped at " +
                         std::to_string(kBruteForceMaxVertices) +
                         " vertices (got " + std::to_string(n) +
                         "); use automorphisms() instead");
  }
  AutomorphismSet result{n, {}};
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  do {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (!g.adjacent(images[e.u - 1], images[e.v - 1])) {
        ok = false;
        break;
      }
    }
    if (ok) result.members.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

namespace {

class AutomorphismSearch {
 public:
  AutomorphismSearch(const MolecularGraph& g, const DistanceMatrix& d)
      : n_(g.vertex_count()), d_(d), image_(n_, 0), used_(n_, false) {
    // Invariant classes: (degree, sorted distance row). Equal invariants are
    // necessary for u -> w in any automorphism.
    std::vector<std::vector<int>> signature(n_);
    for (int u = 1; u <= n_; ++u) {
      auto row = d_.row(u);
      signature[u - 1].assign(row.begin(), row.end());
      std::sort(signature[u - 1].begin(), signature[u - 1].end());
      signature[u - 1].insert(signature[u - 1].begin(), g.degree(u));
    }
    candidates_.resize(n_);
    for (int u = 1; u <= n_; ++u) {
      for (int w = 1; w <= n_; ++w) {
        if (signature[u - 1] == signature[w - 1]) {
          candidates_[u - 1].push_back(w);
        }
      }
    }
  }

  AutomorphismSet Run() {
    AutomorphismSet result{n_, {}};
    Extend(1, result);
    return result;
  }

 private:
  void Extend(int u, AutomorphismSet& out) {
    if (u > n_) {
      out.members.emplace_back(image_);
      return;
    }
    for (int w : candidates_[u - 1]) {
      if (used_[w - 1] || !Consistent(u, w)) continue;
      image_[u - 1] = w;
      used_[w - 1] = true;
      Extend(u + 1, out);
      used_[w - 1] = false;
    }
    image_[u - 1] = 0;
  }

  // Distances to all previously assigned vertices must be preserved.
  bool Consistent(int u, int w) const {
    for (int v = 1; v < u; ++v) {
      if (d_.at(u, v) != d_.at(w, image_[v - 1])) return false;
    }
    return true;
  }

  int n_;
  const DistanceMatrix& d_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> image_;
  std::vector<bool> used_;
};

}  // namespace

AutomorphismSet automorphisms(const MolecularGraph& g, const DistanceMatrix& d) {
  return AutomorphismSearch(g, d).Run();
}

AutomorphismSet automorphisms(const MolecularGraph& g) {
  return automorphisms(g, distance_matrix(g));
}

OrbitPartition orbit_partition(const MolecularGraph& g,
                               const AutomorphismSet& aut) {
  const int n = g.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Permutation& alpha : aut.members) {
    for (int u = 1; u <= n; ++u) {
      const int a = find(u - 1);
      const int b = find(alpha(u) - 1);
      // Smallest label as root keeps orbit ordering trivial.
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  OrbitPartition result{n, {}};
  std::vector<int> slot(n, -1);
  for (int u = 0; u < n; ++u) {
    const int root = find(u);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(result.orbits.size());
      result.orbits.emplace_back();
    }
    result.orbits[slot[root]].push_back(u + 1);
  }
  return result;
}

std::string ToString(const OrbitPartition& orbits) {
  std::string out;
  for (const auto& orbit : orbits.orbits) {
    if (!out.empty()) out += ' ';
    out += '{';
    for (size_t i = 0; i < orbit.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(orbit[i]);
    }
    out += '}';
  }
  return out;
}

}  // namespace gpqspr
