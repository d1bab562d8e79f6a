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

#include "gpqspr/descriptors.h"

#include <string>

namespace gpqspr {

std::string ToString(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double ToDouble(const Rational& r) {
  return static_cast<double>(r.numerator()) /
         static_cast<double>(r.denominator());
}

std::int64_t wiener(const MolecularGraph& g, const DistanceMatrix& d) {
  std::int64_t total = 0;
  for (int u = 1; u <= g.vertex_count(); ++u) {
    for (int v = u + 1; v <= g.vertex_count(); ++v) total += d.at(u, v);
  }
  return total;
}

std::int64_t wiener_subset(const MolecularGraph& g, const DistanceMatrix& d,
                           std::span<const int> s) {
  for (int u : s) {
    if (u < 1 || u > g.vertex_count()) {
      throw std::out_of_range("vertex " + std::to_string(u) +
                              " outside 1.." +
                              std::to_string(g.vertex_count()));
    }
  }
  std::int64_t twice = 0;
  for (int u : s) {
    for (int v : s) twice += d.at(u, v);
  }
  return twice / 2;
}

Rational gp_by_definition(const MolecularGraph& g, const AutomorphismSet& aut,
                          const DistanceMatrix& d) {
  const int n = g.vertex_count();
  std::int64_t moved = 0;
  for (const Permutation& alpha : aut.members) {
    for (int u = 1; u <= n; ++u) moved += d.at(u, alpha(u));
  }
  return Rational(n * moved, 2 * static_cast<std::int64_t>(aut.size()));
}

Rational gp_by_orbits(const MolecularGraph& g, const OrbitPartition& orbits,
                      const DistanceMatrix& d) {
  Rational sum = 0;
  for (const auto& orbit : orbits.orbits) {
    sum += Rational(wiener_subset(g, d, orbit),
                    static_cast<std::int64_t>(orbit.size()));
  }
  return sum * static_cast<std::int64_t>(g.vertex_count());
}

DescriptorRecord descriptor_record(const MolecularGraph& g) {
  const DistanceMatrix d = distance_matrix(g);
  const AutomorphismSet aut = automorphisms(g, d);
  DescriptorRecord record;
  record.name = g.name();
  record.vertex_count = g.vertex_count();
  record.wiener = wiener(g, d);
  record.aut_order = static_cast<std::int64_t>(aut.size());
  record.orbits = orbit_partition(g, aut);
  record.gp = gp_by_definition(g, aut, d);
  const Rational by_orbits = gp_by_orbits(g, record.orbits, d);
  if (record.gp != by_orbits) {
    throw ConsistencyError("GP routes disagree for '" + g.name() +
                           "': definition " + ToString(record.gp) +
                           ", orbits " + ToString(by_orbits));
  }
  return record;
}

}  // namespace gpqspr
