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

// Distance-based descriptors: the Wiener index and the Graovac-Pisanski
// (modified Wiener) index.
//
// The Graovac-Pisanski index is available in two algebraically equivalent
// forms, evaluated in exact rational arithmetic:
//
//   definition:  GP = n / (2|Aut|) * sum_u sum_alpha d(u, alpha(u))
//   orbits:      GP = n * sum_i W(V_i) / |V_i|
//
// descriptor_record() computes both and refuses to return if they differ.

#ifndef GPQSPR_DESCRIPTORS_H_
#define GPQSPR_DESCRIPTORS_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

#include "gpqspr/graph.h"
#include "gpqspr/symmetry.h"

namespace gpqspr {

using Rational = boost::rational<std::int64_t>;

// "32" for integral values, "7/2" otherwise.
std::string ToString(const Rational& r);
double ToDouble(const Rational& r);

std::int64_t wiener(const MolecularGraph& g, const DistanceMatrix& d);

// Half the distance sum over ordered pairs of s. Throws std::out_of_range
// for labels outside 1..n.
std::int64_t wiener_subset(const MolecularGraph& g, const DistanceMatrix& d,
                           std::span<const int> s);

Rational gp_by_definition(const MolecularGraph& g, const AutomorphismSet& aut,
                          const DistanceMatrix& d);

Rational gp_by_orbits(const MolecularGraph& g, const OrbitPartition& orbits,
                      const DistanceMatrix& d);

class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct DescriptorRecord {
  std::string name;
  Rational gp;
  std::int64_t wiener = 0;
  std::int64_t aut_order = 1;
  int vertex_count = 0;
  OrbitPartition orbits;
};

// Distances, pruned automorphism search, orbits, then GP by both routes.
// Throws ConsistencyError if the two GP routes disagree.
DescriptorRecord descriptor_record(const MolecularGraph& g);

}  // namespace gpqspr

#endif  // GPQSPR_DESCRIPTORS_H_
