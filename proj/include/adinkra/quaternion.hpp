// Copyright 2026 The adinkra-fec Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "adinkra/algebra.hpp"
#include "adinkra/graph.hpp"

namespace adinkra::quaternion {

// The quaternion adinkra lives on K4: nodes 0..3, color c joins m and m xor c,
// which is the 3-cube quotiented by [111]. Each edge carries one direction bit:
// 1 iff the arrow runs from the smaller node index to the larger one, meaning
// a[small][large] = +1 and a[large][small] = -1.

inline const Chromotopology& skeleton() {
  static const Chromotopology t = build_quotient(2, BinaryCode(3, {0b111}));
  return t;
}

inline constexpr std::size_t kEdges = 6;

/// Adjacency matrices i, j, k (colors 1, 2, 3) for a direction assignment.
inline AdjacencyMatrixSet matrices(const BitVector& bits) {
  const Chromotopology& t = skeleton();
  if (bits.size() != kEdges) throw Error(ErrorKind::input, "quaternion codeword needs 6 direction bits");
  AdjacencyMatrixSet set;
  for (NodeIndex i = 0; i < t.node_count(); ++i) set.order.push_back(i);
  set.matrices.assign(3, MonomialMatrix(t.node_count()));
  for (EdgeIndex e = 0; e < kEdges; ++e) {
    const Edge& ed = t.edge(e);
    const int s = bits[e] ? 1 : -1;
    MonomialMatrix& m = set.matrices[static_cast<std::size_t>(ed.color - 1)];
    m(ed.u, ed.v) = Monomial(Gaussian{s, 0});
    m(ed.v, ed.u) = Monomial(Gaussian{-s, 0});
  }
  return set;
}

inline QuaternionReport check(const BitVector& bits) { return check_quaternion(matrices(bits)); }

/// Direction bits of the standard real representation of i, j, k.
inline BitVector standard_bits() { return {1, 1, 1, 1, 0, 0}; }

/// Fixed directed edges from which the rest of the adinkra is rebuilt.
struct Baobab {
  std::vector<std::pair<EdgeIndex, Bit>> fixed;
};

/// Spanning star at node 0 carrying the standard directions.
inline Baobab standard_baobab() {
  const BitVector b = standard_bits();
  return {{{0, b[0]}, {1, b[1]}, {2, b[2]}}};
}

struct Candidate {
  BitVector bits;
  QuaternionReport report;
};

struct CompletionSearch {
  std::vector<Candidate> candidates;  // every completion of the free edges
  std::vector<BitVector> valid;       // those satisfying the quaternion relations
};

/// Enumerates every assignment of the edges the baobab leaves open and keeps
/// the ones whose matrices satisfy the quaternion algebra.
inline CompletionSearch baobab_completions(const Baobab& baobab) {
  std::vector<bool> fixed(kEdges, false);
  BitVector base(kEdges, 0);
  for (auto [e, b] : baobab.fixed) {
    if (e >= kEdges) throw Error(ErrorKind::input, "quaternion baobab edge out of range");
    if (fixed[e] && base[e] != b) throw Error(ErrorKind::contradiction, "edge fixed in both directions");
    fixed[e] = true;
    base[e] = b;
  }
  std::vector<EdgeIndex> open;
  for (EdgeIndex e = 0; e < kEdges; ++e)
    if (!fixed[e]) open.push_back(e);

  CompletionSearch out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << open.size()); ++mask) {
    BitVector bits = base;
    for (std::size_t p = 0; p < open.size(); ++p) bits[open[p]] = (mask >> p) & 1U;
    QuaternionReport r = check(bits);
    if (r.ok) out.valid.push_back(bits);
    out.candidates.push_back({std::move(bits), std::move(r)});
  }
  return out;
}

}  // namespace adinkra::quaternion
