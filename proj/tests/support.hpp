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

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "adinkra/adinkra.hpp"

namespace adinkra::testing {

/// Valise adinkra with random baobab bits (bosons low by default).
inline Adinkra random_valise(const Chromotopology& t, std::mt19937_64& rng, Parity low = Parity::boson) {
  const auto slots = baobab_slots(t).slots();
  BitVector bits(slots.size());
  for (Bit& b : bits) b = static_cast<Bit>(rng() & 1U);
  return Adinkra{t, reconstruct_dashing(t, slots, bits).dashing, valise_heights(t, low)};
}

/// Bicolor 4-cycles found by walking labels directly, as sorted edge sets.
inline std::set<std::vector<EdgeIndex>> plaquette_edge_sets(const Chromotopology& t) {
  std::set<std::vector<EdgeIndex>> out;
  for (NodeIndex x = 0; x < t.node_count(); ++x)
    for (Color a = 1; a <= t.colors(); ++a)
      for (Color b = a + 1; b <= t.colors(); ++b) {
        const Label l = t.label(x);
        const NodeIndex y = t.index_of(l ^ color_bit(a));
        const NodeIndex z = t.index_of(l ^ color_bit(a) ^ color_bit(b));
        const NodeIndex w = t.index_of(l ^ color_bit(b));
        std::vector<EdgeIndex> es{t.edge_at(x, a), t.edge_at(y, b), t.edge_at(z, a), t.edge_at(w, b)};
        std::sort(es.begin(), es.end());
        out.insert(es);
      }
  return out;
}

/// Odd-dashing check written against the label walk above.
inline bool odd_dashing_oracle(const Chromotopology& t, const BitVector& bits) {
  for (const auto& es : plaquette_edge_sets(t)) {
    int undashed = 0;
    for (EdgeIndex e : es) undashed += bits[e];
    if (undashed % 2 == 0) return false;
  }
  return true;
}

/// Every unit-step height function with node 0 at height 0, by backtracking.
inline std::vector<std::vector<int>> all_height_functions(const Chromotopology& t) {
  std::vector<std::vector<int>> out;
  std::vector<std::optional<int>> h(t.node_count());
  h[0] = 0;
  std::function<void(NodeIndex)> rec = [&](NodeIndex x) {
    if (x == t.node_count()) {
      std::vector<int> v;
      for (const auto& y : h) v.push_back(*y);
      out.push_back(std::move(v));
      return;
    }
    if (x == 0) {
      rec(1);
      return;
    }
    // Node x always has an assigned neighbor with a smaller index in a hypercube quotient
    // (clear its lowest set bit); candidates come from that neighbor.
    std::optional<int> anchor;
    for (Color c = 1; c <= t.colors() && !anchor; ++c) {
      const NodeIndex y = t.neighbor(x, c);
      if (y < x) anchor = h[y];
    }
    for (int cand : {*anchor - 1, *anchor + 1}) {
      bool ok = true;
      for (Color c = 1; c <= t.colors() && ok; ++c) {
        const NodeIndex y = t.neighbor(x, c);
        if (h[y] && std::abs(*h[y] - cand) != 1) ok = false;
      }
      if (!ok) continue;
      h[x] = cand;
      rec(x + 1);
      h[x].reset();
    }
  };
  rec(0);
  return out;
}

/// Height functions (up to a constant) compatible with the given edge directions.
inline std::size_t heights_matching(const Chromotopology& t, const PartialBits& toward_v) {
  std::size_t count = 0;
  for (const auto& h : all_height_functions(t)) {
    bool ok = true;
    for (EdgeIndex e = 0; e < t.edge_count() && ok; ++e) {
      if (!toward_v[e]) continue;
      const Edge& ed = t.edge(e);
      ok = (h[ed.v] > h[ed.u]) == (*toward_v[e] == 1);
    }
    count += ok;
  }
  return count;
}

/// Direction bits (1 = toward the larger index) of a height function.
inline PartialBits direction_bits(const Chromotopology& t, const std::vector<int>& h) {
  PartialBits out(t.edge_count());
  for (EdgeIndex e = 0; e < t.edge_count(); ++e) out[e] = h[t.edge(e).v] > h[t.edge(e).u] ? 1 : 0;
  return out;
}

/// Number of odd dashings agreeing with the known bits, by enumeration.
inline std::size_t dashings_matching(const Chromotopology& t, const PartialBits& known) {
  std::vector<EdgeIndex> open;
  for (EdgeIndex e = 0; e < known.size(); ++e)
    if (!known[e]) open.push_back(e);
  BitVector bits(known.size());
  for (EdgeIndex e = 0; e < known.size(); ++e) bits[e] = known[e].value_or(0);
  std::size_t count = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << open.size()); ++m) {
    for (std::size_t p = 0; p < open.size(); ++p) bits[open[p]] = (m >> p) & 1U;
    count += odd_dashing_oracle(t, bits);
  }
  return count;
}

/// Whether the edge subset connects every node.
inline bool spans(const Chromotopology& t, const std::vector<bool>& keep) {
  std::vector<NodeIndex> parent(t.node_count());
  for (NodeIndex i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<NodeIndex(NodeIndex)> find = [&](NodeIndex x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::size_t parts = t.node_count();
  for (EdgeIndex e = 0; e < t.edge_count(); ++e) {
    if (!keep[e]) continue;
    const NodeIndex a = find(t.edge(e).u), b = find(t.edge(e).v);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

}  // namespace adinkra::testing
