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
#include <bit>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adinkra/bits.hpp"
#include "adinkra/error.hpp"
#include "adinkra/gates.hpp"
#include "adinkra/graph.hpp"
#include "adinkra/propagation.hpp"

namespace adinkra {

/// Free dashing bits of an adinkra with n+k colors: 2^n - 1 tree edges plus
/// one per closing cycle.
constexpr long long dashing_dof(int n, int k) {
  return k == 0 ? (1LL << n) - 1 : (1LL << n) + (k - 1);
}

/// Range of directed-edge degrees of freedom: at least n, at most 2^(n-1).
constexpr std::pair<long long, long long> directed_dof_bounds(int n) { return {n, 1LL << (n - 1)}; }

/// Colors used an odd number of times along a closed walk that starts at
/// `start` and follows `walk` edge by edge.
inline std::vector<Color> odd_color_set(const Chromotopology& t, NodeIndex start, std::span<const EdgeIndex> walk) {
  std::vector<int> count(static_cast<std::size_t>(t.colors()) + 1, 0);
  NodeIndex at = start;
  for (EdgeIndex e : walk) {
    if (e >= t.edge_count()) throw Error(ErrorKind::input, "walk edge out of range");
    const Edge& ed = t.edge(e);
    if (at != ed.u && at != ed.v) throw Error(ErrorKind::input, "edges do not form a walk");
    at = ed.other(at);
    ++count[static_cast<std::size_t>(ed.color)];
  }
  if (at != start) throw Error(ErrorKind::input, "walk is not closed");
  std::vector<Color> odd;
  for (Color c = 1; c <= t.colors(); ++c)
    if (count[static_cast<std::size_t>(c)] % 2) odd.push_back(c);
  if (t.code().is_doubly_even() && odd.size() % 4 != 0)
    throw std::logic_error("odd color set of a closed walk is not doubly even");
  return odd;
}

inline Label color_set_mask(const std::vector<Color>& colors) {
  Label m = 0;
  for (Color c : colors) m |= color_bit(c);
  return m;
}

/// Each cycle owns a color no other cycle's odd color set contains.
inline bool cycles_independent(const std::vector<std::vector<Color>>& odd_sets) {
  for (std::size_t i = 0; i < odd_sets.size(); ++i) {
    Label others = 0;
    for (std::size_t j = 0; j < odd_sets.size(); ++j)
      if (j != i) others |= color_set_mask(odd_sets[j]);
    if ((color_set_mask(odd_sets[i]) & ~others) == 0) return false;
  }
  return true;
}

/// Edges carrying the free dashing bits of every adinkra on a chromotopology.
struct BaobabSlots {
  std::vector<EdgeIndex> tree_edges;
  std::vector<EdgeIndex> cycle_edges;
  std::vector<std::vector<Color>> odd_color_sets;  // one per cycle edge
  std::vector<EdgeIndex> parent_edge;  // tree edge towards the root, per node (root: kNoEdge)

  /// Tree and cycle edges together, in canonical edge order.
  std::vector<EdgeIndex> slots() const {
    std::vector<EdgeIndex> all = tree_edges;
    all.insert(all.end(), cycle_edges.begin(), cycle_edges.end());
    std::sort(all.begin(), all.end());
    return all;
  }
};

inline constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

/// Breadth-first spanning tree from node 0 over the non-pivot colors, plus the
/// pivot-colored edge at the root for every generator of the reduced code.
/// Node labels have zero pivot bits, so each such edge closes a cycle whose
/// odd color set is exactly its generator's support.
inline BaobabSlots baobab_slots(const Chromotopology& t) {
  BaobabSlots s;
  const Label pivots = t.code().pivot_mask();
  s.parent_edge.assign(t.node_count(), kNoEdge);
  std::vector<bool> seen(t.node_count(), false);
  std::queue<NodeIndex> queue;
  seen[0] = true;
  queue.push(0);
  while (!queue.empty()) {
    const NodeIndex x = queue.front();
    queue.pop();
    for (Color c = 1; c <= t.colors(); ++c) {
      if (pivots & color_bit(c)) continue;
      const EdgeIndex e = t.edge_at(x, c);
      const NodeIndex y = t.edge(e).other(x);
      if (seen[y]) continue;
      seen[y] = true;
      s.parent_edge[y] = e;
      s.tree_edges.push_back(e);
      queue.push(y);
    }
  }
  std::sort(s.tree_edges.begin(), s.tree_edges.end());

  std::vector<Label> gens = t.code().basis();
  std::sort(gens.begin(), gens.end());  // increasing pivot color
  for (Label g : gens) {
    const Color pivot = std::bit_width(g);
    const EdgeIndex closing = t.edge_at(0, pivot);
    std::vector<EdgeIndex> walk{closing};
    for (NodeIndex at = t.edge(closing).other(0); at != 0; at = t.edge(s.parent_edge[at]).other(at))
      walk.push_back(s.parent_edge[at]);
    std::vector<Color> odd = odd_color_set(t, 0, walk);
    if (color_set_mask(odd) != g) throw std::logic_error("closing cycle does not match its generator");
    s.cycle_edges.push_back(closing);
    s.odd_color_sets.push_back(std::move(odd));
  }
  return s;
}

/// A directed edge of the baobab: the edge and the node its arrow points to.
struct Pin {
  EdgeIndex edge = 0;
  NodeIndex toward = 0;
  friend bool operator==(const Pin&, const Pin&) = default;
};

/// The free parameters of an adinkra: a spanning tree plus k closing edges with
/// their dashing bits, and a set of pinned directions fixing every height.
struct Baobab {
  std::vector<EdgeIndex> tree_edges;
  std::vector<EdgeIndex> cycle_edges;
  std::vector<std::vector<Color>> odd_color_sets;
  std::vector<Pin> pinned;
  BitVector bits;  // dashing bit per slot, slots in canonical edge order

  std::vector<EdgeIndex> slots() const {
    std::vector<EdgeIndex> all = tree_edges;
    all.insert(all.end(), cycle_edges.begin(), cycle_edges.end());
    std::sort(all.begin(), all.end());
    return all;
  }
  friend bool operator==(const Baobab&, const Baobab&) = default;
};

inline PartialBits pinned_bits(const Chromotopology& t, const std::vector<Pin>& pins) {
  PartialBits bits(t.edge_count());
  for (const Pin& p : pins) {
    if (p.edge >= t.edge_count()) throw Error(ErrorKind::input, "pinned edge out of range");
    const Edge& ed = t.edge(p.edge);
    if (p.toward != ed.u && p.toward != ed.v) throw Error(ErrorKind::input, "pinned direction is not an endpoint");
    const Bit b = p.toward == ed.v ? 1 : 0;
    if (bits[p.edge] && *bits[p.edge] != b)
      throw Error(ErrorKind::contradiction, "edge pinned in both directions", {p.edge});
    bits[p.edge] = b;
  }
  return bits;
}

/// Rebuilds every dashing from the bits on the baobab's slots.
inline DashingPropagation reconstruct_dashing(const Chromotopology& t, const std::vector<EdgeIndex>& slots,
                                              const BitVector& bits) {
  if (slots.size() != bits.size()) throw Error(ErrorKind::input, "one bit per baobab edge expected");
  PartialBits known(t.edge_count());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i] >= t.edge_count()) throw Error(ErrorKind::input, "baobab edge out of range");
    known[slots[i]] = bits[i];
  }
  return propagate_dashing(t, std::move(known));
}

inline DashingPropagation reconstruct_dashing(const Chromotopology& t, const Baobab& b) {
  return reconstruct_dashing(t, b.slots(), b.bits);
}

/// Rebuilds every edge direction, and from them the heights, from the pins.
inline DirectionPropagation reconstruct_directions(const Chromotopology& t, const std::vector<Pin>& pins) {
  return propagate_directions(t, pinned_bits(t, pins));
}

/// Shifts heights so the minimum is 0.
inline std::vector<int> normalized_heights(std::vector<int> h) {
  if (h.empty()) return h;
  const int lo = *std::min_element(h.begin(), h.end());
  for (int& x : h) x -= lo;
  return h;
}

/// Baobab of a valid adinkra. Pins start as every tree edge (which always fixes
/// the heights) and tree edges are dropped, last canonical edge first, while
/// the rest still determine every height.
inline Baobab extract_baobab(const Adinkra& a) {
  const Chromotopology& t = a.topology;
  if (!a.has_dashing() || !verify_odd_dashing(a).ok)
    throw Error(ErrorKind::invalid_adinkra, "dashing is not odd around every plaquette");
  if (!verify_heights(a)) throw Error(ErrorKind::invalid_adinkra, "heights do not step by exactly 1 along edges");

  const BaobabSlots slots = baobab_slots(t);
  Baobab b;
  b.tree_edges = slots.tree_edges;
  b.cycle_edges = slots.cycle_edges;
  b.odd_color_sets = slots.odd_color_sets;
  for (EdgeIndex e : b.slots()) b.bits.push_back(to_bit(a.dashing[e]));

  std::vector<Pin> pins;
  for (EdgeIndex e : b.tree_edges) pins.push_back({e, a.head(e)});
  for (std::size_t i = pins.size(); i-- > 0;) {
    std::vector<Pin> fewer = pins;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
    if (directions_determined(t, pinned_bits(t, fewer))) pins = std::move(fewer);
  }
  b.pinned = std::move(pins);

  const DirectionPropagation check = reconstruct_directions(t, b.pinned);
  if (check.heights != normalized_heights(a.heights))
    throw Error(ErrorKind::insufficient, "pinned directions do not reproduce the heights");
  return b;
}

/// Full adinkra from a chromotopology and a baobab.
inline Adinkra reconstruct(const Chromotopology& t, const Baobab& b, GateTrace* trace = nullptr) {
  DashingPropagation d = reconstruct_dashing(t, b);
  DirectionPropagation h = reconstruct_directions(t, b.pinned);
  if (trace) {
    *trace = std::move(d.trace);
    trace->insert(trace->end(), h.trace.begin(), h.trace.end());
  }
  return Adinkra{t, std::move(d.dashing), std::move(h.heights)};
}

/// Exhaustive count of odd-dashed assignments. Refuses more edges than the
/// size guard (default 20, ADINKRA_SIZE_GUARD overrides).
inline std::uint64_t count_valid_dashings(const Chromotopology& t) {
  const std::size_t edges = t.edge_count();
  if (edges > static_cast<std::size_t>(size_guard()) || edges >= 63)
    throw Error(ErrorKind::size_guard, std::to_string(edges) + " edges exceed the brute-force size guard");
  std::vector<std::uint64_t> masks;
  for (const Plaquette& p : plaquettes(t)) {
    std::uint64_t m = 0;
    for (EdgeIndex e : p.edges) m |= std::uint64_t{1} << e;
    masks.push_back(m);
  }
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << edges); ++x) {
    // bit e of x set = edge e undashed; odd dashing <=> odd number of undashed bits
    bool ok = true;
    for (std::uint64_t m : masks)
      if (std::popcount(x & m) % 2 == 0) {
        ok = false;
        break;
      }
    count += ok;
  }
  return count;
}

}  // namespace adinkra
