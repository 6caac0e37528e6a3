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
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "adinkra/bits.hpp"
#include "adinkra/error.hpp"
#include "adinkra/gates.hpp"
#include "adinkra/graph.hpp"

namespace adinkra {

using PartialBits = std::vector<std::optional<Bit>>;

namespace detail {

inline std::vector<std::size_t> unknown_edges(const PartialBits& bits) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < bits.size(); ++e)
    if (!bits[e]) out.push_back(e);
  return out;
}

/// Row of a GF(2) system: variable bits followed by the right-hand side.
class Gf2Row {
 public:
  explicit Gf2Row(std::size_t vars) : vars_(vars), words_((vars + 64) / 64, 0) {}
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void flip_rhs() { flip(vars_); }
  bool rhs() const { return test(vars_); }
  Gf2Row& operator^=(const Gf2Row& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  std::optional<std::size_t> first_var() const {
    for (std::size_t i = 0; i < vars_; ++i)
      if (test(i)) return i;
    return std::nullopt;
  }
  std::size_t var_count() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < vars_; ++i) n += test(i);
    return n;
  }

 private:
  std::size_t vars_;
  std::vector<std::uint64_t> words_;
};

/// Fixes every unknown dashing bit that the plaquette equations determine.
/// Throws on an inconsistent system.
inline void linear_closure(const std::vector<Plaquette>& plqs, PartialBits& bits, GateTrace& trace) {
  const std::vector<std::size_t> unknown = unknown_edges(bits);
  if (unknown.empty()) return;
  std::vector<std::size_t> var_of(bits.size(), std::numeric_limits<std::size_t>::max());
  for (std::size_t v = 0; v < unknown.size(); ++v) var_of[unknown[v]] = v;

  std::vector<Gf2Row> rows;
  for (const Plaquette& p : plqs) {
    Gf2Row row(unknown.size());
    row.flip_rhs();  // four dashing bits of a plaquette sum to 1
    for (EdgeIndex e : p.edges) {
      if (bits[e]) {
        if (*bits[e]) row.flip_rhs();
      } else {
        row.flip(var_of[e]);
      }
    }
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_rows;
  std::size_t next = 0;
  for (std::size_t var = 0; var < unknown.size(); ++var) {
    std::size_t r = next;
    while (r < rows.size() && !rows[r].test(var)) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[next]);
    for (std::size_t o = 0; o < rows.size(); ++o)
      if (o != next && rows[o].test(var)) rows[o] ^= rows[next];
    pivot_rows.push_back(next++);
  }
  for (std::size_t r = next; r < rows.size(); ++r)
    if (rows[r].rhs()) throw Error(ErrorKind::contradiction, "known dashing bits violate the plaquette equations");

  for (std::size_t r : pivot_rows) {
    if (rows[r].var_count() != 1) continue;
    const std::size_t e = unknown[*rows[r].first_var()];
    const Bit b = rows[r].rhs() ? 1 : 0;
    bits[e] = b;
    trace.push_back({Gate::linear, std::nullopt, {}, b, e, b});
  }
}

}  // namespace detail

struct DashingPropagation {
  std::vector<Sign> dashing;
  GateTrace trace;
};

/// Worklist fixpoint over plaquettes in canonical order: whenever a plaquette has
/// exactly three known dashing bits the fourth is their NDXOR, and the scan
/// restarts. If the cascade stalls, GF(2) elimination fixes whatever the
/// plaquette equations still determine. Unresolved edges raise `insufficient`.
/// `plqs` fixes the scan order; the canonical overload uses plaquettes(t).
inline DashingPropagation propagate_dashing(const Chromotopology& t, const std::vector<Plaquette>& plqs,
                                            PartialBits bits) {
  if (bits.size() != t.edge_count()) throw Error(ErrorKind::input, "one bit slot per edge expected");
  GateTrace trace;

  bool progress = true;
  while (progress) {
    progress = false;
    for (const Plaquette& p : plqs) {
      int known = 0;
      std::size_t missing = 0;
      for (std::size_t q = 0; q < 4; ++q) {
        if (bits[p.edges[q]]) ++known;
        else missing = q;
      }
      if (known == 4) {
        Bit parity = 0;
        for (EdgeIndex e : p.edges) parity ^= *bits[e];
        if (parity != 1)
          throw Error(ErrorKind::contradiction, "plaquette with an even number of dashed edges",
                      {p.edges.begin(), p.edges.end()});
        continue;
      }
      if (known != 3) continue;
      GateStep step;
      step.gate = Gate::ndxor;
      step.plaquette = p;
      for (std::size_t q = 1; q < 4; ++q) step.inputs[q - 1] = *bits[p.edges[(missing + q) % 4]];
      step.output = ndxor(step.inputs[0], step.inputs[1], step.inputs[2]);
      step.target = p.edges[missing];
      step.value = step.output;
      bits[step.target] = step.value;
      trace.push_back(step);
      progress = true;
      break;
    }
  }

  detail::linear_closure(plqs, bits, trace);
  const auto unresolved = detail::unknown_edges(bits);
  if (!unresolved.empty())
    throw Error(ErrorKind::insufficient,
                std::to_string(unresolved.size()) + " edge dashings are not determined by the known bits", unresolved);

  DashingPropagation out;
  out.trace = std::move(trace);
  for (const auto& b : bits) out.dashing.push_back(from_bit(*b));
  return out;
}

inline DashingPropagation propagate_dashing(const Chromotopology& t, PartialBits bits) {
  return propagate_dashing(t, plaquettes(t), std::move(bits));
}

// ---------------------------------------------------------------------------
// Directions

/// Exact bounds on every edge direction implied by a partial assignment.
///
/// A unit-step height function is h = parity + 2g up to a constant, and for an
/// edge between boson b and fermion f the step is up (b -> f) iff g(f) = g(b)
/// and down iff g(f) = g(b) - 1. These are difference constraints on g, so the
/// all-pairs shortest paths give the exact range of g(x) - g(y); an edge is
/// forced when its range collapses to one value.
class HeightBounds {
 public:
  HeightBounds(const Chromotopology& t, const PartialBits& toward_v) : t_(t) {
    const std::size_t n = t.node_count();
    constexpr int inf = std::numeric_limits<int>::max() / 4;
    dist_.assign(n * n, inf);
    for (std::size_t i = 0; i < n; ++i) at(i, i) = 0;
    for (EdgeIndex e = 0; e < t.edge_count(); ++e) {
      const auto [b, f] = ends(e);
      int bf = 0, fb = 1;  // g(f) - g(b) in {0, -1}
      if (toward_v[e]) {
        const bool up = head(e, *toward_v[e]) == f;
        bf = up ? 0 : -1;
        fb = up ? 0 : 1;
      }
      at(b, f) = std::min(at(b, f), bf);
      at(f, b) = std::min(at(f, b), fb);
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) {
        if (at(i, k) >= inf) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (at(k, j) < inf) at(i, j) = std::min(at(i, j), at(i, k) + at(k, j));
      }
    for (std::size_t i = 0; i < n; ++i)
      if (at(i, i) < 0) feasible_ = false;
  }

  bool feasible() const { return feasible_; }

  /// Forced direction (1 = toward the larger-index endpoint), if any.
  std::optional<Bit> forced(EdgeIndex e) const {
    const auto [b, f] = ends(e);
    const Edge& ed = t_.edge(e);
    if (at(f, b) <= 0) return f == ed.v ? 1 : 0;   // g(b) - g(f) can only be 0: up
    if (at(b, f) <= -1) return b == ed.v ? 1 : 0;  // g(f) - g(b) can only be -1: down
    return std::nullopt;
  }

 private:
  std::pair<NodeIndex, NodeIndex> ends(EdgeIndex e) const {
    const Edge& ed = t_.edge(e);
    return t_.parity(ed.u) == Parity::boson ? std::pair{ed.u, ed.v} : std::pair{ed.v, ed.u};
  }
  NodeIndex head(EdgeIndex e, Bit toward_v) const { return toward_v ? t_.edge(e).v : t_.edge(e).u; }
  int& at(std::size_t i, std::size_t j) { return dist_[i * t_.node_count() + j]; }
  int at(std::size_t i, std::size_t j) const { return dist_[i * t_.node_count() + j]; }

  const Chromotopology& t_;
  std::vector<int> dist_;
  bool feasible_ = true;
};

/// True iff the partial directions admit exactly one height function up to a constant.
inline bool directions_determined(const Chromotopology& t, const PartialBits& toward_v) {
  HeightBounds hb(t, toward_v);
  if (!hb.feasible()) return false;
  for (EdgeIndex e = 0; e < t.edge_count(); ++e)
    if (!toward_v[e] && !hb.forced(e)) return false;
  return true;
}

/// Heights from a complete direction assignment: integrated over a BFS tree
/// from node 0, checked on every edge, shifted so the minimum is 0.
inline std::vector<int> integrate_heights(const Chromotopology& t, const BitVector& toward_v) {
  const std::size_t n = t.node_count();
  std::vector<int> h(n, 0);
  std::vector<bool> seen(n, false);
  std::queue<NodeIndex> queue;
  seen[0] = true;
  queue.push(0);
  while (!queue.empty()) {
    const NodeIndex x = queue.front();
    queue.pop();
    for (Color c = 1; c <= t.colors(); ++c) {
      const EdgeIndex e = t.edge_at(x, c);
      const NodeIndex y = t.edge(e).other(x);
      if (seen[y]) continue;
      const NodeIndex head = toward_v[e] ? t.edge(e).v : t.edge(e).u;
      h[y] = h[x] + (head == y ? 1 : -1);
      seen[y] = true;
      queue.push(y);
    }
  }
  for (EdgeIndex e = 0; e < t.edge_count(); ++e) {
    const Edge& ed = t.edge(e);
    const NodeIndex head = toward_v[e] ? ed.v : ed.u;
    if (h[head] != h[ed.other(head)] + 1)
      throw Error(ErrorKind::contradiction, "edge directions do not integrate to a height function", {e});
  }
  const int lo = *std::min_element(h.begin(), h.end());
  for (int& x : h) x -= lo;
  return h;
}

/// Direction bits (1 = toward the larger-index endpoint) read off heights.
inline BitVector directions_from_heights(const Chromotopology& t, const std::vector<int>& heights) {
  BitVector out;
  out.reserve(t.edge_count());
  for (const Edge& e : t.edges()) out.push_back(heights[e.v] > heights[e.u] ? 1 : 0);
  return out;
}

struct DirectionPropagation {
  std::vector<int> heights;
  BitVector toward_v;
  GateTrace trace;
};

/// Worklist fixpoint for edge directions. DXOR gates fire on plaquettes with
/// three known directions; when they stall, every direction forced by the
/// height bounds is fixed (gate BOUND) and the cascade resumes.
inline DirectionPropagation propagate_directions(const Chromotopology& t, PartialBits bits) {
  if (bits.size() != t.edge_count()) throw Error(ErrorKind::input, "one direction slot per edge expected");
  const std::vector<Plaquette> plqs = plaquettes(t);
  GateTrace trace;

  for (;;) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (const Plaquette& p : plqs) {
        int known = 0;
        std::size_t missing = 0;
        std::array<Bit, 4> trav{};
        for (std::size_t q = 0; q < 4; ++q) {
          if (bits[p.edges[q]]) {
            ++known;
            trav[q] = traversal_bit(t, p, q, *bits[p.edges[q]]);
          } else {
            missing = q;
          }
        }
        if (known == 4) {
          const int against = trav[0] + trav[1] + trav[2] + trav[3];
          if (against != 2)
            throw Error(ErrorKind::contradiction, "bicolor cycle does not climb and descend equally",
                        {p.edges.begin(), p.edges.end()});
          continue;
        }
        if (known != 3) continue;
        GateStep step;
        step.gate = Gate::dxor;
        step.plaquette = p;
        for (std::size_t q = 1; q < 4; ++q) step.inputs[q - 1] = trav[(missing + q) % 4];
        try {
          step.output = dxor(step.inputs[0], step.inputs[1], step.inputs[2]);
        } catch (const Error& err) {
          throw Error(ErrorKind::contradiction, err.what(), {p.edges.begin(), p.edges.end()});
        }
        step.target = p.edges[missing];
        step.value = edge_bit_from_traversal(t, p, missing, step.output);
        bits[step.target] = step.value;
        trace.push_back(step);
        progress = true;
        break;
      }
    }

    const auto unknown = detail::unknown_edges(bits);
    if (unknown.empty()) break;
    HeightBounds hb(t, bits);
    if (!hb.feasible()) throw Error(ErrorKind::contradiction, "pinned directions admit no height function");
    bool forced_any = false;
    for (std::size_t e : unknown) {
      if (auto b = hb.forced(e)) {
        bits[e] = *b;
        trace.push_back({Gate::bound, std::nullopt, {}, *b, e, *b});
        forced_any = true;
      }
    }
    if (!forced_any)
      throw Error(ErrorKind::insufficient,
                  std::to_string(unknown.size()) + " edge directions are not determined by the pinned set", unknown);
  }

  DirectionPropagation out;
  for (const auto& b : bits) out.toward_v.push_back(*b);
  out.heights = integrate_heights(t, out.toward_v);
  out.trace = std::move(trace);
  return out;
}

}  // namespace adinkra
