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
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "adinkra/bits.hpp"
#include "adinkra/code.hpp"
#include "adinkra/error.hpp"

namespace adinkra {

using NodeIndex = std::size_t;
using EdgeIndex = std::size_t;
using Color = int;  // 1-based

enum class Parity : std::uint8_t { boson, fermion };

/// Undirected colored edge; `u < v` as node indices (which follow label order).
struct Edge {
  NodeIndex u = 0;
  NodeIndex v = 0;
  Color color = 0;

  NodeIndex other(NodeIndex x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// The hypercube {0,1}^(n+k) quotiented by a binary code: nodes are canonical
/// coset representatives in increasing order, edges are sorted by
/// (smaller endpoint label, color).
class Chromotopology {
 public:
  Chromotopology() = default;

  int n() const { return n_; }
  int k() const { return code_.dimension(); }
  int colors() const { return code_.length(); }
  const BinaryCode& code() const { return code_; }

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  Label label(NodeIndex i) const { return labels_[i]; }
  const std::vector<Label>& labels() const { return labels_; }
  Parity parity(NodeIndex i) const { return weight(labels_[i]) % 2 == 0 ? Parity::boson : Parity::fermion; }

  const Edge& edge(EdgeIndex e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Index of the node whose coset contains `x`.
  NodeIndex index_of(Label x) const {
    const Label r = code_.reduce(x);
    auto it = std::lower_bound(labels_.begin(), labels_.end(), r);
    if (it == labels_.end() || *it != r) throw Error(ErrorKind::input, "label outside the code length");
    return static_cast<NodeIndex>(it - labels_.begin());
  }

  NodeIndex neighbor(NodeIndex i, Color c) const { return edges_[edge_at(i, c)].other(i); }
  EdgeIndex edge_at(NodeIndex i, Color c) const {
    return incidence_[i * static_cast<std::size_t>(colors()) + static_cast<std::size_t>(c - 1)];
  }

  /// Edge joining two nodes, if any.
  std::optional<EdgeIndex> find_edge(NodeIndex a, NodeIndex b) const {
    for (Color c = 1; c <= colors(); ++c)
      if (neighbor(a, c) == b) return edge_at(a, c);
    return std::nullopt;
  }

  std::string label_string(NodeIndex i) const { return format_label(labels_[i], colors()); }

  friend Chromotopology build_quotient(int n, const BinaryCode& code);

 private:
  int n_ = 0;
  BinaryCode code_;
  std::vector<Label> labels_;
  std::vector<Edge> edges_;
  std::vector<EdgeIndex> incidence_;
};

/// Quotient of the (n+k)-cube by `code`. Requires every nonzero codeword to have
/// weight >= 3 so the quotient stays a simple graph; does not require doubly even.
inline Chromotopology build_quotient(int n, const BinaryCode& code) {
  if (n < 1) throw Error(ErrorKind::input, "n must be positive");
  if (code.length() != n + code.dimension())
    throw Error(ErrorKind::input, "code length " + std::to_string(code.length()) + " != n + k = " +
                                      std::to_string(n + code.dimension()));
  if (code.dimension() > 0 && code.min_weight() < 3)
    throw Error(ErrorKind::input, "code has a codeword of weight < 3; quotient is not simple");

  Chromotopology t;
  t.n_ = n;
  t.code_ = code;
  const int L = code.length();
  const Label pivots = code.pivot_mask();
  for (Label x = 0; x < (Label{1} << L); ++x)
    if ((x & pivots) == 0) t.labels_.push_back(x);

  const auto colors = static_cast<std::size_t>(L);
  t.incidence_.assign(t.labels_.size() * colors, 0);
  for (NodeIndex i = 0; i < t.labels_.size(); ++i) {
    for (Color c = 1; c <= L; ++c) {
      const NodeIndex j = t.index_of(t.labels_[i] ^ color_bit(c));
      if (i < j) {
        t.incidence_[i * colors + static_cast<std::size_t>(c - 1)] = t.edges_.size();
        t.incidence_[j * colors + static_cast<std::size_t>(c - 1)] = t.edges_.size();
        t.edges_.push_back({i, j, c});
      }
    }
  }
  // Labels are increasing with index, so (u, color) order is (min label, color) order.
  return t;
}

/// Chromotopology of an adinkra: rejects codes that are not doubly even.
inline Chromotopology build_chromotopology(int n, const BinaryCode& code) {
  if (!code.is_doubly_even()) throw Error(ErrorKind::not_doubly_even, "code is not doubly even");
  return build_quotient(n, code);
}

inline Chromotopology build_chromotopology(int n) { return build_chromotopology(n, BinaryCode(n, {})); }

// ---------------------------------------------------------------------------

/// Edge dashing sign. Undashed is +1, dashed is -1; at the bit level undashed = 1.
enum class Sign : std::int8_t { unknown = 0, undashed = 1, dashed = -1 };

inline Bit to_bit(Sign s) { return s == Sign::undashed ? 1 : 0; }
inline Sign from_bit(Bit b) { return b ? Sign::undashed : Sign::dashed; }
inline int to_int(Sign s) { return static_cast<int>(s); }

/// Chromotopology with a dashing per edge and an engineering height per node.
/// Either may be missing (empty vector / Sign::unknown) for a bare skeleton.
struct Adinkra {
  Chromotopology topology;
  std::vector<Sign> dashing;
  std::vector<int> heights;

  bool has_dashing() const {
    return dashing.size() == topology.edge_count() &&
           std::none_of(dashing.begin(), dashing.end(), [](Sign s) { return s == Sign::unknown; });
  }
  bool has_heights() const { return heights.size() == topology.node_count(); }

  BitVector dashing_bits() const {
    BitVector bits;
    bits.reserve(dashing.size());
    for (Sign s : dashing) bits.push_back(to_bit(s));
    return bits;
  }

  /// Endpoint the edge points toward (the higher one).
  NodeIndex head(EdgeIndex e) const {
    const Edge& ed = topology.edge(e);
    return heights[ed.u] > heights[ed.v] ? ed.u : ed.v;
  }

  friend bool operator==(const Adinkra& a, const Adinkra& b) {
    return a.topology.code() == b.topology.code() && a.topology.n() == b.topology.n() && a.dashing == b.dashing &&
           a.heights == b.heights;
  }
};

inline std::vector<Sign> dashing_from_bits(const BitVector& bits) {
  std::vector<Sign> out;
  out.reserve(bits.size());
  for (Bit b : bits) out.push_back(from_bit(b));
  return out;
}

/// Two-level heights: `low` parity at height 0, the other at 1.
inline std::vector<int> valise_heights(const Chromotopology& t, Parity low = Parity::boson) {
  std::vector<int> h(t.node_count());
  for (NodeIndex i = 0; i < h.size(); ++i) h[i] = t.parity(i) == low ? 0 : 1;
  return h;
}

/// Heights equal to the label weight: one source at 0, one sink at the top.
/// Only meaningful without a code (k = 0).
inline std::vector<int> extended_heights(const Chromotopology& t) {
  if (t.k() != 0) throw Error(ErrorKind::input, "extended heights need an unquotiented cube");
  std::vector<int> h(t.node_count());
  for (NodeIndex i = 0; i < h.size(); ++i) h[i] = weight(t.label(i));
  return h;
}

// ---------------------------------------------------------------------------

/// Bicolor 4-cycle base -> base+I -> base+I+J -> base+J -> base.
/// `edges[p]` joins `nodes[p]` and `nodes[(p+1) % 4]`; colors alternate I, J, I, J.
struct Plaquette {
  NodeIndex base = 0;
  Color first = 0;
  Color second = 0;
  std::array<NodeIndex, 4> nodes{};
  std::array<EdgeIndex, 4> edges{};

  bool contains(EdgeIndex e) const { return std::find(edges.begin(), edges.end(), e) != edges.end(); }
  friend bool operator==(const Plaquette&, const Plaquette&) = default;
};

/// Every bicolor 4-cycle exactly once, ordered by (base label, I, J); the base
/// is the smallest node of the cycle. Empty for n = 1.
inline std::vector<Plaquette> plaquettes(const Chromotopology& t) {
  std::vector<Plaquette> out;
  if (t.n() < 2) return out;
  const int L = t.colors();
  for (NodeIndex b = 0; b < t.node_count(); ++b) {
    for (Color i = 1; i <= L; ++i) {
      for (Color j = i + 1; j <= L; ++j) {
        Plaquette p;
        p.base = b;
        p.first = i;
        p.second = j;
        p.nodes[0] = b;
        p.nodes[1] = t.neighbor(b, i);
        p.nodes[2] = t.neighbor(p.nodes[1], j);
        p.nodes[3] = t.neighbor(b, j);
        if (*std::min_element(p.nodes.begin(), p.nodes.end()) != b) continue;
        p.edges[0] = t.edge_at(p.nodes[0], i);
        p.edges[1] = t.edge_at(p.nodes[1], j);
        p.edges[2] = t.edge_at(p.nodes[2], i);
        p.edges[3] = t.edge_at(p.nodes[3], j);
        out.push_back(p);
      }
    }
  }
  return out;
}

struct DashingReport {
  bool ok = true;
  std::vector<Plaquette> violations;
};

/// Odd-dashing check: every bicolor 4-cycle carries an odd number of dashed edges.
inline DashingReport verify_odd_dashing(const Adinkra& a) {
  if (!a.has_dashing()) throw Error(ErrorKind::input, "adinkra has edges without a dashing");
  DashingReport report;
  for (const Plaquette& p : plaquettes(a.topology)) {
    int dashed = 0;
    for (EdgeIndex e : p.edges) dashed += a.dashing[e] == Sign::dashed;
    if (dashed % 2 == 0) {
      report.ok = false;
      report.violations.push_back(p);
    }
  }
  return report;
}

inline bool verify_heights(const Adinkra& a) {
  if (!a.has_heights()) return false;
  for (const Edge& e : a.topology.edges()) {
    const int d = a.heights[e.u] - a.heights[e.v];
    if (d != 1 && d != -1) return false;
  }
  return true;
}

/// Raises a boson (or lowers a fermion) of a valise past all its neighbours:
/// every arc at the node swaps head and tail.
inline std::vector<int> flip_node(const Adinkra& a, NodeIndex node) {
  std::vector<int> h = a.heights;
  const Edge& e0 = a.topology.edge(a.topology.edge_at(node, 1));
  const int step = a.heights[e0.other(node)] - a.heights[node];
  h[node] += 2 * step;
  return h;
}

}  // namespace adinkra
