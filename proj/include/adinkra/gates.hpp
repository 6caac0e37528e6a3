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

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "adinkra/bits.hpp"
#include "adinkra/error.hpp"
#include "adinkra/graph.hpp"

namespace adinkra {

/// Not Double Exclusive Or: fourth dashing bit of a plaquette (dashed = 0).
constexpr Bit ndxor(Bit x, Bit y, Bit z) { return static_cast<Bit>(!((x ^ y ^ z) & 1U)); }

/// Fourth direction bit of a plaquette (0 = along the traversal, 1 = against).
/// Three equal inputs would leave the cycle without a source or sink.
inline Bit dxor(Bit x, Bit y, Bit z) {
  if (x == y && y == z)
    throw Error(ErrorKind::contradiction, "dxor input " + std::string(x ? "111" : "000") +
                                              " describes a bicolor cycle with no source or sink");
  return static_cast<Bit>((x ^ y ^ z) & 1U);
}

enum class Gate : std::uint8_t {
  ndxor,   // plaquette dashing gate
  dxor,    // plaquette direction gate
  linear,  // dashing bit fixed by GF(2) elimination after the NDXOR cascade stalled
  bound,   // direction fixed by the height bounds after the DXOR cascade stalled
};

constexpr std::string_view to_string(Gate g) {
  switch (g) {
    case Gate::ndxor: return "NDXOR";
    case Gate::dxor: return "DXOR";
    case Gate::linear: return "LINEAR";
    case Gate::bound: return "BOUND";
  }
  return "?";
}

/// One inference. Plaquette gates list their three inputs in traversal order
/// starting after the output edge, and `output` is in the same plaquette-relative
/// convention. `value` is what ends up stored for the edge: the dashing bit, or
/// for directions 1 iff the arrow points at the edge's larger-index endpoint.
/// `linear`/`bound` steps carry no plaquette.
struct GateStep {
  Gate gate = Gate::ndxor;
  std::optional<Plaquette> plaquette;
  std::array<Bit, 3> inputs{};
  Bit output = 0;
  EdgeIndex target = 0;
  Bit value = 0;

  friend bool operator==(const GateStep&, const GateStep&) = default;
};

using GateTrace = std::vector<GateStep>;

/// Direction bit of the edge at traversal position `pos` of a plaquette:
/// 0 when the arrow runs along the traversal, 1 against it.
inline Bit traversal_bit(const Chromotopology& t, const Plaquette& p, std::size_t pos, Bit toward_v) {
  const Edge& ed = t.edge(p.edges[pos]);
  const NodeIndex head = toward_v ? ed.v : ed.u;
  return head == p.nodes[(pos + 1) % 4] ? 0 : 1;
}

inline Bit edge_bit_from_traversal(const Chromotopology& t, const Plaquette& p, std::size_t pos, Bit trav) {
  const Edge& ed = t.edge(p.edges[pos]);
  const NodeIndex head = trav == 0 ? p.nodes[(pos + 1) % 4] : p.nodes[pos];
  return head == ed.v ? 1 : 0;
}

/// Re-evaluates every gate from the per-edge bits it consumed and writes its
/// value into `bits`. Returns false if a recorded input disagrees with `bits`
/// or a recomputed output disagrees with the trace.
inline bool replay(const Chromotopology& t, const GateTrace& trace, std::vector<std::optional<Bit>>& bits) {
  for (const GateStep& s : trace) {
    if (s.plaquette) {
      const Plaquette& p = *s.plaquette;
      std::size_t pos = 0;
      while (pos < 4 && p.edges[pos] != s.target) ++pos;
      if (pos == 4) return false;
      for (std::size_t q = 1; q < 4; ++q) {
        const std::size_t at = (pos + q) % 4;
        const auto& b = bits[p.edges[at]];
        if (!b) return false;
        const Bit in = s.gate == Gate::dxor ? traversal_bit(t, p, at, *b) : *b;
        if (in != s.inputs[q - 1]) return false;
      }
      const Bit out = s.gate == Gate::dxor ? dxor(s.inputs[0], s.inputs[1], s.inputs[2])
                                           : ndxor(s.inputs[0], s.inputs[1], s.inputs[2]);
      if (out != s.output) return false;
      const Bit value = s.gate == Gate::dxor ? edge_bit_from_traversal(t, p, pos, out) : out;
      if (value != s.value) return false;
    }
    bits[s.target] = s.value;
  }
  return true;
}

}  // namespace adinkra
