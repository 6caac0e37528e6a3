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
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "adinkra/baobab.hpp"
#include "adinkra/bits.hpp"
#include "adinkra/code.hpp"
#include "adinkra/error.hpp"
#include "adinkra/gates.hpp"
#include "adinkra/graph.hpp"

namespace adinkra::io {

using nlohmann::json;

namespace detail {

inline json edge_ref(const Chromotopology& t, EdgeIndex e) {
  const Edge& ed = t.edge(e);
  return {{"u", t.label_string(ed.u)}, {"v", t.label_string(ed.v)}, {"color", ed.color}};
}

inline EdgeIndex find_edge(const Chromotopology& t, const json& j) {
  try {
    const NodeIndex u = t.index_of(parse_label(j.at("u").get<std::string>()));
    const NodeIndex v = t.index_of(parse_label(j.at("v").get<std::string>()));
    const Color c = j.at("color").get<Color>();
    if (c < 1 || c > t.colors()) throw Error(ErrorKind::input, "edge color out of range");
    if (t.neighbor(u, c) != v) throw Error(ErrorKind::input, "no edge of color " + std::to_string(c) + " joins " +
                                                                  j.at("u").get<std::string>() + " and " +
                                                                  j.at("v").get<std::string>());
    return t.edge_at(u, c);
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::input, std::string("malformed edge: ") + ex.what());
  }
}

inline Chromotopology topology_from(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    const auto gens = j.value("code_generators", std::vector<std::string>{});
    const int length = gens.empty() ? n : static_cast<int>(gens.front().size());
    if (length != n + static_cast<int>(gens.size()))
      throw Error(ErrorKind::input, "code generators must have length n + k");
    return build_chromotopology(n, BinaryCode::parse(length, gens));
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::input, std::string("malformed graph header: ") + ex.what());
  }
}

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::input, std::string("malformed JSON: ") + ex.what());
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Graph format: {n, code_generators, nodes: [{label, height}], edges: [{u, v, color, dashed}]}

inline json to_json(const Adinkra& a) {
  const Chromotopology& t = a.topology;
  json j;
  j["n"] = t.n();
  j["code_generators"] = t.code().generator_strings();
  j["nodes"] = json::array();
  for (NodeIndex i = 0; i < t.node_count(); ++i) {
    json node{{"label", t.label_string(i)}};
    if (a.has_heights()) node["height"] = a.heights[i];
    j["nodes"].push_back(std::move(node));
  }
  j["edges"] = json::array();
  for (EdgeIndex e = 0; e < t.edge_count(); ++e) {
    json edge = detail::edge_ref(t, e);
    if (e < a.dashing.size() && a.dashing[e] != Sign::unknown) edge["dashed"] = a.dashing[e] == Sign::dashed;
    j["edges"].push_back(std::move(edge));
  }
  return j;
}

inline Adinkra skeleton(const Chromotopology& t) { return Adinkra{t, std::vector<Sign>(t.edge_count()), {}}; }

/// Reads a graph; missing heights or dashings stay unset.
inline Adinkra adinkra_from_json(const json& j) {
  Adinkra a = skeleton(detail::topology_from(j));
  const Chromotopology& t = a.topology;
  try {
    if (j.contains("nodes")) {
      const auto& nodes = j.at("nodes");
      std::vector<std::optional<int>> h(t.node_count());
      for (const auto& node : nodes) {
        const NodeIndex i = t.index_of(parse_label(node.at("label").get<std::string>()));
        if (node.contains("height") && !node.at("height").is_null()) h[i] = node.at("height").get<int>();
      }
      if (std::all_of(h.begin(), h.end(), [](const auto& x) { return x.has_value(); })) {
        for (const auto& x : h) a.heights.push_back(*x);
      }
    }
    if (j.contains("edges")) {
      for (const auto& edge : j.at("edges")) {
        const EdgeIndex e = detail::find_edge(t, edge);
        if (edge.contains("dashed") && !edge.at("dashed").is_null())
          a.dashing[e] = edge.at("dashed").get<bool>() ? Sign::dashed : Sign::undashed;
      }
    }
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::input, std::string("malformed graph: ") + ex.what());
  }
  return a;
}

inline Adinkra adinkra_from_string(const std::string& text) { return adinkra_from_json(detail::parse(text)); }

// ---------------------------------------------------------------------------
// Baobab format: {n, code_generators, tree_edges, cycle_edges, odd_color_sets,
//                 pinned: [{u, v, color, toward}], bits}

inline json to_json(const Chromotopology& t, const Baobab& b) {
  json j;
  j["n"] = t.n();
  j["code_generators"] = t.code().generator_strings();
  j["tree_edges"] = json::array();
  for (EdgeIndex e : b.tree_edges) j["tree_edges"].push_back(detail::edge_ref(t, e));
  j["cycle_edges"] = json::array();
  for (EdgeIndex e : b.cycle_edges) j["cycle_edges"].push_back(detail::edge_ref(t, e));
  j["odd_color_sets"] = b.odd_color_sets;
  j["pinned"] = json::array();
  for (const Pin& p : b.pinned) {
    json pin = detail::edge_ref(t, p.edge);
    pin["toward"] = t.label_string(p.toward);
    j["pinned"].push_back(std::move(pin));
  }
  j["bits"] = format_bits(b.bits);
  return j;
}

struct BaobabDocument {
  Chromotopology topology;
  Baobab baobab;
};

inline BaobabDocument baobab_from_json(const json& j) {
  BaobabDocument doc{detail::topology_from(j), {}};
  const Chromotopology& t = doc.topology;
  Baobab& b = doc.baobab;
  try {
    for (const auto& e : j.at("tree_edges")) b.tree_edges.push_back(detail::find_edge(t, e));
    for (const auto& e : j.value("cycle_edges", json::array())) b.cycle_edges.push_back(detail::find_edge(t, e));
    for (const auto& s : j.value("odd_color_sets", json::array())) b.odd_color_sets.push_back(s.get<std::vector<Color>>());
    for (const auto& p : j.value("pinned", json::array())) {
      const EdgeIndex e = detail::find_edge(t, p);
      b.pinned.push_back({e, t.index_of(parse_label(p.at("toward").get<std::string>()))});
    }
    b.bits = parse_bits(j.at("bits").get<std::string>());
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::input, std::string("malformed baobab: ") + ex.what());
  }
  if (b.bits.size() != b.tree_edges.size() + b.cycle_edges.size())
    throw Error(ErrorKind::input, "baobab bits do not match its edge count");
  return doc;
}

inline BaobabDocument baobab_from_string(const std::string& text) { return baobab_from_json(detail::parse(text)); }

// ---------------------------------------------------------------------------
// Gate trace: one JSON object per line.

inline std::string trace_lines(const Chromotopology& t, const GateTrace& trace) {
  std::ostringstream os;
  for (const GateStep& s : trace) {
    json j;
    j["gate"] = std::string(to_string(s.gate));
    if (s.plaquette) {
      j["plaquette"] = {{"base", t.label_string(s.plaquette->base)},
                        {"colors", {s.plaquette->first, s.plaquette->second}}};
      j["inputs"] = {s.inputs[0], s.inputs[1], s.inputs[2]};
      j["output"] = s.output;
    }
    j["edge"] = detail::edge_ref(t, s.target);
    j["value"] = s.value;
    os << j.dump() << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Graphviz

inline std::string color_name(Color c) {
  static const std::array<const char*, 12> palette = {"red",    "blue",  "green",  "orange", "purple", "brown",
                                                      "cyan4",  "magenta", "gold3", "gray40", "navy",  "olivedrab"};
  return palette[static_cast<std::size_t>(c - 1) % palette.size()];
}

namespace detail {

inline void dot_nodes(std::ostringstream& os, const Chromotopology& t, const std::vector<int>& heights) {
  for (NodeIndex i = 0; i < t.node_count(); ++i) {
    os << "  \"" << t.label_string(i) << "\" [shape=circle, label=\"" << t.label_string(i) << "\"";
    if (t.parity(i) == Parity::fermion) os << ", style=filled, fillcolor=black, fontcolor=white";
    os << "];\n";
  }
  if (heights.size() != t.node_count()) return;
  std::map<int, std::vector<NodeIndex>> levels;
  for (NodeIndex i = 0; i < t.node_count(); ++i) levels[heights[i]].push_back(i);
  for (const auto& [h, nodes] : levels) {
    os << "  { rank=same;";
    for (NodeIndex i : nodes) os << " \"" << t.label_string(i) << "\";";
    os << " }\n";
  }
}

}  // namespace detail

/// Arrows point from the lower node to the higher one; dashed edges are dashed.
inline std::string to_dot(const Adinkra& a) {
  const Chromotopology& t = a.topology;
  const bool directed = a.has_heights();
  std::ostringstream os;
  os << "digraph adinkra {\n  rankdir=BT;\n";
  detail::dot_nodes(os, t, a.heights);
  for (EdgeIndex e = 0; e < t.edge_count(); ++e) {
    const Edge& ed = t.edge(e);
    NodeIndex from = ed.u, to = ed.v;
    if (directed && a.heights[ed.u] > a.heights[ed.v]) std::swap(from, to);
    os << "  \"" << t.label_string(from) << "\" -> \"" << t.label_string(to) << "\" [color=" << color_name(ed.color);
    if (e < a.dashing.size() && a.dashing[e] == Sign::dashed) os << ", style=dashed";
    if (!directed) os << ", dir=none";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

/// Baobab edges only; pinned edges carry arrowheads.
inline std::string to_dot(const Chromotopology& t, const Baobab& b) {
  std::ostringstream os;
  os << "digraph baobab {\n  rankdir=BT;\n";
  detail::dot_nodes(os, t, {});
  const auto slots = b.slots();
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const EdgeIndex e = slots[i];
    const Edge& ed = t.edge(e);
    auto pin = std::find_if(b.pinned.begin(), b.pinned.end(), [&](const Pin& p) { return p.edge == e; });
    NodeIndex from = ed.u, to = ed.v;
    if (pin != b.pinned.end() && pin->toward == ed.u) std::swap(from, to);
    os << "  \"" << t.label_string(from) << "\" -> \"" << t.label_string(to) << "\" [color=" << color_name(ed.color);
    if (i < b.bits.size() && b.bits[i] == 0) os << ", style=dashed";
    if (pin == b.pinned.end()) os << ", dir=none";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace adinkra::io
