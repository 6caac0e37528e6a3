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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "adinkra/adinkra.hpp"
#include "adinkra/io.hpp"

namespace {

using namespace adinkra;
using nlohmann::json;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::input, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::input, "cannot write '" + path + "'");
  out << text;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

Family parse_family(const std::string& spec) {
  if (spec == "quaternion") return Family::quaternion();
  return Family::parse(spec);
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\n')) ++i;
  return s.substr(i);
}

/// Positional word, or stdin when omitted.
std::string word_or_stdin(const std::string& word) { return trimmed(word.empty() ? read_input("-") : word); }

std::string join_indices(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

struct BuildOpts {
  int n = 0;
  std::string code;
  bool valid = false;
  std::string bits;
  std::int64_t seed = -1;
  std::string out;
};

int cmd_build(const BuildOpts& o) {
  const auto gens = split_list(o.code);
  const int length = gens.empty() ? o.n : static_cast<int>(gens.front().size());
  if (length != o.n + static_cast<int>(gens.size()))
    throw Error(ErrorKind::input, "code generators must have length n + k");
  const Chromotopology t = build_chromotopology(o.n, BinaryCode::parse(length, gens));
  Adinkra a = io::skeleton(t);
  if (o.valid || !o.bits.empty() || o.seed >= 0) {
    const auto slots = baobab_slots(t).slots();
    BitVector bits(slots.size(), 1);
    if (!o.bits.empty()) {
      bits = parse_bits(o.bits);
    } else if (o.seed >= 0) {
      std::mt19937_64 rng(static_cast<std::uint64_t>(o.seed));
      for (Bit& b : bits) b = static_cast<Bit>(rng() & 1U);
    }
    a.dashing = reconstruct_dashing(t, slots, bits).dashing;
    a.heights = valise_heights(t);
  }
  write_output(o.out, io::to_json(a).dump(2) + "\n");
  return 0;
}

int cmd_verify(const std::string& in) {
  const Adinkra a = io::adinkra_from_string(read_input(in));
  const Chromotopology& t = a.topology;
  json report;
  bool ok = true;
  if (a.has_dashing()) {
    const DashingReport d = verify_odd_dashing(a);
    report["dashing_odd"] = d.ok;
    report["violated_plaquettes"] = json::array();
    for (const Plaquette& p : d.violations)
      report["violated_plaquettes"].push_back({{"base", t.label_string(p.base)}, {"colors", {p.first, p.second}}});
    ok = ok && d.ok;
  } else {
    report["dashing_odd"] = nullptr;
  }
  if (a.has_heights()) {
    const bool h = verify_heights(a);
    report["heights_ok"] = h;
    ok = ok && h;
  } else {
    report["heights_ok"] = nullptr;
  }
  if (ok && a.has_dashing() && a.has_heights()) {
    const GardenReport g = check_garden(adinkra_to_gamma(a));
    report["garden"] = g.ok;
    ok = g.ok;
  }
  report["ok"] = ok;
  std::cout << report.dump() << "\n";
  if (!ok) {
    const std::size_t bad = report.contains("violated_plaquettes") ? report["violated_plaquettes"].size() : 0;
    throw Error(ErrorKind::invalid_adinkra, std::to_string(bad) + " violated plaquette" + (bad == 1 ? "" : "s"));
  }
  return 0;
}

int cmd_baobab(const std::string& in, const std::string& out) {
  const Adinkra a = io::adinkra_from_string(read_input(in));
  write_output(out, io::to_json(a.topology, extract_baobab(a)).dump(2) + "\n");
  return 0;
}

int cmd_reconstruct(const std::string& in, const std::string& skeleton, const std::string& out,
                    const std::string& trace_path) {
  const io::BaobabDocument doc = io::baobab_from_string(read_input(in));
  if (!skeleton.empty()) {
    const Adinkra s = io::adinkra_from_string(read_input(skeleton));
    if (!(s.topology.code() == doc.topology.code()) || s.topology.n() != doc.topology.n())
      throw Error(ErrorKind::input, "baobab and skeleton describe different chromotopologies");
  }
  GateTrace trace;
  const Adinkra a = reconstruct(doc.topology, doc.baobab, &trace);
  write_output(out, io::to_json(a).dump(2) + "\n");
  if (!trace_path.empty()) write_output(trace_path, io::trace_lines(doc.topology, trace));
  return 0;
}

int cmd_dof(int n, int k, bool directed) {
  if (n < 1 || k < 0) throw Error(ErrorKind::input, "need n >= 1 and k >= 0");
  if (directed) {
    const auto [lo, hi] = directed_dof_bounds(n);
    std::cout << lo << " " << hi << "\n";
  } else {
    std::cout << dashing_dof(n, k) << "\n";
  }
  return 0;
}

int cmd_encode(const std::string& family, const std::string& message) {
  std::cout << encode(parse_bits(word_or_stdin(message)), parse_family(family)).to_wire() << "\n";
  return 0;
}

int cmd_decode(const std::string& word, int max_flips) {
  EdgeBitVector v = EdgeBitVector::parse_wire(word_or_stdin(word));
  if (max_flips > 0) v = correct(v, max_flips).corrected;
  std::cout << format_bits(decode(v)) << "\n";
  return 0;
}

int cmd_syndrome(const std::string& word) {
  const EdgeBitVector v = EdgeBitVector::parse_wire(word_or_stdin(word));
  const Syndrome s = syndrome(v);
  json j = json::array();
  for (const Plaquette& p : s.plaquettes)
    j.push_back({{"base", v.family.topology().label_string(p.base)}, {"colors", {p.first, p.second}}});
  for (QuaternionRelation r : s.relations) j.push_back(std::string(to_string(r)));
  std::cout << j.dump() << "\n";
  return s.empty() ? 0 : 1;
}

int cmd_correct(const std::string& word, int max_flips) {
  const Correction c = correct(EdgeBitVector::parse_wire(word_or_stdin(word)), max_flips);
  std::cout << c.corrected.to_wire() << "\n";
  std::cerr << "flipped: " << (c.flipped.empty() ? "-" : join_indices(c.flipped)) << "\n";
  return 0;
}

int cmd_fill(const std::string& word, const std::string& erased) {
  std::vector<std::size_t> idx;
  for (const auto& s : split_list(erased)) {
    try {
      idx.push_back(static_cast<std::size_t>(std::stoul(s)));
    } catch (const std::exception&) {
      throw Error(ErrorKind::input, "bad erased index '" + s + "'");
    }
  }
  std::cout << fill_erasures(EdgeBitVector::parse_wire(word_or_stdin(word)), idx).to_wire() << "\n";
  return 0;
}

int cmd_inject(const std::string& word, std::size_t flips, std::uint64_t seed) {
  std::cout << inject_errors(EdgeBitVector::parse_wire(word_or_stdin(word)), flips, seed).to_wire() << "\n";
  return 0;
}

int cmd_distance(const std::string& family) {
  std::cout << min_distance(parse_family(family)) << "\n";
  return 0;
}

int cmd_export_dot(const std::string& in, const std::string& out) {
  const std::string text = read_input(in);
  const json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorKind::input, "malformed JSON");
  if (j.contains("tree_edges")) {
    const io::BaobabDocument doc = io::baobab_from_json(j);
    write_output(out, io::to_dot(doc.topology, doc.baobab));
  } else {
    write_output(out, io::to_dot(io::adinkra_from_json(j)));
  }
  return 0;
}

int cmd_gamma(const std::string& in) {
  const Adinkra a = io::adinkra_from_string(read_input(in));
  const AdjacencyMatrixSet set = adinkra_to_gamma(a);
  std::cout << "order:";
  for (NodeIndex i : set.order) std::cout << ' ' << a.topology.label_string(i);
  std::cout << "\n";
  for (Color c = 1; c <= a.topology.colors(); ++c) std::cout << "color " << c << ":\n" << format_matrix(set[c]);
  const GardenReport g = check_garden(set);
  if (!g.ok) {
    const GardenViolation& v = *g.violation;
    throw Error(ErrorKind::invalid_adinkra, "{" + std::to_string(v.first) + "," + std::to_string(v.second) +
                                                "} entry (" + std::to_string(v.row) + "," + std::to_string(v.col) +
                                                ") is " + to_string(v.got) + ", expected " + to_string(v.expected));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adinkra graphs: construction, algebra checks, baobabs and error correction"};
  app.require_subcommand(1);
  int status = 0;

  BuildOpts build;
  auto* b = app.add_subcommand("build", "Emit the adinkra skeleton for a chromotopology");
  b->add_option("--n", build.n, "Number of supersymmetries left after the quotient")->required()->check(
      CLI::Range(1, kMaxColors));
  b->add_option("--code", build.code, "Comma-separated generator bitstrings of length n+k");
  b->add_flag("--valid", build.valid, "Fill in the canonical valise adinkra (all baobab bits undashed)");
  b->add_option("--bits", build.bits, "Baobab dashing bits for the valise adinkra");
  b->add_option("--seed", build.seed, "Random baobab dashing bits from this seed");
  b->add_option("-o,--output", build.out, "Output file (default stdout)");
  b->callback([&] { status = cmd_build(build); });

  std::string in, out, skeleton, trace, family, word, erased;
  auto* v = app.add_subcommand("verify", "Check dashing, heights and the Garden algebra of an adinkra");
  v->add_option("input", in, "Adinkra JSON (default stdin)");
  v->callback([&] { status = cmd_verify(in); });

  auto* bb = app.add_subcommand("baobab", "Extract the baobab of a valid adinkra");
  bb->add_option("input", in, "Adinkra JSON (default stdin)");
  bb->add_option("-o,--output", out, "Output file (default stdout)");
  bb->callback([&] { status = cmd_baobab(in, out); });

  auto* r = app.add_subcommand("reconstruct", "Rebuild an adinkra from its baobab");
  r->add_option("input", in, "Baobab JSON (default stdin)");
  r->add_option("--skeleton", skeleton, "Skeleton JSON to check the baobab against");
  r->add_option("-o,--output", out, "Output file (default stdout)");
  r->add_option("--trace", trace, "Write the gate trace as JSON lines to this file");
  r->callback([&] { status = cmd_reconstruct(in, skeleton, out, trace); });

  int dof_n = 0, dof_k = 0;
  bool directed = false;
  auto* d = app.add_subcommand("dof", "Degrees of freedom of an adinkra family");
  d->add_option("--n", dof_n)->required();
  d->add_option("--k", dof_k);
  d->add_flag("--directed", directed, "Print the bounds on pinned directions instead");
  d->callback([&] { status = cmd_dof(dof_n, dof_k, directed); });

  std::string message;
  auto* enc = app.add_subcommand("encode", "Encode message bits as an edge-bit codeword");
  enc->add_option("--family", family, "'quaternion' or a family header")->required();
  enc->add_option("message", message, "Message bitstring (default stdin)");
  enc->callback([&] { status = cmd_encode(family, message); });

  int max_flips = 0;
  auto* dec = app.add_subcommand("decode", "Read the message back from a codeword");
  dec->add_option("codeword", word, "Wire codeword (default stdin)");
  dec->add_option("--max-flips", max_flips, "Correct up to this many flips first");
  dec->callback([&] { status = cmd_decode(word, max_flips); });

  auto* syn = app.add_subcommand("syndrome", "List violated plaquettes or relations");
  syn->add_option("codeword", word, "Wire codeword (default stdin)");
  syn->callback([&] { status = cmd_syndrome(word); });

  auto* cor = app.add_subcommand("correct", "Find the unique smallest correction");
  cor->add_option("codeword", word, "Wire codeword (default stdin)");
  cor->add_option("--max-flips", max_flips)->required();
  cor->callback([&] { status = cmd_correct(word, max_flips); });

  auto* fill = app.add_subcommand("fill", "Recover erased bits");
  fill->add_option("codeword", word, "Wire codeword with placeholder bits at erased positions");
  fill->add_option("--erased", erased, "Comma-separated erased bit indices")->required();
  fill->callback([&] { status = cmd_fill(word, erased); });

  std::size_t flips = 0;
  std::uint64_t seed = 0;
  auto* inj = app.add_subcommand("inject", "Flip distinct random bits of a codeword");
  inj->add_option("codeword", word, "Wire codeword (default stdin)");
  inj->add_option("--flips", flips)->required();
  inj->add_option("--seed", seed)->required();
  inj->callback([&] { status = cmd_inject(word, flips, seed); });

  auto* dist = app.add_subcommand("distance", "Minimum Hamming distance of a family by enumeration");
  dist->add_option("--family", family, "'quaternion' or a family header")->required();
  dist->callback([&] { status = cmd_distance(family); });

  auto* dot = app.add_subcommand("export-dot", "Render an adinkra or baobab as Graphviz DOT");
  dot->add_option("input", in, "Adinkra or baobab JSON (default stdin)");
  dot->add_option("-o,--output", out, "Output file (default stdout)");
  dot->callback([&] { status = cmd_export_dot(in, out); });

  auto* gam = app.add_subcommand("gamma", "Print the adjacency matrices and check the Garden algebra");
  gam->add_option("input", in, "Adinkra JSON (default stdin)");
  gam->callback([&] { status = cmd_gamma(in); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const AmbiguousCorrection& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << ":";
    for (const auto& c : e.candidates()) std::cerr << " [" << join_indices(c) << "]";
    std::cerr << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what();
    if (!e.items().empty()) std::cerr << " [" << join_indices(e.items()) << "]";
    std::cerr << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 3;
  }
  return status;
}
