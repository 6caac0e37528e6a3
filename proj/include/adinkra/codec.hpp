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
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "adinkra/algebra.hpp"
#include "adinkra/baobab.hpp"
#include "adinkra/bits.hpp"
#include "adinkra/error.hpp"
#include "adinkra/graph.hpp"
#include "adinkra/propagation.hpp"
#include "adinkra/quaternion.hpp"

namespace adinkra {

enum class Scheme { dashing, direction };

/// Which adinkra a codeword lives on. Garden families carry one dashing bit per
/// edge (valise directions are implied and not sent); the quaternion family
/// carries one direction bit per edge of K4.
class Family {
 public:
  static Family garden(int n, BinaryCode code) {
    if (!code.is_doubly_even()) throw Error(ErrorKind::not_doubly_even, "code is not doubly even");
    Family f(Scheme::dashing, n, std::move(code));
    f.topology_ = build_chromotopology(f.n_, f.code_);
    return f;
  }
  static Family garden(int n) { return garden(n, BinaryCode(n, {})); }

  static Family quaternion() {
    Family f(Scheme::direction, 2, BinaryCode(3, {0b111}));
    f.topology_ = quaternion::skeleton();
    return f;
  }

  /// Parses "n=<n>;code=<g1,g2,...>;scheme=<dashing|direction>".
  static Family parse(std::string_view header) {
    int n = -1;
    std::vector<std::string> gens;
    std::string scheme;
    bool have_code = false;
    std::stringstream ss{std::string(header)};
    std::string field;
    while (std::getline(ss, field, ';')) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) throw Error(ErrorKind::input, "family field without '=': '" + field + "'");
      const std::string key = field.substr(0, eq);
      const std::string value = field.substr(eq + 1);
      if (key == "n") {
        try {
          n = std::stoi(value);
        } catch (const std::exception&) {
          throw Error(ErrorKind::input, "bad n in family header: '" + value + "'");
        }
      } else if (key == "code") {
        have_code = true;
        std::stringstream gs(value);
        std::string g;
        while (std::getline(gs, g, ','))
          if (!g.empty()) gens.push_back(g);
      } else if (key == "scheme") {
        scheme = value;
      } else {
        throw Error(ErrorKind::input, "unknown family field '" + key + "'");
      }
    }
    if (n < 1 || !have_code || scheme.empty()) throw Error(ErrorKind::input, "family header needs n, code and scheme");
    if (scheme == "direction") {
      Family q = quaternion();
      if (n != q.n_ || gens.size() != 1 || gens[0] != "111")
        throw Error(ErrorKind::input, "direction scheme is only defined for the quaternion family n=2;code=111");
      return q;
    }
    if (scheme != "dashing") throw Error(ErrorKind::input, "unknown scheme '" + scheme + "'");
    const int length = n + static_cast<int>(gens.size());
    return garden(n, BinaryCode::parse(length, gens));
  }

  std::string header() const {
    std::string out = "n=" + std::to_string(n_) + ";code=";
    const auto gens = code_.generator_strings();
    for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? "," : "") + gens[i];
    out += scheme_ == Scheme::dashing ? ";scheme=dashing" : ";scheme=direction";
    return out;
  }

  Scheme scheme() const { return scheme_; }
  bool is_quaternion() const { return scheme_ == Scheme::direction; }
  int n() const { return n_; }
  const BinaryCode& code() const { return code_; }
  const Chromotopology& topology() const { return topology_; }
  std::size_t length() const { return topology_.edge_count(); }

  /// Edges whose bits carry the message, in canonical order.
  std::vector<EdgeIndex> message_slots() const {
    if (is_quaternion()) {
      std::vector<EdgeIndex> s;
      for (auto [e, b] : quaternion::standard_baobab().fixed) s.push_back(e);
      return s;
    }
    return baobab_slots(topology_).slots();
  }
  std::size_t message_length() const { return message_slots().size(); }

  friend bool operator==(const Family& a, const Family& b) {
    return a.scheme_ == b.scheme_ && a.n_ == b.n_ && a.code_ == b.code_;
  }

 private:
  Family(Scheme s, int n, BinaryCode code) : scheme_(s), n_(n), code_(std::move(code)) {}

  Scheme scheme_;
  int n_;
  BinaryCode code_;
  Chromotopology topology_;
};

/// A transmitted block: one bit per edge of the family's adinkra, canonical order.
struct EdgeBitVector {
  Family family;
  BitVector bits;

  std::string to_wire() const { return family.header() + ":" + format_bits(bits); }

  static EdgeBitVector parse_wire(std::string_view text) {
    const auto colon = text.rfind(':');
    if (colon == std::string_view::npos) throw Error(ErrorKind::input, "codeword needs '<family header>:<bits>'");
    EdgeBitVector v{Family::parse(text.substr(0, colon)), parse_bits(text.substr(colon + 1))};
    if (v.bits.size() != v.family.length())
      throw Error(ErrorKind::input, "codeword has " + std::to_string(v.bits.size()) + " bits, family needs " +
                                        std::to_string(v.family.length()));
    return v;
  }

  friend bool operator==(const EdgeBitVector&, const EdgeBitVector&) = default;
};

struct Syndrome {
  std::vector<Plaquette> plaquettes;           // Garden: plaquettes with even dashing
  std::vector<QuaternionRelation> relations;  // quaternion: failing relations

  bool empty() const { return plaquettes.empty() && relations.empty(); }
};

namespace detail {

inline void check_length(const Family& f, const BitVector& bits) {
  if (bits.size() != f.length())
    throw Error(ErrorKind::input, "expected " + std::to_string(f.length()) + " bits, got " +
                                      std::to_string(bits.size()));
}

inline Syndrome syndrome_of(const Family& f, const std::vector<Plaquette>& plqs, const BitVector& bits) {
  Syndrome s;
  if (f.is_quaternion()) {
    s.relations = quaternion::check(bits).failed;
    return s;
  }
  for (const Plaquette& p : plqs) {
    Bit parity = 0;
    for (EdgeIndex e : p.edges) parity ^= bits[e];
    if (parity != 1) s.plaquettes.push_back(p);
  }
  return s;
}

/// Calls `fn` with every ascending index combination of the given size.
inline void for_each_combination(std::size_t n, std::size_t size,
                                 const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(size);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
    if (pos == size) {
      fn(idx);
      return;
    }
    for (std::size_t i = from; i + (size - pos) <= n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

}  // namespace detail

inline Syndrome syndrome(const EdgeBitVector& received) {
  detail::check_length(received.family, received.bits);
  return detail::syndrome_of(received.family, plaquettes(received.family.topology()), received.bits);
}

inline bool is_codeword(const EdgeBitVector& v) { return syndrome(v).empty(); }

/// Places the message in the baobab slots and rebuilds every other edge.
inline EdgeBitVector encode(const BitVector& message, const Family& family) {
  const auto slots = family.message_slots();
  if (message.size() != slots.size())
    throw Error(ErrorKind::input, "message needs " + std::to_string(slots.size()) + " bits, got " +
                                      std::to_string(message.size()));
  if (family.is_quaternion()) {
    quaternion::Baobab b;
    for (std::size_t i = 0; i < slots.size(); ++i) b.fixed.push_back({slots[i], message[i]});
    const auto search = quaternion::baobab_completions(b);
    if (search.valid.size() != 1)
      throw Error(ErrorKind::contradiction, "quaternion baobab bits admit " + std::to_string(search.valid.size()) +
                                                " completions");
    return {family, search.valid.front()};
  }
  const DashingPropagation d = reconstruct_dashing(family.topology(), slots, message);
  EdgeBitVector out{family, {}};
  for (Sign s : d.dashing) out.bits.push_back(to_bit(s));
  return out;
}

/// Message bits read back from the baobab slots of a valid codeword.
inline BitVector decode(const EdgeBitVector& codeword) {
  if (!is_codeword(codeword)) throw Error(ErrorKind::uncorrectable, "not a codeword; run correct first");
  BitVector msg;
  for (EdgeIndex e : codeword.family.message_slots()) msg.push_back(codeword.bits[e]);
  return msg;
}

struct Correction {
  EdgeBitVector corrected;
  std::vector<std::size_t> flipped;
};

/// Smallest set of at most `max_flips` bit flips that clears the syndrome.
/// Single flips are localized first by matching the violated plaquettes
/// against each edge's plaquettes; larger sets are searched exhaustively.
inline Correction correct(const EdgeBitVector& received, int max_flips) {
  const Family& f = received.family;
  detail::check_length(f, received.bits);
  const auto plqs = plaquettes(f.topology());
  const Syndrome s0 = detail::syndrome_of(f, plqs, received.bits);
  if (s0.empty()) return {received, {}};

  const std::size_t len = received.bits.size();
  for (int size = 1; size <= max_flips; ++size) {
    std::vector<std::vector<std::size_t>> found;
    auto try_flip = [&](const std::vector<std::size_t>& idx) {
      BitVector b = received.bits;
      for (std::size_t i : idx) b[i] ^= 1U;
      if (detail::syndrome_of(f, plqs, b).empty()) found.push_back(idx);
    };
    if (size == 1 && !f.is_quaternion()) {
      for (std::size_t e = 0; e < len; ++e) {
        std::size_t hits = 0, total = 0;
        for (const Plaquette& p : plqs)
          if (p.contains(e)) {
            ++total;
            hits += std::find(s0.plaquettes.begin(), s0.plaquettes.end(), p) != s0.plaquettes.end();
          }
        if (hits == total && hits == s0.plaquettes.size()) try_flip({e});
      }
    } else {
      detail::for_each_combination(len, static_cast<std::size_t>(size), try_flip);
    }
    if (found.size() == 1) {
      Correction c{received, found.front()};
      for (std::size_t i : c.flipped) c.corrected.bits[i] ^= 1U;
      return c;
    }
    if (found.size() > 1)
      throw AmbiguousCorrection(std::to_string(found.size()) + " corrections of " + std::to_string(size) +
                                    " flips clear the syndrome",
                                std::move(found));
  }
  throw Error(ErrorKind::uncorrectable, "no correction with at most " + std::to_string(max_flips) + " flips");
}

/// Recovers erased bits from the trusted ones.
inline EdgeBitVector fill_erasures(const EdgeBitVector& received, const std::vector<std::size_t>& erased) {
  const Family& f = received.family;
  detail::check_length(f, received.bits);
  PartialBits known(received.bits.begin(), received.bits.end());
  for (std::size_t e : erased) {
    if (e >= known.size()) throw Error(ErrorKind::input, "erased index out of range");
    known[e].reset();
  }
  if (f.is_quaternion()) {
    std::vector<std::size_t> open;
    for (std::size_t e = 0; e < known.size(); ++e)
      if (!known[e]) open.push_back(e);
    std::vector<BitVector> fits;
    for (std::size_t mask = 0; mask < (std::size_t{1} << open.size()); ++mask) {
      BitVector b = received.bits;
      for (std::size_t p = 0; p < open.size(); ++p) b[open[p]] = (mask >> p) & 1U;
      if (quaternion::check(b).ok) fits.push_back(b);
    }
    if (fits.empty()) throw Error(ErrorKind::contradiction, "trusted bits fit no quaternion codeword");
    if (fits.size() > 1) throw Error(ErrorKind::insufficient, "erased bits are not determined", open);
    return {f, fits.front()};
  }
  const DashingPropagation d = propagate_dashing(f.topology(), std::move(known));
  EdgeBitVector out{f, {}};
  for (Sign s : d.dashing) out.bits.push_back(to_bit(s));
  return out;
}

/// Every valid codeword, by exhaustive search over all 2^length vectors.
inline std::vector<BitVector> enumerate_codewords(const Family& f) {
  const std::size_t len = f.length();
  if (len > static_cast<std::size_t>(size_guard()) || len >= 63)
    throw Error(ErrorKind::size_guard, std::to_string(len) + " bits exceed the brute-force size guard");
  const auto plqs = plaquettes(f.topology());
  std::vector<BitVector> words;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << len); ++x) {
    BitVector b(len);
    for (std::size_t i = 0; i < len; ++i) b[i] = (x >> i) & 1U;
    if (detail::syndrome_of(f, plqs, b).empty()) words.push_back(std::move(b));
  }
  return words;
}

/// Minimum pairwise Hamming distance over all valid codewords.
inline int min_distance(const Family& f) {
  const auto words = enumerate_codewords(f);
  int best = std::numeric_limits<int>::max();
  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t b = a + 1; b < words.size(); ++b) best = std::min(best, hamming_distance(words[a], words[b]));
  if (words.size() < 2) throw Error(ErrorKind::input, "family has fewer than two codewords");
  return best;
}

/// Flips `flips` distinct positions chosen by a seeded Fisher-Yates prefix.
inline EdgeBitVector inject_errors(const EdgeBitVector& codeword, std::size_t flips, std::uint64_t seed) {
  if (flips > codeword.bits.size()) throw Error(ErrorKind::input, "more flips than bits");
  std::vector<std::size_t> pos(codeword.bits.size());
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < flips; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (pos.size() - i));
    std::swap(pos[i], pos[j]);
  }
  EdgeBitVector out = codeword;
  for (std::size_t i = 0; i < flips; ++i) out.bits[pos[i]] ^= 1U;
  return out;
}

}  // namespace adinkra
