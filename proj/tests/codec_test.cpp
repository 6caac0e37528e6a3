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

#include <gtest/gtest.h>

#include <random>

#include "adinkra/adinkra.hpp"
#include "support.hpp"

namespace adinkra {
namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::input;
}

BitVector random_bits(std::mt19937_64& rng, std::size_t n) {
  BitVector b(n);
  for (Bit& x : b) x = static_cast<Bit>(rng() & 1U);
  return b;
}

TEST(Family, HeadersRoundTrip) {
  for (const Family& f : {Family::garden(2), Family::garden(3), Family::parse("n=3;code=1111;scheme=dashing"),
                          Family::quaternion()}) {
    EXPECT_EQ(Family::parse(f.header()), f);
  }
  EXPECT_EQ(Family::quaternion().header(), "n=2;code=111;scheme=direction");
  EXPECT_EQ(Family::garden(3).header(), "n=3;code=;scheme=dashing");
  EXPECT_EQ(kind_of([] { Family::parse("n=3;code=1100;scheme=dashing"); }), ErrorKind::not_doubly_even);
  EXPECT_EQ(kind_of([] { Family::parse("n=3;code=;scheme=direction"); }), ErrorKind::input);
  EXPECT_EQ(kind_of([] { Family::parse("n=3;scheme=dashing"); }), ErrorKind::input);
  EXPECT_EQ(kind_of([] { EdgeBitVector::parse_wire("n=2;code=;scheme=dashing:101"); }), ErrorKind::input);
}

TEST(Encode, SquareClosesWithADashedEdge) {
  const EdgeBitVector cw = encode({1, 1, 1}, Family::garden(2));
  EXPECT_EQ(format_bits(cw.bits), "1110");
  EXPECT_EQ(cw.to_wire(), "n=2;code=;scheme=dashing:1110");
}

TEST(Encode, CubeRateAndRoundTrip) {
  const Family f = Family::garden(3);
  EXPECT_EQ(f.message_length(), 7u);
  EXPECT_EQ(f.length(), 12u);
  for (std::uint32_t m = 0; m < 128; ++m) {
    BitVector msg(7);
    for (std::size_t i = 0; i < 7; ++i) msg[i] = (m >> i) & 1U;
    const EdgeBitVector cw = encode(msg, f);
    EXPECT_TRUE(is_codeword(cw));
    EXPECT_EQ(correct(cw, 0).corrected, cw);
    EXPECT_EQ(decode(cw), msg);
    EXPECT_EQ(EdgeBitVector::parse_wire(cw.to_wire()), cw);
  }
}

TEST(Encode, QuaternionMessagesRoundTrip) {
  const Family f = Family::quaternion();
  EXPECT_EQ(format_bits(encode({1, 1, 1}, f).bits), "111100");
  for (std::uint32_t m = 0; m < 8; ++m) {
    const BitVector msg{Bit(m & 1), Bit((m >> 1) & 1), Bit((m >> 2) & 1)};
    const EdgeBitVector cw = encode(msg, f);
    EXPECT_TRUE(is_codeword(cw));
    EXPECT_EQ(decode(cw), msg);
  }
}

TEST(Encode, WrongLengthIsRejected) {
  EXPECT_EQ(kind_of([] { encode({1, 1}, Family::garden(2)); }), ErrorKind::input);
  EXPECT_EQ(kind_of([] { decode(EdgeBitVector{Family::garden(2), {1, 1, 1, 1}}); }), ErrorKind::uncorrectable);
}

TEST(Syndrome, Examples) {
  const Family cube = Family::garden(3);
  const EdgeBitVector cw = encode(BitVector(7, 1), cube);
  EXPECT_TRUE(syndrome(cw).empty());
  const auto plqs = plaquettes(cube.topology());
  for (EdgeIndex e = 0; e < cw.bits.size(); ++e) {
    EdgeBitVector bad = cw;
    bad.bits[e] ^= 1U;
    const Syndrome s = syndrome(bad);
    ASSERT_EQ(s.plaquettes.size(), 2u);
    for (const Plaquette& p : s.plaquettes) EXPECT_TRUE(p.contains(e));
  }

  EdgeBitVector q = encode({1, 1, 1}, Family::quaternion());
  q.bits[1] ^= 1U;
  EXPECT_EQ(syndrome(q).relations, (std::vector<QuaternionRelation>{QuaternionRelation::ijk, QuaternionRelation::anti_ij,
                                                                    QuaternionRelation::anti_jk}));
  EXPECT_EQ(kind_of([] { syndrome(EdgeBitVector{Family::garden(2), {1, 1}}); }), ErrorKind::input);
}

TEST(Syndrome, DetectsEveryNonCodewordOfTheSquare) {
  const Family f = Family::garden(2);
  const auto words = enumerate_codewords(f);
  EXPECT_EQ(words.size(), 8u);
  for (int m = 0; m < 16; ++m) {
    const BitVector b{Bit(m & 1), Bit((m >> 1) & 1), Bit((m >> 2) & 1), Bit((m >> 3) & 1)};
    const bool listed = std::find(words.begin(), words.end(), b) != words.end();
    EXPECT_EQ(syndrome(EdgeBitVector{f, b}).empty(), listed);
    EXPECT_EQ(listed, testing::odd_dashing_oracle(f.topology(), b));
  }
}

TEST(Correct, SingleFlipsAreLocalized) {
  std::mt19937_64 rng(5);
  for (const Family& f : {Family::garden(2), Family::garden(3), Family::parse("n=3;code=1111;scheme=dashing"),
                          Family::quaternion()}) {
    for (int trial = 0; trial < 5; ++trial) {
      const EdgeBitVector cw = encode(random_bits(rng, f.message_length()), f);
      for (std::size_t e = 0; e < cw.bits.size(); ++e) {
        EdgeBitVector bad = cw;
        bad.bits[e] ^= 1U;
        if (f == Family::garden(2)) {
          // an even-parity square word is one flip from four codewords
          EXPECT_EQ(kind_of([&] { correct(bad, 1); }), ErrorKind::ambiguous);
          continue;
        }
        const Correction c = correct(bad, 1);
        EXPECT_EQ(c.flipped, std::vector<std::size_t>{e});
        EXPECT_EQ(c.corrected, cw);
      }
    }
  }
}

TEST(Correct, ValidWordsAreReturnedUnchanged) {
  const EdgeBitVector cw = encode({0, 1, 1, 0, 1, 0, 1}, Family::garden(3));
  const Correction c = correct(cw, 2);
  EXPECT_EQ(c.corrected, cw);
  EXPECT_TRUE(c.flipped.empty());
}

TEST(Correct, QuaternionDoubleFlipsAreAlwaysDetected) {
  const EdgeBitVector cw = encode({1, 1, 1}, Family::quaternion());
  int uncorrectable = 0, miscorrected = 0;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a + 1; b < 6; ++b) {
      EdgeBitVector bad = cw;
      bad.bits[a] ^= 1U;
      bad.bits[b] ^= 1U;
      EXPECT_FALSE(syndrome(bad).empty());
      try {
        const Correction c = correct(bad, 1);
        EXPECT_NE(c.corrected, cw);
        ++miscorrected;
      } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::uncorrectable);
        ++uncorrectable;
      }
    }
  // distance 3: only the doubles at distance >= 2 from every other codeword stay uncorrectable
  EXPECT_EQ(uncorrectable, 3);
  EXPECT_EQ(miscorrected, 12);
}

TEST(Correct, AmbiguityListsEveryCandidate) {
  EdgeBitVector v{Family::garden(2), {1, 1, 1, 1}};
  try {
    correct(v, 1);
    FAIL();
  } catch (const AmbiguousCorrection& e) {
    EXPECT_EQ(e.candidates().size(), 4u);
  }
}

TEST(FillErasures, SquareAnySingleErasure) {
  const EdgeBitVector cw = encode({1, 0, 1}, Family::garden(2));
  for (std::size_t e = 0; e < 4; ++e) {
    EdgeBitVector hole = cw;
    hole.bits[e] ^= 1U;  // whatever sits in an erased slot is ignored
    EXPECT_EQ(fill_erasures(hole, {e}), cw);
  }
}

TEST(FillErasures, CubeSpanningTreeComplement) {
  const Family f = Family::garden(3);
  const EdgeBitVector cw = encode({1, 0, 0, 1, 1, 0, 1}, f);
  const auto tree = baobab_slots(f.topology()).tree_edges;
  std::vector<std::size_t> erased;
  for (EdgeIndex e = 0; e < cw.bits.size(); ++e)
    if (std::find(tree.begin(), tree.end(), e) == tree.end()) erased.push_back(e);
  EXPECT_EQ(erased.size(), 5u);
  EXPECT_EQ(fill_erasures(cw, erased), cw);
}

TEST(FillErasures, CubeColorClass) {
  const Family f = Family::garden(3);
  const Chromotopology& t = f.topology();
  const EdgeBitVector cw = encode({0, 0, 1, 1, 0, 1, 1}, f);
  std::vector<std::size_t> color1;
  for (EdgeIndex e = 0; e < t.edge_count(); ++e)
    if (t.edge(e).color == 1) color1.push_back(e);

  // three of the four color-1 edges: the one left joins the two squares, so the rest spans
  const std::vector<std::size_t> three(color1.begin() + 1, color1.end());
  EXPECT_EQ(fill_erasures(cw, three), cw);

  // the whole color class: colors 2 and 3 alone leave two disjoint squares
  std::vector<bool> keep(t.edge_count(), true);
  for (std::size_t e : color1) keep[e] = false;
  EXPECT_FALSE(testing::spans(t, keep));
  try {
    fill_erasures(cw, color1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::insufficient);
    EXPECT_FALSE(e.items().empty());
  }
}

TEST(FillErasures, AgreesWithTheBruteForceOracle) {
  std::mt19937_64 rng(61);
  for (const Family& f : {Family::garden(3), Family::parse("n=3;code=1111;scheme=dashing")}) {
    const Chromotopology& t = f.topology();
    for (int trial = 0; trial < 150; ++trial) {
      const EdgeBitVector cw = encode(random_bits(rng, f.message_length()), f);
      std::vector<std::size_t> erased;
      PartialBits known(t.edge_count());
      for (EdgeIndex e = 0; e < t.edge_count(); ++e) {
        if (rng() % 2) erased.push_back(e);
        else known[e] = cw.bits[e];
      }
      if (testing::dashings_matching(t, known) == 1) {
        EXPECT_EQ(fill_erasures(cw, erased), cw);
      } else {
        EXPECT_EQ(kind_of([&] { fill_erasures(cw, erased); }), ErrorKind::insufficient);
      }
    }
  }
}

TEST(FillErasures, CorruptTrustedBitsAreAContradiction) {
  EdgeBitVector v{Family::garden(2), {1, 1, 1, 1}};
  EXPECT_EQ(kind_of([&] { fill_erasures(v, {}); }), ErrorKind::contradiction);
}

TEST(FillErasures, Quaternion) {
  const EdgeBitVector cw = encode({1, 1, 1}, Family::quaternion());
  EXPECT_EQ(fill_erasures(cw, {3, 4, 5}), cw);
  EXPECT_EQ(fill_erasures(cw, {0, 5}), cw);
}

TEST(MinDistance, Families) {
  EXPECT_EQ(min_distance(Family::quaternion()), 3);
  EXPECT_EQ(enumerate_codewords(Family::quaternion()).size(), 8u);
  EXPECT_EQ(min_distance(Family::garden(1)), 1);
  EXPECT_EQ(enumerate_codewords(Family::garden(1)).size(), 2u);
  EXPECT_EQ(min_distance(Family::garden(2)), 2);
  EXPECT_EQ(min_distance(Family::garden(3)), 3);
  EXPECT_EQ(min_distance(Family::parse("n=3;code=1111;scheme=dashing")), 4);
  EXPECT_EQ(kind_of([] { min_distance(Family::garden(4)); }), ErrorKind::size_guard);
}

TEST(InjectErrors, Examples) {
  const EdgeBitVector cw = encode(BitVector(7, 0), Family::garden(3));
  EXPECT_EQ(inject_errors(cw, 0, 1), cw);
  const EdgeBitVector one = inject_errors(cw, 1, 42);
  EXPECT_EQ(hamming_distance(one.bits, cw.bits), 1);
  EXPECT_EQ(inject_errors(cw, 1, 42), one);
  const EdgeBitVector all = inject_errors(cw, cw.bits.size(), 9);
  for (std::size_t i = 0; i < cw.bits.size(); ++i) EXPECT_EQ(all.bits[i], cw.bits[i] ^ 1U);
  for (std::size_t k = 0; k <= cw.bits.size(); ++k)
    EXPECT_EQ(hamming_distance(inject_errors(cw, k, 1000 + k).bits, cw.bits), static_cast<int>(k));
  EXPECT_THROW(inject_errors(cw, 13, 0), Error);
}

}  // namespace
}  // namespace adinkra
