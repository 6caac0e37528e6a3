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

// Sends random messages through a bit-flip channel and tallies how each family
// copes: corrected, detected but uncorrectable, ambiguous, or missed.
#include <cstdint>
#include <iostream>
#include <random>
#include <string>

#include "adinkra/adinkra.hpp"

namespace {

struct Tally {
  int corrected = 0;
  int detected = 0;
  int ambiguous = 0;
  int missed = 0;
};

Tally run(const adinkra::Family& family, std::size_t flips, int trials, std::uint64_t seed) {
  using namespace adinkra;
  std::mt19937_64 rng(seed);
  Tally t;
  for (int trial = 0; trial < trials; ++trial) {
    BitVector msg(family.message_length());
    for (Bit& b : msg) b = static_cast<Bit>(rng() & 1U);
    const EdgeBitVector sent = encode(msg, family);
    const EdgeBitVector got = inject_errors(sent, flips, rng());
    try {
      const Correction c = correct(got, 1);
      if (c.corrected == sent) ++t.corrected;
      else ++t.missed;
    } catch (const AmbiguousCorrection&) {
      ++t.ambiguous;
    } catch (const Error&) {
      ++t.detected;
    }
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 1;
  const int trials = 200;
  for (const auto& [name, family] : {std::pair{std::string("quaternion"), adinkra::Family::quaternion()},
                                     std::pair{std::string("garden n=3"), adinkra::Family::garden(3)},
                                     std::pair{std::string("garden n=3 [1111]"),
                                               adinkra::Family::parse("n=3;code=1111;scheme=dashing")}}) {
    std::cout << name << " (" << family.length() << " bits, " << family.message_length() << " message bits)\n";
    for (std::size_t flips = 1; flips <= 2; ++flips) {
      const Tally t = run(family, flips, trials, seed);
      std::cout << "  " << flips << " flip(s): corrected " << t.corrected << ", detected " << t.detected
                << ", ambiguous " << t.ambiguous << ", miscorrected " << t.missed << "\n";
    }
  }
}
