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

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adinkra/error.hpp"

namespace adinkra {

/// A vertex of the (n+k)-cube. Color c (1-based) is bit c-1.
using Label = std::uint32_t;
inline constexpr int kMaxColors = 24;

using Bit = std::uint8_t;
using BitVector = std::vector<Bit>;

inline int weight(Label x) { return std::popcount(x); }

inline Label color_bit(int color) { return Label{1} << (color - 1); }

/// Binary numeral of `x`, `width` digits: the leftmost character is the highest color.
inline std::string format_label(Label x, int width) {
  std::string out(static_cast<std::size_t>(width), '0');
  for (int c = 0; c < width; ++c)
    if ((x >> c) & 1U) out[static_cast<std::size_t>(width - 1 - c)] = '1';
  return out;
}

inline Label parse_label(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxColors))
    throw Error(ErrorKind::input, "bad label length: '" + std::string(text) + "'");
  Label x = 0;
  for (char ch : text) {
    if (ch != '0' && ch != '1')
      throw Error(ErrorKind::input, "label must be a 0/1 string: '" + std::string(text) + "'");
    x = (x << 1) | static_cast<Label>(ch == '1');
  }
  return x;
}

inline std::string format_bits(const BitVector& bits) {
  std::string out;
  out.reserve(bits.size());
  for (Bit b : bits) out.push_back(b ? '1' : '0');
  return out;
}

inline BitVector parse_bits(std::string_view text) {
  BitVector bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1')
      throw Error(ErrorKind::input, "bitstring must contain only 0/1: '" + std::string(text) + "'");
    bits.push_back(ch == '1');
  }
  return bits;
}

inline int hamming_distance(const BitVector& a, const BitVector& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) d += a[i] != b[i];
  return d;
}

/// Brute-force size limit in bits; ADINKRA_SIZE_GUARD overrides the default.
inline int size_guard(int fallback = 20) {
  if (const char* env = std::getenv("ADINKRA_SIZE_GUARD")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0 && v < 63) return static_cast<int>(v);
  }
  return fallback;
}

}  // namespace adinkra
