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
#include <string>
#include <vector>

#include "adinkra/bits.hpp"
#include "adinkra/error.hpp"

namespace adinkra {

namespace detail {

/// Reduced row echelon form over GF(2) with the pivot of each row at its most
/// significant set bit. Rows come back sorted by decreasing pivot; dependent
/// rows are dropped and reported through `independent`.
inline std::vector<Label> rref(std::vector<Label> rows, bool* independent = nullptr) {
  std::vector<Label> basis;
  for (Label r : rows) {
    for (Label b : basis)
      if (r & std::bit_floor(b)) r ^= b;
    if (r == 0) {
      if (independent) *independent = false;
      continue;
    }
    Label pivot = std::bit_floor(r);
    for (Label& b : basis)
      if (b & pivot) b ^= r;
    basis.push_back(r);
  }
  if (independent && basis.size() == rows.size()) *independent = true;
  std::sort(basis.begin(), basis.end(), [](Label a, Label b) { return a > b; });
  return basis;
}

}  // namespace detail

/// Binary linear code given by generator rows. The rows are kept exactly as
/// supplied; `basis()` is the reduced echelon form used for coset reduction.
class BinaryCode {
 public:
  BinaryCode() = default;

  BinaryCode(int length, std::vector<Label> generators) : length_(length), generators_(std::move(generators)) {
    if (length_ < 1 || length_ > kMaxColors)
      throw Error(ErrorKind::input, "code length must be in 1.." + std::to_string(kMaxColors));
    for (Label g : generators_)
      if (length_ < 32 && (g >> length_) != 0) throw Error(ErrorKind::input, "generator longer than code length");
    bool independent = true;
    basis_ = detail::rref(generators_, &independent);
    if (!independent) throw Error(ErrorKind::input, "code generators are linearly dependent");
  }

  /// Parses ASCII generators; every string must have the same length.
  static BinaryCode parse(int length, const std::vector<std::string>& generators) {
    std::vector<Label> rows;
    for (const auto& g : generators) {
      if (static_cast<int>(g.size()) != length)
        throw Error(ErrorKind::input, "generator '" + g + "' does not have length " + std::to_string(length));
      rows.push_back(parse_label(g));
    }
    return BinaryCode(length, std::move(rows));
  }

  int length() const { return length_; }
  int dimension() const { return static_cast<int>(generators_.size()); }
  const std::vector<Label>& generators() const { return generators_; }
  const std::vector<Label>& basis() const { return basis_; }

  Label pivot_mask() const {
    Label m = 0;
    for (Label b : basis_) m |= std::bit_floor(b);
    return m;
  }

  /// All 2^k codewords, zero first.
  std::vector<Label> codewords() const {
    std::vector<Label> words{0};
    for (Label g : basis_) {
      const std::size_t sz = words.size();
      for (std::size_t i = 0; i < sz; ++i) words.push_back(words[i] ^ g);
    }
    return words;
  }

  bool contains(Label x) const { return reduce(x) == 0; }

  /// Smallest integer in the coset x + C: clear every pivot bit, highest first.
  Label reduce(Label x) const {
    for (Label b : basis_)
      if (x & std::bit_floor(b)) x ^= b;
    return x;
  }

  bool is_doubly_even() const {
    for (Label w : codewords())
      if (weight(w) % 4 != 0) return false;
    return true;
  }

  int min_weight() const {
    int best = length_ + 1;
    for (Label w : codewords())
      if (w != 0) best = std::min(best, weight(w));
    return best;
  }

  std::vector<std::string> generator_strings() const {
    std::vector<std::string> out;
    for (Label g : generators_) out.push_back(format_label(g, length_));
    return out;
  }

  friend bool operator==(const BinaryCode& a, const BinaryCode& b) {
    return a.length_ == b.length_ && a.basis_ == b.basis_;
  }

 private:
  int length_ = 1;
  std::vector<Label> generators_;
  std::vector<Label> basis_;
};

/// True iff the generators are independent and every nonzero codeword of their
/// span has weight divisible by four. Ragged generator lengths are an input error.
inline bool is_doubly_even(const std::vector<std::string>& generators) {
  if (generators.empty()) return true;
  const std::size_t len = generators.front().size();
  for (const auto& g : generators)
    if (g.size() != len) throw Error(ErrorKind::input, "generators have different lengths");
  std::vector<Label> rows;
  for (const auto& g : generators) rows.push_back(parse_label(g));
  bool independent = true;
  detail::rref(rows, &independent);
  if (!independent) return false;
  return BinaryCode(static_cast<int>(len), rows).is_doubly_even();
}

/// Validated doubly even code of length n+k.
inline BinaryCode doubly_even_code(int length, const std::vector<std::string>& generators) {
  BinaryCode code = BinaryCode::parse(length, generators);
  if (!code.is_doubly_even()) throw Error(ErrorKind::not_doubly_even, "code is not doubly even");
  return code;
}

}  // namespace adinkra
