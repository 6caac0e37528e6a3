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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace adinkra {

enum class ErrorKind {
  input,            // malformed or inconsistent arguments
  not_doubly_even,  // code rejected for the chromotopology quotient
  invalid_adinkra,  // dashing or heights fail validation
  grading,          // graded sum of monomials with different derivative powers
  contradiction,    // propagation hit a constraint the known bits violate
  insufficient,     // propagation fixpoint left unknown edges
  uncorrectable,    // no correction within the flip budget
  ambiguous,        // several minimal corrections
  size_guard,       // brute force refused
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::input: return "input";
    case ErrorKind::not_doubly_even: return "not-doubly-even";
    case ErrorKind::invalid_adinkra: return "invalid-adinkra";
    case ErrorKind::grading: return "grading";
    case ErrorKind::contradiction: return "contradiction";
    case ErrorKind::insufficient: return "insufficient";
    case ErrorKind::uncorrectable: return "uncorrectable";
    case ErrorKind::ambiguous: return "ambiguous";
    case ErrorKind::size_guard: return "size-guard";
  }
  return "unknown";
}

/// Library-wide exception. `items()` carries edge indices (or other positions)
/// the failure refers to, e.g. the unresolved edges of an insufficient baobab.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<std::size_t> items = {})
      : std::runtime_error(what), kind_(kind), items_(std::move(items)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& items() const noexcept { return items_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> items_;
};

/// Thrown by `correct` when several flip sets of the same minimal size clear the syndrome.
class AmbiguousCorrection : public Error {
 public:
  AmbiguousCorrection(const std::string& what, std::vector<std::vector<std::size_t>> candidates)
      : Error(ErrorKind::ambiguous, what), candidates_(std::move(candidates)) {}

  const std::vector<std::vector<std::size_t>>& candidates() const noexcept { return candidates_; }

 private:
  std::vector<std::vector<std::size_t>> candidates_;
};

}  // namespace adinkra
