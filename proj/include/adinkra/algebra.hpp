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
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "adinkra/error.hpp"
#include "adinkra/graph.hpp"

namespace adinkra {

/// Gaussian integer re + i*im. Adjacency matrices only ever hold units; sums
/// such as anticommutators produce 2i and friends.
struct Gaussian {
  int re = 0;
  int im = 0;

  bool is_zero() const { return re == 0 && im == 0; }
  friend Gaussian operator+(Gaussian a, Gaussian b) { return {a.re + b.re, a.im + b.im}; }
  friend Gaussian operator*(Gaussian a, Gaussian b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
  friend bool operator==(const Gaussian&, const Gaussian&) = default;
};

inline constexpr Gaussian kOne{1, 0};
inline constexpr Gaussian kI{0, 1};

/// coeff * (d/dtau)^dpow. Zero is stored with dpow = 0.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr Monomial(Gaussian coeff, int dpow = 0) : coeff_(coeff), dpow_(coeff.re == 0 && coeff.im == 0 ? 0 : dpow) {}

  static constexpr Monomial zero() { return {}; }
  static constexpr Monomial one() { return Monomial(kOne); }

  Gaussian coeff() const { return coeff_; }
  int dpow() const { return dpow_; }
  bool is_zero() const { return coeff_.is_zero(); }
  bool is_unit() const {
    return (coeff_.re == 0) != (coeff_.im == 0) && std::abs(coeff_.re) + std::abs(coeff_.im) == 1;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return Monomial(a.coeff_ * b.coeff_, a.dpow_ + b.dpow_);
  }
  friend Monomial operator-(const Monomial& a) { return Monomial(a.coeff_ * Gaussian{-1, 0}, a.dpow_); }
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Gaussian coeff_{};
  int dpow_ = 0;
};

/// Graded sum; mixing derivative powers is an error, not a silent sum.
inline std::optional<Monomial> try_add(const Monomial& a, const Monomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.dpow() != b.dpow()) return std::nullopt;
  return Monomial(a.coeff() + b.coeff(), a.dpow());
}

inline std::string to_string(const Monomial& m) {
  std::string c;
  const Gaussian g = m.coeff();
  if (g.is_zero()) return "0";
  if (g.im == 0) {
    c = std::to_string(g.re);
  } else if (g.re == 0) {
    c = g.im == 1 ? "i" : g.im == -1 ? "-i" : std::to_string(g.im) + "i";
  } else {
    c = "(" + std::to_string(g.re) + (g.im > 0 ? "+" : "-") + std::to_string(std::abs(g.im)) + "i)";
  }
  for (int p = 0; p < m.dpow(); ++p) c += "·d";
  return c;
}

class MonomialMatrix {
 public:
  MonomialMatrix() = default;
  explicit MonomialMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  static MonomialMatrix identity(std::size_t dim, Monomial diag = Monomial::one()) {
    MonomialMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = diag;
    return m;
  }

  /// Integer matrix (dpow 0 everywhere), row-major.
  static MonomialMatrix from_ints(std::size_t dim, const std::vector<int>& values) {
    if (values.size() != dim * dim) throw Error(ErrorKind::input, "matrix literal has the wrong size");
    MonomialMatrix m(dim);
    for (std::size_t i = 0; i < values.size(); ++i) m.entries_[i] = Monomial(Gaussian{values[i], 0});
    return m;
  }

  std::size_t dim() const { return dim_; }
  Monomial& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const Monomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Monomial& m) { return m.is_zero(); });
  }
  bool derivative_free() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Monomial& m) { return m.dpow() == 0; });
  }

  MonomialMatrix transposed() const {
    MonomialMatrix t(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Same matrix with every derivative power dropped.
  MonomialMatrix stripped() const {
    MonomialMatrix s(dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = Monomial(entries_[i].coeff());
    return s;
  }

  MonomialMatrix scaled(const Monomial& f) const {
    MonomialMatrix s(dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = f * entries_[i];
    return s;
  }

  /// Square sub-block starting at (row, col).
  MonomialMatrix block(std::size_t row, std::size_t col, std::size_t size) const {
    MonomialMatrix b(size);
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c) b(r, c) = (*this)(row + r, col + c);
    return b;
  }

  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Monomial> entries_;
};

inline MonomialMatrix add(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::input, "matrix dimensions differ");
  MonomialMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) {
      auto s = try_add(a(r, c), b(r, c));
      if (!s)
        throw Error(ErrorKind::grading, "mixed derivative powers at entry (" + std::to_string(r) + ", " +
                                            std::to_string(c) + ")");
      out(r, c) = *s;
    }
  return out;
}

inline MonomialMatrix mat_mul(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::input, "matrix dimensions differ");
  const std::size_t n = a.dim();
  MonomialMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Monomial acc;
      for (std::size_t k = 0; k < n; ++k) {
        auto s = try_add(acc, a(r, k) * b(k, c));
        if (!s)
          throw Error(ErrorKind::grading, "mixed derivative powers at entry (" + std::to_string(r) + ", " +
                                              std::to_string(c) + ")");
        acc = *s;
      }
      out(r, c) = acc;
    }
  return out;
}

inline MonomialMatrix anticommutator(const MonomialMatrix& a, const MonomialMatrix& b) {
  return add(mat_mul(a, b), mat_mul(b, a));
}

/// Dense text grid, one row per line, entries separated by spaces and padded.
inline std::string format_matrix(const MonomialMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) {
      cells.push_back(to_string(m(r, c)));
      // "·" is two bytes in UTF-8 but one column wide
      std::size_t w = cells.back().size() - static_cast<std::size_t>(m(r, c).dpow());
      width = std::max(width, w);
    }
  std::ostringstream os;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      const std::string& s = cells[r * m.dim() + c];
      std::size_t w = s.size() - static_cast<std::size_t>(m(r, c).dpow());
      if (c) os << ' ';
      os << std::string(width - w, ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Adinkra -> Gamma matrices

/// One matrix per color over a fixed node order. For Garden sets the order is
/// bosons then fermions, so each matrix is block off-diagonal.
struct AdjacencyMatrixSet {
  std::vector<NodeIndex> order;  // matrix row/column -> node
  std::size_t boson_count = 0;
  std::vector<MonomialMatrix> matrices;  // matrices[c - 1] for color c

  const MonomialMatrix& operator[](Color c) const { return matrices[static_cast<std::size_t>(c - 1)]; }
};

enum class GammaCheck { strict, allow_invalid_dashing };

/// Gamma_I for every color. Entry (target, source) is the coefficient of the
/// target field in D_I(source): sign * (i when a boson goes to a fermion) *
/// (d/dtau when the target sits below the source).
inline AdjacencyMatrixSet adinkra_to_gamma(const Adinkra& a, GammaCheck check = GammaCheck::strict) {
  const Chromotopology& t = a.topology;
  if (!a.has_dashing()) throw Error(ErrorKind::invalid_adinkra, "adinkra has edges without a dashing");
  if (!verify_heights(a)) throw Error(ErrorKind::invalid_adinkra, "heights do not step by exactly 1 along edges");
  if (check == GammaCheck::strict && !verify_odd_dashing(a).ok)
    throw Error(ErrorKind::invalid_adinkra, "dashing is not odd around every plaquette");

  AdjacencyMatrixSet set;
  for (NodeIndex i = 0; i < t.node_count(); ++i)
    if (t.parity(i) == Parity::boson) set.order.push_back(i);
  set.boson_count = set.order.size();
  for (NodeIndex i = 0; i < t.node_count(); ++i)
    if (t.parity(i) == Parity::fermion) set.order.push_back(i);

  std::vector<std::size_t> position(t.node_count());
  for (std::size_t p = 0; p < set.order.size(); ++p) position[set.order[p]] = p;

  const std::size_t dim = t.node_count();
  set.matrices.assign(static_cast<std::size_t>(t.colors()), MonomialMatrix(dim));
  for (EdgeIndex e = 0; e < t.edge_count(); ++e) {
    const Edge& ed = t.edge(e);
    const Gaussian sign{to_int(a.dashing[e]), 0};
    MonomialMatrix& g = set.matrices[static_cast<std::size_t>(ed.color - 1)];
    for (auto [src, dst] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
      Gaussian coeff = sign;
      if (t.parity(dst) == Parity::fermion) coeff = coeff * kI;
      const int dpow = a.heights[dst] < a.heights[src] ? 1 : 0;
      g(position[dst], position[src]) = Monomial(coeff, dpow);
    }
  }
  return set;
}

struct GardenViolation {
  Color first = 0;
  Color second = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  Monomial got;
  Monomial expected;
};

struct GardenReport {
  bool ok = true;
  std::optional<GardenViolation> violation;
};

/// {Gamma_I, Gamma_J} = 2 i d/dtau delta_IJ * Identity for every pair I <= J.
inline GardenReport check_garden(const AdjacencyMatrixSet& set) {
  const std::size_t dim = set.order.size();
  const Color colors = static_cast<Color>(set.matrices.size());
  const Monomial diag(Gaussian{0, 2}, 1);
  for (Color i = 1; i <= colors; ++i)
    for (Color j = i; j <= colors; ++j) {
      const MonomialMatrix ac = anticommutator(set[i], set[j]);
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
          const Monomial want = (i == j && r == c) ? diag : Monomial::zero();
          if (!(ac(r, c) == want)) return {false, GardenViolation{i, j, r, c, ac(r, c), want}};
        }
    }
  return {};
}

/// Lower-left (D_R) and upper-right (D_L) blocks of a Garden Gamma matrix.
struct GardenBlocks {
  MonomialMatrix left;   // upper-right: fermions -> bosons
  MonomialMatrix right;  // lower-left: bosons -> fermions
};

inline GardenBlocks garden_blocks(const AdjacencyMatrixSet& set, Color c) {
  const std::size_t half = set.boson_count;
  return {set[c].block(0, half, half), set[c].block(half, 0, half)};
}

// ---------------------------------------------------------------------------
// Quaternion relations

enum class QuaternionRelation { i_squared, j_squared, k_squared, ijk, anti_ij, anti_ik, anti_jk };

inline constexpr std::array<QuaternionRelation, 7> kQuaternionRelations = {
    QuaternionRelation::i_squared, QuaternionRelation::j_squared, QuaternionRelation::k_squared,
    QuaternionRelation::ijk,       QuaternionRelation::anti_ij,   QuaternionRelation::anti_ik,
    QuaternionRelation::anti_jk};

constexpr std::string_view to_string(QuaternionRelation r) {
  switch (r) {
    case QuaternionRelation::i_squared: return "i^2";
    case QuaternionRelation::j_squared: return "j^2";
    case QuaternionRelation::k_squared: return "k^2";
    case QuaternionRelation::ijk: return "ijk";
    case QuaternionRelation::anti_ij: return "{i,j}";
    case QuaternionRelation::anti_ik: return "{i,k}";
    case QuaternionRelation::anti_jk: return "{j,k}";
  }
  return "?";
}

struct QuaternionReport {
  bool ok = true;
  std::vector<QuaternionRelation> failed;  // in kQuaternionRelations order
  MonomialMatrix ijk;
};

/// i^2 = j^2 = k^2 = ijk = -1 and pairwise anticommutators vanish.
inline QuaternionReport check_quaternion(const MonomialMatrix& i, const MonomialMatrix& j, const MonomialMatrix& k) {
  if (i.dim() != j.dim() || i.dim() != k.dim()) throw Error(ErrorKind::input, "quaternion matrices differ in size");
  if (!i.derivative_free() || !j.derivative_free() || !k.derivative_free())
    throw Error(ErrorKind::input, "quaternion matrices must not carry derivatives");
  const MonomialMatrix minus_one = MonomialMatrix::identity(i.dim(), Monomial(Gaussian{-1, 0}));
  const MonomialMatrix zero(i.dim());
  QuaternionReport report;
  report.ijk = mat_mul(mat_mul(i, j), k);
  auto expect = [&](QuaternionRelation r, const MonomialMatrix& got, const MonomialMatrix& want) {
    if (!(got == want)) {
      report.ok = false;
      report.failed.push_back(r);
    }
  };
  expect(QuaternionRelation::i_squared, mat_mul(i, i), minus_one);
  expect(QuaternionRelation::j_squared, mat_mul(j, j), minus_one);
  expect(QuaternionRelation::k_squared, mat_mul(k, k), minus_one);
  expect(QuaternionRelation::ijk, report.ijk, minus_one);
  expect(QuaternionRelation::anti_ij, anticommutator(i, j), zero);
  expect(QuaternionRelation::anti_ik, anticommutator(i, k), zero);
  expect(QuaternionRelation::anti_jk, anticommutator(j, k), zero);
  return report;
}

inline QuaternionReport check_quaternion(const AdjacencyMatrixSet& set) {
  if (set.matrices.size() != 3) throw Error(ErrorKind::input, "quaternion check needs exactly three colors");
  return check_quaternion(set[1], set[2], set[3]);
}

}  // namespace adinkra
