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

// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "adinkra/adinkra.hpp"

namespace {

using namespace adinkra;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(const std::string& id, bool ok, const std::string& detail) {
  std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  if (!ok) ++failures;
}

template <typename Fn>
double millis(Fn&& fn) {
  const auto start = Clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string ms(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x << " ms";
  return os.str();
}

bool throws_kind(ErrorKind kind, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

void quaternion_algebra() {
  const auto i = MonomialMatrix::from_ints(4, {0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0});
  const auto j = MonomialMatrix::from_ints(4, {0, 0, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 0, 0});
  const auto k = MonomialMatrix::from_ints(4, {0, 0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0, -1, 0, 0, 0});
  const auto rejected_ijk = MonomialMatrix::from_ints(4, {-1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1});
  QuaternionReport good, rejected;
  const double t = millis([&] {
    good = check_quaternion(i, j, k);
    rejected = quaternion::check(BitVector{1, 1, 1, 1, 1, 1});
  });
  const bool ok = good.ok && !rejected.ok && rejected.ijk == rejected_ijk && t < 1.0;
  report("1 quaternion algebra", ok,
         std::string("i^2=j^2=k^2=ijk=-1 and anticommutators zero: ") + (good.ok ? "yes" : "no") +
             "; rejected variant ijk=diag(-1,1,-1,1): " + (rejected.ijk == rejected_ijk ? "yes" : "no") + "; " + ms(t) +
             " (< 1 ms)");
}

void dof_counts() {
  struct Case {
    int n;
    std::vector<std::string> gens;
    std::uint64_t expected;
  };
  const std::vector<Case> cases = {{2, {}, 8}, {3, {}, 128}, {3, {"1111"}, 256}};
  bool ok = true;
  std::string detail;
  const double t = millis([&] {
    for (const Case& c : cases) {
      const int length = c.gens.empty() ? c.n : static_cast<int>(c.gens[0].size());
      const auto topo = build_chromotopology(c.n, BinaryCode::parse(length, c.gens));
      const std::uint64_t got = count_valid_dashings(topo);
      const bool match = got == c.expected && got == (std::uint64_t{1} << dashing_dof(topo.n(), topo.k()));
      ok = ok && match;
      detail += "(" + std::to_string(c.n) + "," + std::to_string(topo.k()) + ")=" + std::to_string(got) + " ";
    }
  });
  ok = ok && t < 10000.0;
  report("2 dof counts", ok, detail + "; " + ms(t) + " (< 10 s)");
}

struct Sample {
  Adinkra adinkra;
  Adinkra rebuilt;
};

std::vector<Sample> samples;

void baobab_roundtrip() {
  std::mt19937_64 rng(2024);
  int good = 0, total = 0;
  const double t = millis([&] {
    for (int n : {2, 3, 4}) {
      const auto topo = build_chromotopology(n);
      const auto slots = baobab_slots(topo).slots();
      for (int s = 0; s < 100; ++s) {
        BitVector bits(slots.size());
        for (Bit& b : bits) b = static_cast<Bit>(rng() & 1U);
        const Adinkra a{topo, reconstruct_dashing(topo, slots, bits).dashing, valise_heights(topo)};
        const Baobab b = extract_baobab(a);
        const DashingPropagation d = reconstruct_dashing(topo, b);
        const DirectionPropagation h = reconstruct_directions(topo, b.pinned);
        const Adinkra back{topo, d.dashing, h.heights};
        ++total;
        good += back == a;
        samples.push_back({a, back});
      }
    }
  });
  report("3 baobab roundtrip", good == total && t < 30000.0,
         std::to_string(good) + "/" + std::to_string(total) + " bit-exact at n=2,3,4; " + ms(t) + " (< 30 s)");
}

void garden_algebra() {
  const auto sq = build_chromotopology(2);
  const Adinkra square{sq, {Sign::dashed, Sign::undashed, Sign::undashed, Sign::undashed},
                    valise_heights(sq, Parity::fermion)};
  const AdjacencyMatrixSet g = adinkra_to_gamma(square);
  std::vector<std::size_t> pos(4);
  for (std::size_t p = 0; p < 4; ++p) pos[g.order[p]] = p;
  const std::size_t phi1 = pos[0], phi2 = pos[3], psi1 = pos[2], psi2 = pos[1];
  const Monomial one = Monomial::one(), minus_one{Gaussian{-1, 0}}, id{kI, 1}, minus_id{Gaussian{0, -1}, 1};
  int relations = 0;
  relations += g[1](phi2, psi1) == one;
  relations += g[1](phi1, psi2) == minus_one;
  relations += g[1](psi1, phi2) == id;
  relations += g[1](psi2, phi1) == minus_id;
  relations += g[2](phi1, psi1) == one;
  relations += g[2](phi2, psi2) == one;
  relations += g[2](psi2, phi2) == id;
  relations += g[2](psi1, phi1) == id;

  int passing = 0, flips = 0, flip_failures = 0;
  for (const Sample& s : samples) {
    passing += check_garden(adinkra_to_gamma(s.rebuilt)).ok;
    for (EdgeIndex e = 0; e < s.rebuilt.dashing.size(); ++e) {
      Adinkra bad = s.rebuilt;
      bad.dashing[e] = bad.dashing[e] == Sign::dashed ? Sign::undashed : Sign::dashed;
      ++flips;
      flip_failures += !check_garden(adinkra_to_gamma(bad, GammaCheck::allow_invalid_dashing)).ok;
    }
  }
  const bool ok = relations == 8 && passing == static_cast<int>(samples.size()) && flip_failures == flips;
  report("4 garden algebra", ok,
         std::to_string(relations) + "/8 transformation rules; check_garden passes " + std::to_string(passing) + "/" +
             std::to_string(samples.size()) + " rebuilt adinkras and fails " + std::to_string(flip_failures) + "/" +
             std::to_string(flips) + " single-bit flips");
}

void quaternion_uniqueness() {
  const auto search = quaternion::baobab_completions(quaternion::standard_baobab());
  report("5 quaternion uniqueness", search.valid.size() == 1 && search.valid[0] == quaternion::standard_bits(),
         std::to_string(search.valid.size()) + " valid completion(s) of " + std::to_string(search.candidates.size()) +
             " candidates");
}

void fec_distance() {
  const Family q = Family::quaternion();
  int distance = 0, singles = 0, detected = 0, uncorrectable = 0;
  const EdgeBitVector cw = encode({1, 1, 1}, q);
  const double t = millis([&] {
    distance = min_distance(q);
    for (std::size_t a = 0; a < 6; ++a) {
      EdgeBitVector bad = cw;
      bad.bits[a] ^= 1U;
      try {
        const Correction c = correct(bad, 1);
        singles += c.corrected == cw && c.flipped == std::vector<std::size_t>{a};
      } catch (const Error&) {
      }
      for (std::size_t b = a + 1; b < 6; ++b) {
        EdgeBitVector two = cw;
        two.bits[a] ^= 1U;
        two.bits[b] ^= 1U;
        detected += !syndrome(two).empty();
        uncorrectable += throws_kind(ErrorKind::uncorrectable, [&] { correct(two, 1); });
      }
    }
  });
  report("6 fec distance", distance == 3 && singles == 6 && detected == 15 && t < 1000.0,
         "min distance " + std::to_string(distance) + " over 64 assignments; " + std::to_string(singles) +
             "/6 single flips corrected; " + std::to_string(detected) + "/15 double flips detected; " + ms(t) +
             " (< 1 s)");
  report("6 fec distance (double flips uncorrectable at max_flips=1)", uncorrectable == 15,
         std::to_string(uncorrectable) + "/15 uncorrectable; the other " + std::to_string(15 - uncorrectable) +
             " lie one flip from a different codeword and are miscorrected, as any distance-3 decoder that "
             "corrects every single flip must");
}

void erasure_recovery() {
  const Family f = Family::garden(2);
  const Chromotopology& t = f.topology();
  const EdgeBitVector cw = encode({1, 1, 1}, f);
  int agree = 0;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<std::size_t> erased;
    std::vector<bool> keep(4, true);
    for (std::size_t e = 0; e < 4; ++e)
      if (mask >> e & 1) {
        erased.push_back(e);
        keep[e] = false;
      }
    std::vector<std::size_t> parent{0, 1, 2, 3};
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : find(parent[x]); };
    int parts = 4;
    for (EdgeIndex e = 0; e < 4; ++e)
      if (keep[e]) {
        const auto a = find(t.edge(e).u), b = find(t.edge(e).v);
        if (a != b) {
          parent[a] = b;
          --parts;
        }
      }
    const bool spanning = parts == 1;
    bool ok;
    if (spanning) {
      try {
        ok = fill_erasures(cw, erased) == cw;
      } catch (const Error&) {
        ok = false;
      }
    } else {
      ok = throws_kind(ErrorKind::insufficient, [&] { fill_erasures(cw, erased); });
    }
    agree += ok;
  }
  report("7 erasure recovery", agree == 16,
         std::to_string(agree) + "/16 erasure patterns behave as their complement's spanning status predicts");
}

void gate_tables() {
  int ndxor_ok = 0, dxor_ok = 0, dxor_errors = 0;
  for (Bit x : {0, 1})
    for (Bit y : {0, 1})
      for (Bit z : {0, 1}) {
        ndxor_ok += ndxor(x, y, z) == ((x ^ y ^ z) ? 0 : 1);
        if (x == y && y == z) dxor_errors += throws_kind(ErrorKind::contradiction, [&] { dxor(x, y, z); });
        else dxor_ok += dxor(x, y, z) == (x ^ y ^ z);
      }
  report("8 gate truth tables", ndxor_ok == 8 && dxor_ok == 6 && dxor_errors == 2,
         "NDXOR " + std::to_string(ndxor_ok) + "/8; DXOR " + std::to_string(dxor_ok) + "/6 legal inputs, " +
             std::to_string(dxor_errors) + "/2 rejected");
}

void direction_bounds() {
  bool ok = true;
  std::string detail;
  for (int n : {2, 3}) {
    const auto t = build_chromotopology(n);
    // n pins: one edge of each color along the path 0 -> 1 -> 3 -> ...
    std::vector<Pin> path;
    NodeIndex at = 0;
    for (Color c = 1; c <= n; ++c) {
      const NodeIndex next = t.neighbor(at, c);
      path.push_back({t.edge_at(at, c), next});
      at = next;
    }
    bool extended = false;
    try {
      extended = reconstruct_directions(t, path).heights == extended_heights(t);
    } catch (const Error&) {
    }
    // 2^(n-1) pins: the color-1 matching, climbing from bosons
    std::vector<Pin> matching;
    for (EdgeIndex e = 0; e < t.edge_count(); ++e)
      if (t.edge(e).color == 1)
        matching.push_back({e, t.parity(t.edge(e).u) == Parity::fermion ? t.edge(e).u : t.edge(e).v});
    bool valise = false;
    try {
      valise = matching.size() == (std::size_t{1} << (n - 1)) &&
               reconstruct_directions(t, matching).heights == valise_heights(t);
    } catch (const Error&) {
    }
    // leave two colors undirected on the fully-extended adinkra
    std::vector<Pin> partial;
    const auto ext = extended_heights(t);
    for (EdgeIndex e = 0; e < t.edge_count(); ++e)
      if (t.edge(e).color > 2) partial.push_back({e, ext[t.edge(e).u] > ext[t.edge(e).v] ? t.edge(e).u : t.edge(e).v});
    const bool insufficient = throws_kind(ErrorKind::insufficient, [&] { reconstruct_directions(t, partial); });
    ok = ok && extended && valise && insufficient;
    detail += "n=" + std::to_string(n) + ": " + std::to_string(path.size()) + " pins -> extended " +
              (extended ? "yes" : "no") + ", " + std::to_string(matching.size()) + " pins -> valise " +
              (valise ? "yes" : "no") + ", colors 1-2 undirected -> insufficient " + (insufficient ? "yes" : "no") +
              "; ";
  }
  report("9 direction bounds", ok, detail + "failing case taken on the fully-extended adinkra");
}

}  // namespace

int main() {
  quaternion_algebra();
  dof_counts();
  baobab_roundtrip();
  garden_algebra();
  quaternion_uniqueness();
  fec_distance();
  erasure_recovery();
  gate_tables();
  direction_bounds();
  std::printf("%s: %d failing\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
