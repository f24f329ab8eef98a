// Copyright 2026 The pbij Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

// Seeded generators and small oracles shared by the test binaries.

#include <algorithm>
#include <limits>
#include <ostream>
#include <vector>

#include "pbij/block_family.hpp"
#include "pbij/partial_bijection.hpp"
#include "pbij/random.hpp"
#include "pbij/sampling.hpp"
#include "pbij/set_descriptor.hpp"
#include "pbij/sym_element.hpp"

namespace pbij {

inline void PrintTo(const PartialBijection& f, std::ostream* os) { *os << f.to_string(); }
inline void PrintTo(const SetDescriptor& d, std::ostream* os) { *os << d.to_string(); }
inline void PrintTo(const SymElement& f, std::ostream* os) { *os << f.to_string(); }
inline void PrintTo(const Stratum& s, std::ostream* os) { *os << s.to_string(); }

}  // namespace pbij

namespace pbij::testing {

inline std::vector<Point> iota_points(Point n) {
  std::vector<Point> v(n);
  for (Point i = 0; i < n; ++i) v[i] = i;
  return v;
}

inline PartialBijection random_pbij(Rng& rng, std::size_t window) {
  auto src = iota_points(window);
  auto dst = iota_points(window);
  rng.shuffle(src);
  rng.shuffle(dst);
  std::size_t k = rng.below(window + 1);
  std::vector<Pair> pairs;
  for (std::size_t a = 0; a < k; ++a) pairs.emplace_back(src[a], dst[a]);
  return PartialBijection::from_pairs(window, pairs);
}

using pbij::random_descriptor;

inline SymElement random_sym(Rng& rng, Point window) { return random_sym_element(rng, window); }

/// Pointwise composite straight from the definition, as a pair list.
inline std::vector<Pair> compose_by_definition(const PartialBijection& f, const PartialBijection& g) {
  std::vector<Pair> out;
  for (const auto& [x, y] : g.pairs()) {
    if (auto z = f.apply(y)) out.emplace_back(x, *z);
  }
  return out;
}

/// P_{i,j} by literal enumeration of every chain (k_1, ..., k_q) with
/// q <= max_len, repetitions allowed, |B_a ∩ B_a| counted as infinite.
inline Matrix p_matrix_by_chains(const Matrix& w, std::size_t max_len) {
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  const std::size_t n = w.size();
  auto weight = [&](std::size_t a, std::size_t b) { return a == b ? kInf : w[a][b]; };
  Matrix p(n, std::vector<std::size_t>(n, 0));
  std::vector<std::size_t> chain;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t best = 0;
      auto rec = [&](auto& self, std::size_t from, std::size_t level) -> void {
        if (!chain.empty()) best = std::max(best, std::min(level, weight(from, j)));
        if (chain.size() == max_len) return;
        for (std::size_t k = 0; k < n; ++k) {
          if (chain.empty() && i == j && k == i) continue;
          chain.push_back(k);
          self(self, k, std::min(level, weight(from, k)));
          chain.pop_back();
        }
      };
      rec(rec, i, kInf);
      p[i][j] = best;
    }
  }
  return p;
}

/// Blocks (a+1) mod (n+1) plus, for each pair, its own shared points drawn
/// from the residue class 0 mod (n+1).
inline BlockFamily family_with_weights(const Matrix& w) {
  const Point n = w.size();
  const Point m = n + 1;
  std::vector<std::vector<Point>> extra(n);
  Point next = 0;
  for (Point a = 0; a < n; ++a) {
    for (Point b = a + 1; b < n; ++b) {
      for (std::size_t t = 0; t < w[a][b]; ++t) {
        extra[a].push_back(next);
        extra[b].push_back(next);
        next += m;
      }
    }
  }
  std::vector<SetDescriptor> blocks;
  for (Point a = 0; a < n; ++a) blocks.push_back(SetDescriptor::from_parts(extra[a], m, std::vector<Point>{a + 1}));
  return BlockFamily::create(blocks);
}

inline Matrix random_weights(Rng& rng, std::size_t n, std::size_t max_weight) {
  Matrix w(n, std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) w[a][b] = w[b][a] = rng.below(max_weight + 1);
  }
  return w;
}

inline BlockFamily disjoint_family() {
  std::vector<SetDescriptor> b;
  for (Point r = 0; r < 3; ++r) b.push_back(SetDescriptor::residue_class(r, 3));
  return BlockFamily::create(b, "disjoint");
}

/// {0 mod 3, {0} ∪ 1 mod 3, {0} ∪ 2 mod 3}: every two blocks meet in {0}.
inline BlockFamily one_point_family() {
  std::vector<Point> zero{0};
  std::vector<SetDescriptor> b{SetDescriptor::residue_class(0, 3)};
  for (Point r = 1; r < 3; ++r) b.push_back(SetDescriptor::from_parts(zero, 3, std::vector<Point>{r}));
  return BlockFamily::create(b, "one-point");
}

/// {0, 4} ∪ r mod 4 for r = 1, 2, 3: every two blocks meet in {0, 4}.
inline BlockFamily two_point_family() {
  std::vector<Point> shared{0, 4};
  std::vector<SetDescriptor> b;
  for (Point r = 1; r < 4; ++r) b.push_back(SetDescriptor::from_parts(shared, 4, std::vector<Point>{r}));
  return BlockFamily::create(b, "two-point");
}

}  // namespace pbij::testing
