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


#include "pbij/sampling.hpp"

#include <algorithm>
#include <vector>

namespace pbij {

SetDescriptor random_descriptor(Rng& rng, Point max_modulus, Point span) {
  Point m = rng.between(1, max_modulus);
  std::vector<Point> residues, add, remove;
  for (Point r = 0; r < m; ++r) {
    if (rng.below(3) == 0) residues.push_back(r);
  }
  for (auto a = rng.below(4); a > 0; --a) add.push_back(rng.below(span));
  for (auto a = rng.below(4); a > 0; --a) remove.push_back(rng.below(span));
  return SetDescriptor::from_parts(add, m, residues, remove);
}

SymElement random_sym_element(Rng& rng, Point window) {
  SetDescriptor fixed;
  switch (rng.below(3)) {
    case 0: break;
    case 1: {
      std::vector<Point> pts;
      for (auto a = rng.below(5); a > 0; --a) pts.push_back(rng.below(window));
      fixed = SetDescriptor::finite(pts);
      break;
    }
    default: fixed = random_descriptor(rng, 6, window); break;
  }
  std::vector<Point> free;
  for (Point x = 0; x < window; ++x) {
    if (!fixed.contains(x)) free.push_back(x);
  }
  auto src = free;
  auto dst = free;
  rng.shuffle(src);
  rng.shuffle(dst);
  std::size_t k = free.empty() ? 0 : rng.below(std::min<std::size_t>(free.size(), 5) + 1);
  std::vector<Pair> pairs;
  for (std::size_t a = 0; a < k; ++a) pairs.emplace_back(src[a], dst[a]);
  return SymElement::from_parts(fixed, pairs);
}

}  // namespace pbij
