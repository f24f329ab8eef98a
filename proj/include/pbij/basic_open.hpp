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

#include <string>
#include <string_view>
#include <vector>

#include "pbij/partial_bijection.hpp"
#include "pbij/random.hpp"
#include "pbij/sym_element.hpp"

namespace pbij {

/// A basic open set of I(ℕ):
///
///     ⋂ v(x, y) ∩ ⋂ w₁(u) ∩ ⋂ w₂(z)
///
/// v(x, y): x ∈ dom f and f(x) = y. w₁(u): u ∉ dom f. w₂(z): z ∉ im f.
struct BasicOpen {
  std::vector<Pair> positive;
  std::vector<Point> forbid_dom;
  std::vector<Point> forbid_im;

  /// Sorted and deduplicated parts.
  static BasicOpen make(std::vector<Pair> positive, std::vector<Point> forbid_dom, std::vector<Point> forbid_im);

  /// Nonempty: positives injective both ways and clear of the forbidden points.
  bool consistent() const;
  /// Throws InvalidOpen naming the clash.
  void validate() const;

  /// Every point any constraint mentions, ascending.
  std::vector<Point> points() const;

  /// `v(1,0) & w1(2) & w2(3)`; `all` when unconstrained.
  std::string to_string() const;
  static BasicOpen parse(std::string_view text);

  friend bool operator==(const BasicOpen&, const BasicOpen&) = default;
};

bool open_contains(const BasicOpen& v, const SymElement& f);
bool open_contains(const BasicOpen& v, const PartialBijection& f);

struct RandomOpenLimits {
  std::size_t max_positive = 3;
  std::size_t max_forbid = 4;
  Point point_bound = 64;
};

/// A consistent basic open drawn by rejection.
BasicOpen random_basic_open(Rng& rng, const RandomOpenLimits& limits = {});

}  // namespace pbij
