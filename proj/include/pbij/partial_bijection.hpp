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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pbij {

/// A natural number.
using Point = std::uint64_t;
using Pair = std::pair<Point, Point>;

/// A finite partial bijection of the window [0, W).
///
/// Stored densely: `target_[x]` is the image of x, or kUndefined. The dense
/// table is the canonical form, so structural equality is equality of maps,
/// and the window is part of the value.
class PartialBijection {
 public:
  static constexpr std::uint32_t kUndefined = 0xFFFFFFFFu;

  /// The empty map 1_∅ on [0, window).
  explicit PartialBijection(std::size_t window);

  /// Throws ContractViolation unless the pairs are injective both ways and inside the window.
  static PartialBijection from_pairs(std::size_t window, std::span<const Pair> pairs);
  static PartialBijection from_pairs(std::size_t window, std::initializer_list<Pair> pairs) {
    return from_pairs(window, std::span<const Pair>(pairs.begin(), pairs.size()));
  }
  /// The partial identity 1_A.
  static PartialBijection identity(std::size_t window, std::span<const Point> points);

  std::size_t window() const { return target_.size(); }
  /// |dom(f)|
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  bool defined_at(Point x) const { return x < target_.size() && target_[x] != kUndefined; }
  std::optional<Point> apply(Point x) const;
  /// ev_x; throws OutOfDomain when x ∉ dom(f).
  Point eval(Point x) const;

  std::vector<Point> domain() const;
  std::vector<Point> image() const;
  /// Pairs in ascending source order.
  std::vector<Pair> pairs() const;

  bool is_idempotent() const;

  /// `{1->2, 3->4}@W`; `{}@W` for 1_∅.
  std::string to_string() const;
  static PartialBijection parse(std::string_view text);

  std::size_t hash() const;

  friend bool operator==(const PartialBijection&, const PartialBijection&) = default;
  friend std::strong_ordering operator<=>(const PartialBijection& a, const PartialBijection& b);

  const std::vector<std::uint32_t>& table() const { return target_; }

  friend PartialBijection compose(const PartialBijection& f, const PartialBijection& g);
  friend PartialBijection inverse(const PartialBijection& f);

 private:
  std::vector<std::uint32_t> target_;
};

/// f ∘ g: apply g first. dom(f∘g) = g⁻¹(dom f ∩ im g).
PartialBijection compose(const PartialBijection& f, const PartialBijection& g);
PartialBijection inverse(const PartialBijection& f);
bool is_idempotent(const PartialBijection& f);

/// dom, im and the evaluation map of an element.
struct Projections {
  std::vector<Point> domain;
  std::vector<Point> image;
  PartialBijection evaluation;

  /// Throws OutOfDomain outside the domain, mirroring ev_x : D_x → X.
  Point ev(Point x) const { return evaluation.eval(x); }
};

Projections projections(const PartialBijection& f);

/// Every member is a partial identity.
struct IdempotentSet {
  std::vector<PartialBijection> members;
};

/// E(S) for a finite set S.
IdempotentSet idempotents(std::span<const PartialBijection> elements);

struct PartialBijectionHash {
  std::size_t operator()(const PartialBijection& f) const { return f.hash(); }
};

}  // namespace pbij
