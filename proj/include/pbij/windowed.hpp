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

// Finite truncations of block families to a window [0, W).

#include <cstddef>
#include <functional>
#include <span>
#include <unordered_set>
#include <vector>

#include "pbij/block_family.hpp"
#include "pbij/partial_bijection.hpp"

namespace pbij {

using ElementSet = std::unordered_set<PartialBijection, PartialBijectionHash>;

/// B_i ∩ [0, W) for every block.
std::vector<std::vector<Point>> windowed_blocks(const BlockFamily& family, std::size_t window);

/// Every injection of `k` points of `from` into `to`, as an element on the window.
void for_each_injection(std::size_t window, std::span<const Point> from, std::span<const Point> to, std::size_t k,
                        const std::function<void(const PartialBijection&)>& visit);

/// Sym(points) as elements with domain exactly `points`.
std::vector<PartialBijection> symmetric_group(std::span<const Point> points, std::size_t window);
/// A transposition and a full cycle generating Sym(points); the identity for one point.
std::vector<PartialBijection> group_generators(std::span<const Point> points, std::size_t window);

/// Throws WindowTooSmall unless every pairwise intersection lies below the window.
void require_intersections_inside(const BlockFamily& family, std::size_t window);

/// Throws HeadroomViolation unless every block keeps at least
/// 2·max_intersection + 2 points below the window (and intersections fit).
void require_headroom(const BlockFamily& family, std::size_t window);

/// The truncation of a stratified semigroup: Sym(A_i), I_k(A_i, A_j) for
/// k ≤ bound(i, j), and 1_∅ when present, where A_i = B_i ∩ [0, W).
class WindowedStructure {
 public:
  WindowedStructure(const StratifiedSemigroup& semigroup, std::size_t window);

  std::size_t window() const { return window_; }
  const std::vector<std::vector<Point>>& blocks() const { return blocks_; }
  bool contains(const PartialBijection& f) const;
  /// Upper bound on the number of elements, without enumerating.
  double estimated_size() const;
  /// All elements, ascending.
  std::vector<PartialBijection> enumerate() const;

 private:
  std::size_t window_;
  std::vector<std::vector<Point>> blocks_;
  std::vector<std::vector<bool>> member_;
  Matrix bounds_;
  bool contains_empty_;
};

}  // namespace pbij
