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

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pbij/block_family.hpp"
#include "pbij/partial_bijection.hpp"
#include "pbij/windowed.hpp"

namespace pbij {

struct ClosureResult {
  /// Ascending.
  std::vector<PartialBijection> elements;
  /// depth[a] is the BFS generation in which elements[a] first appeared;
  /// generators and their inverses have depth 0.
  std::vector<std::size_t> depth;
  /// New elements found per generation, starting with generation 0.
  std::vector<std::size_t> frontier_sizes;
  /// False when the element budget ran out before the fixpoint.
  bool complete = false;

  bool contains(const PartialBijection& f) const;
  /// Generation of f; throws ContractViolation if f is absent.
  std::size_t depth_of(const PartialBijection& f) const;
};

/// Least set containing the generators and closed under compose and inverse.
/// Stops with complete = false once more than `max_elements` are known.
ClosureResult close(std::span<const PartialBijection> generators, std::size_t max_elements);

/// Closure under compose and inverse, checked over every pair.
bool is_closed(std::span<const PartialBijection> elements);

/// Generators of Sym(B_i ∩ [0, W)) for every block.
std::vector<PartialBijection> block_group_generators(const BlockFamily& family, std::size_t window);

/// Position of a windowed element among Sym(A_i), I_k(A_i, A_j), I_0 and
/// nothing, with A_i = B_i ∩ [0, W); least (i, j) wins.
Stratum classify_window(const PartialBijection& f, const std::vector<std::vector<Point>>& blocks);

/// Element counts per stratum label (Stratum::to_string()).
std::map<std::string, std::size_t> stratum_counts(std::span<const PartialBijection> elements,
                                                  const std::vector<std::vector<Point>>& blocks);

struct StructuralDiff {
  std::size_t closure_size = 0;
  std::size_t structural_size = 0;
  std::vector<PartialBijection> closure_only;
  std::vector<PartialBijection> structural_only;

  bool empty() const { return closure_only.empty() && structural_only.empty(); }
};

/// Compares a closure with the windowed generated semigroup of the family.
/// Throws HeadroomViolation when the window leaves too little room, and
/// ContractViolation when the closure is incomplete or uses another window.
StructuralDiff compare_with_structural(const ClosureResult& result, const BlockFamily& family, std::size_t window);

}  // namespace pbij
