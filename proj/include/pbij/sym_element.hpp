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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbij/partial_bijection.hpp"
#include "pbij/set_descriptor.hpp"

namespace pbij {

/// How a symbolic element presents itself.
enum class SymKind {
  FinMap,             ///< finite domain (includes 1_∅ and finite partial identities)
  PartialIdentity,    ///< 1_D for an infinite descriptor D
  BlockPerm,          ///< finitely supported permutation of an infinite block
  IdentityExtension,  ///< 1_D ∪ finite pairs with dom ≠ im
};

const char* to_string(SymKind kind);

/// A partial bijection of ℕ that fixes an eventually periodic set and moves
/// finitely many points:
///
///     f = 1_fixed ∪ moved
///
/// Canonical form: `moved` has no fixed points, is sorted by source, and its
/// sources and targets all lie outside `fixed`. Every element the
/// constructions need (finite maps, finitely supported block permutations,
/// partial identities, 1_B ∪ {(x_i, y_i)}) has this shape, and the shape is
/// closed under composition and inverse.
class SymElement {
 public:
  /// 1_∅
  SymElement() = default;

  static SymElement empty() { return {}; }
  /// Finite map; throws ContractViolation unless injective both ways.
  static SymElement fin(std::span<const Pair> pairs);
  static SymElement fin(std::initializer_list<Pair> pairs) {
    return fin(std::span<const Pair>(pairs.begin(), pairs.size()));
  }
  static SymElement identity(const SetDescriptor& set);
  /// The permutation of `block` equal to `perm` on its support and the
  /// identity elsewhere. `perm` must biject its support inside the block.
  static SymElement block_perm(const SetDescriptor& block, std::span<const Pair> perm);
  static SymElement block_perm(const SetDescriptor& block, std::initializer_list<Pair> perm) {
    return block_perm(block, std::span<const Pair>(perm.begin(), perm.size()));
  }
  /// 1_fixed ∪ pairs; pairs must avoid `fixed` on both sides.
  static SymElement from_parts(const SetDescriptor& fixed, std::span<const Pair> pairs);
  /// Lift of a windowed element (a finite map).
  static SymElement from_window(const PartialBijection& f);

  SymKind kind() const;
  SetDescriptor domain() const;
  SetDescriptor image() const;
  bool has_finite_domain() const { return fixed_.is_finite(); }
  /// |dom(f)|, requires a finite domain.
  std::size_t domain_size() const;
  bool is_empty() const { return fixed_.is_empty() && moved_.empty(); }
  bool is_idempotent() const { return moved_.empty(); }

  std::optional<Point> apply(Point x) const;
  Point eval(Point x) const;

  const SetDescriptor& fixed() const { return fixed_; }
  const std::vector<Pair>& moved() const { return moved_; }
  /// Every point the element moves, as sources or targets, ascending.
  std::vector<Point> support() const;
  /// All pairs of a finite-domain element, fixed points included.
  std::vector<Pair> finite_pairs() const;

  /// `empty`, `fin(1->0)`, `id(<set>)`, `perm(<set>; 1->4, 4->1)`, `ext(<set>; 0->1)`.
  std::string to_string() const;
  /// Accepts to_string() output; a set may also be written `B<k>` for blocks[k].
  static SymElement parse(std::string_view text, std::span<const SetDescriptor> blocks = {});

  friend bool operator==(const SymElement&, const SymElement&) = default;

 private:
  SetDescriptor fixed_;
  std::vector<Pair> moved_;
};

/// f ∘ g, exact.
SymElement sym_compose(const SymElement& f, const SymElement& g);
SymElement sym_inverse(const SymElement& f);

/// Restriction to points below `window` whose images are below `window`.
/// Throws WindowTooSmall if a moved point, or a point of a finite domain,
/// is not below the window.
PartialBijection project_to_window(const SymElement& f, std::size_t window);

/// Position of an element among the strata S_∞(B_i), I_k(B_i, B_j).
struct Stratum {
  enum class Kind { Group, Finite, Empty, Outside };

  Kind kind = Kind::Outside;
  std::size_t k = 0;  ///< |dom| for Finite and Empty
  std::size_t i = 0;  ///< block of the domain (Group: the block)
  std::size_t j = 0;  ///< block of the image

  static Stratum group(std::size_t i) { return {Kind::Group, 0, i, i}; }
  static Stratum finite(std::size_t k, std::size_t i, std::size_t j) { return {Kind::Finite, k, i, j}; }
  static Stratum empty() { return {Kind::Empty, 0, 0, 0}; }
  static Stratum outside() { return {}; }

  /// `S_inf(B2)`, `I_1(B0,B3)`, `I_0`, `outside`.
  std::string to_string() const;

  friend bool operator==(const Stratum&, const Stratum&) = default;
};

/// Least stratum containing f: for finite maps the least (i, j) with
/// dom ⊆ B_i and im ⊆ B_j; 1_∅ is I_0.
Stratum classify(const SymElement& f, std::span<const SetDescriptor> blocks);

/// Finitely supported permutation mapping each xs[a] to ys[a], extended to a
/// bijection of xs ∪ ys. Both lists must be injective.
std::vector<Pair> complete_to_permutation(std::span<const Point> xs, std::span<const Point> ys);

}  // namespace pbij
