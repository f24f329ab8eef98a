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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pbij/partial_bijection.hpp"
#include "pbij/set_descriptor.hpp"
#include "pbij/sym_element.hpp"

namespace pbij {

/// Square matrix of naturals, row-major by block index.
using Matrix = std::vector<std::vector<std::size_t>>;

/// Pairwise |B_a ∩ B_b|, diagonal included (infinite there for infinite blocks).
std::vector<std::vector<Cardinality>> intersection_matrix(std::span<const SetDescriptor> blocks);

/// A finite, indexed, almost disjoint family of infinite blocks.
class BlockFamily {
 public:
  /// Throws ContractViolation for an empty list or a finite block and
  /// NotAlmostDisjoint when two blocks meet in an infinite set.
  static BlockFamily create(std::vector<SetDescriptor> blocks, std::string name = {});

  const std::string& name() const { return name_; }
  std::size_t size() const { return blocks_.size(); }
  const SetDescriptor& block(std::size_t i) const { return blocks_.at(i); }
  const std::vector<SetDescriptor>& blocks() const { return blocks_; }

  /// B_i ∩ B_j for i ≠ j (a finite descriptor).
  const SetDescriptor& intersection(std::size_t i, std::size_t j) const;
  /// |B_i ∩ B_j|; only meaningful for i ≠ j, zero on the diagonal.
  const Matrix& weights() const { return weights_; }
  std::size_t weight(std::size_t i, std::size_t j) const { return weights_.at(i).at(j); }
  /// Largest off-diagonal intersection, 0 for a single block.
  std::size_t max_intersection() const;
  /// n when every off-diagonal intersection has exactly n points.
  std::optional<std::size_t> uniform_n() const;

 private:
  std::string name_;
  std::vector<SetDescriptor> blocks_;
  std::vector<std::vector<SetDescriptor>> meets_;
  Matrix weights_;
};

/// P_{i,j}: the largest m admitting an m-chain from B_i to B_j.
Matrix p_matrix(const BlockFamily& family);
/// The same computed from off-diagonal weights alone (the diagonal is ignored).
Matrix p_matrix_from_weights(const Matrix& weights);
/// The same by enumerating every simple path and every simple closed chain.
/// Limited to kMaxPathBlocks blocks.
Matrix p_matrix_by_paths(const Matrix& weights);
inline constexpr std::size_t kMaxPathBlocks = 10;

/// An m-chain i, k_1, ..., k_q, j. A direct pair i ≠ j has no interior.
struct ChainCertificate {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<std::size_t> interior;
  std::size_t m = 0;

  /// `B0 -> B2 -> B1 (m=1)`
  std::string to_string() const;
  friend bool operator==(const ChainCertificate&, const ChainCertificate&) = default;
};

/// Shortest m-chain, ties broken by lexicographic interior; absent when no
/// chain exists. Search is exhaustive over the weight graph.
std::optional<ChainCertificate> m_chain(const BlockFamily& family, std::size_t i, std::size_t j, std::size_t m);
/// Checks the defining inequalities, including k_1 ≠ i when i = j.
bool is_valid_chain(const ChainCertificate& chain, const Matrix& weights);

/// Outcome of membership in a stratified semigroup.
struct Membership {
  bool member = false;
  Stratum stratum;
};

/// A union of block groups, finite strata I_k(B_i, B_j) with k ≤ bound(i, j),
/// and optionally 1_∅.
class StratifiedSemigroup {
 public:
  /// The inverse semigroup generated by the block groups: bound = P, and 1_∅
  /// when the family has at least two blocks.
  static StratifiedSemigroup generated(const BlockFamily& family);
  /// ⋃ S_∞(B_i) ∪ ⋃_{k ≤ n} I_k(B_i, B_j).
  static StratifiedSemigroup displayed(const BlockFamily& family, std::size_t n);

  const BlockFamily& family() const { return family_; }
  std::size_t bound(std::size_t i, std::size_t j) const { return bounds_.at(i).at(j); }
  const Matrix& bounds() const { return bounds_; }
  bool contains_empty() const { return contains_empty_; }

  /// For finite maps the least (i, j) whose bound admits |dom f|.
  Membership membership(const SymElement& f) const;
  bool contains(const SymElement& f) const { return membership(f).member; }

 private:
  StratifiedSemigroup(BlockFamily family, Matrix bounds, bool contains_empty)
      : family_(std::move(family)), bounds_(std::move(bounds)), contains_empty_(contains_empty) {}

  BlockFamily family_;
  Matrix bounds_;
  bool contains_empty_;
};

/// One factor of a factorization into block generators.
struct Factor {
  enum class Role { BlockPermutation, BlockIdentity };

  SymElement element;
  Role role = Role::BlockPermutation;
  std::size_t block = 0;

  /// Block identities are derived generators: 1_B = g⁻¹ ∘ g for g ∈ S_∞(B).
  bool derived() const { return role == Role::BlockIdentity; }
};

struct Factorization {
  /// Written order: factors[0] is applied last.
  std::vector<Factor> factors;
  /// Blocks visited, in order of application.
  std::vector<std::size_t> walk;
};

/// Factors f, a member of the generated semigroup, into finitely supported
/// block permutations and block identities. Throws NotInSemigroup otherwise.
Factorization factorize(const SymElement& f, const BlockFamily& family);
/// Composes the factors right to left.
SymElement recompose(const Factorization& factorization);

struct Prop22Violation {
  std::size_t i = 0;
  std::size_t j = 0;
  SymElement f;  ///< 1_{B_j}, a member of S_∞(B_j)
  SymElement g;  ///< 1_{B_i}, a member of S_∞(B_i)
  SymElement composite;
  PartialBijection composite_window{1};
  Stratum stratum;
};

struct Prop22Verdict {
  std::size_t n = 0;
  std::size_t window = 0;
  bool closed = false;
  std::optional<Prop22Violation> violation;
  /// Size of the windowed union and of the generating set used to certify it.
  std::size_t elements = 0;
  std::size_t generators = 0;
  std::size_t products = 0;
};

/// Decides whether ⋃ S_∞(B_i) ∪ ⋃_{k ≤ n} I_k(B_i, B_j) is closed under
/// composition. On a violation returns the escaping pair; otherwise certifies
/// closure of the windowed union. Throws WindowTooSmall when an intersection
/// reaches past the window, UnsupportedConfiguration when the windowed union
/// exceeds `max_elements`.
Prop22Verdict check_prop22(const BlockFamily& family, std::size_t n, std::size_t window,
                           std::size_t max_elements = 2'000'000);

}  // namespace pbij
