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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbij/basic_open.hpp"
#include "pbij/block_family.hpp"
#include "pbij/partial_bijection.hpp"
#include "pbij/random.hpp"
#include "pbij/set_descriptor.hpp"
#include "pbij/sym_element.hpp"

namespace pbij {

/// The infinite family B_n = {0} ∪ { x : x ≡ 2^n (mod 2^{n+1}) }.
///
/// The C_n = B_n ∖ {0} partition ℕ ∖ {0}, so any two blocks meet in {0}.
/// Indices are limited by the descriptor modulus bound.
class TwoAdicFamily {
 public:
  static constexpr std::size_t kMaxIndex = 20;

  /// Throws UnsupportedConfiguration beyond kMaxIndex.
  SetDescriptor block(std::size_t n) const;
  /// The block containing x ≠ 0: the 2-adic valuation of x.
  std::size_t index_of(Point x) const;
  /// B_n ∖ {0} has no member below 2^n.
  static Point least_private_point(std::size_t n) { return Point{1} << n; }
  /// Number of blocks with a private point below `window`.
  std::size_t blocks_meeting(Point window) const;
  /// B_0, ..., B_{count-1} as a finite family.
  BlockFamily prefix(std::size_t count) const;
};

/// A semigroup with decidable membership used by the isolation probes.
///
/// Pettis: ⋃ S_∞(B_i) ∪ ⋃_{k ≤ n} I_k(B_i, B_j) over a finite family with all
/// intersections of size at most n. Unpunto: ⋃ S_∞(B_n) ∪ I_1(ℕ) ∪ {1_∅} over
/// the two-adic family.
class ProbeSemigroup {
 public:
  enum class Kind { Pettis, Unpunto };

  /// Throws UnsupportedFamily when some |B_i ∩ B_j| exceeds n.
  static ProbeSemigroup pettis(BlockFamily family, std::size_t n);
  static ProbeSemigroup unpunto();

  Kind kind() const { return kind_; }
  std::size_t bound() const { return n_; }
  const std::optional<BlockFamily>& family() const { return family_; }

  bool contains(const SymElement& f) const;
  /// Index of the block f permutes, when f lies in a group S_∞(B).
  std::optional<std::size_t> group_block(const SymElement& f) const;
  SetDescriptor block(std::size_t i) const;

  std::string to_string() const;

 private:
  Kind kind_ = Kind::Pettis;
  std::size_t n_ = 0;
  std::optional<BlockFamily> family_;
};

/// A sequence of elements indexed by ℕ.
///
///   BlockIdentities      1_{B_l} over the two-adic family
///   SingletonIdentities  1_{{l}}
///   GrowingExtensions    base ∪ {(n_l, m_l)}, n_l the l-th point of dom_pool ∖ dom(base),
///                        m_l the l-th point of im_pool ∖ im(base)
///   GroupNeighbors       base ∪ the swap of a_l = p_{2l}, b_l = p_{2l+1}, where p lists
///                        dom_pool ∖ support(base); base permutes the block dom_pool
struct SequenceSchema {
  enum class Kind { BlockIdentities, SingletonIdentities, GrowingExtensions, GroupNeighbors };

  Kind kind = Kind::SingletonIdentities;
  SymElement base;
  SetDescriptor dom_pool;
  SetDescriptor im_pool;

  static SequenceSchema block_identities() { return {Kind::BlockIdentities, {}, {}, {}}; }
  static SequenceSchema singleton_identities() { return {Kind::SingletonIdentities, {}, {}, {}}; }
  /// Throws ContractViolation unless both fresh pools are infinite.
  static SequenceSchema growing_extensions(SymElement base, SetDescriptor dom_pool, SetDescriptor im_pool);
  /// Throws ContractViolation unless base permutes `block` with finite support.
  static SequenceSchema group_neighbors(SymElement base, SetDescriptor block);

  SymElement element(std::size_t l) const;
  std::string to_string() const;
};

const char* to_string(SequenceSchema::Kind kind);

/// How the l-th elements behave at x for all l ≥ n0.
struct EventualBehavior {
  std::size_t n0 = 0;
  std::optional<Point> value;  ///< nullopt: x ∉ dom
  std::string reason;
};

/// Exact tail analysis of a schema at x.
EventualBehavior eventual_behavior(const SequenceSchema& seq, Point x);

struct PointCertificate {
  Point x = 0;
  int clause = 1;  ///< 1: x ∈ dom f_l and f_l(x) = f(x); 2: x ∉ dom f_l
  std::size_t n0 = 0;
  std::string reason;
};

struct ConvergenceResult {
  bool converges = false;
  std::size_t horizon = 0;
  std::vector<PointCertificate> certificates;
  /// First failing point and the clause it fails.
  std::optional<PointCertificate> counterexample;
  std::string detail;
};

/// Checks, for every x below `horizon`, the pointwise clause that decides
/// convergence of the schema to `limit`. Each tail claim is also replayed on
/// the concrete elements n0, ..., n0 + replay - 1.
ConvergenceResult check_convergence(const SequenceSchema& seq, const SymElement& limit, std::size_t horizon,
                                    std::size_t replay = 8);

/// One exclusion step of an isolation proof.
struct ProofStep {
  std::string claim;
  bool holds = false;
};

struct IsolationResult {
  enum class Verdict { Isolated, NotIsolated, Unknown };

  Verdict verdict = Verdict::Unknown;
  SymElement element;
  /// Isolated: V with V ∩ S = {element}.
  std::optional<BasicOpen> open;
  std::vector<ProofStep> proof;
  /// NotIsolated: a sequence of other members converging to element.
  std::optional<SequenceSchema> sequence;
  std::optional<ConvergenceResult> convergence;
  std::string reason;

  bool certified() const;
};

const char* to_string(IsolationResult::Verdict verdict);

/// Certifies isolation of f in s, or exhibits an approximating sequence.
/// Throws NotInSemigroup when f ∉ s.
IsolationResult isolated_certificate(const SymElement& f, const ProbeSemigroup& s);

/// Rechecks the case analysis for V ∩ s = {f}.
std::vector<ProofStep> prove_singleton(const BasicOpen& v, const SymElement& f, const ProbeSemigroup& s);

/// A member of the windowed structural set: a finite map, or a permutation
/// of a block's window points (block = nullopt for the two-adic blocks that
/// meet the window in {0} only).
struct WindowedMember {
  bool group = false;
  std::optional<std::size_t> block;
  PartialBijection projection{0};

  std::string to_string() const;
};

struct SingletonSearch {
  std::size_t window = 0;
  std::vector<WindowedMember> members;  ///< members of V found, at most two
  bool singleton = false;
};

/// Searches the members of s supported below `window` for elements of V.
/// The search stops after two members. Throws WindowTooSmall when V or f
/// mentions a point at or above the window.
SingletonSearch verify_singleton(const BasicOpen& v, const SymElement& f, const ProbeSemigroup& s,
                                 std::size_t window);

/// Random basic opens containing `target`, by rejection.
BasicOpen random_open_containing(Rng& rng, const SymElement& target, const RandomOpenLimits& limits = {});

struct PettisTrial {
  BasicOpen open;
  SymElement witness;
  std::size_t block = 0;
  std::vector<std::string> trace;
  bool ok = false;
};

struct PettisWitnessReport {
  SymElement a;
  SymElement product;  ///< a⁻¹ ∘ a
  bool product_is_u0 = false;
  std::vector<PettisTrial> trials;

  bool ok() const;
};

/// A member of V ∩ S other than 1_{{0}}, for an open V around 1_{{0}} in
/// the unpunto semigroup: 1_{B_n} for the least n whose block avoids every
/// forbidden point.
PettisTrial pettis_witness_for(const BasicOpen& v);

/// A = {u_1⁻¹}: A⁻¹∘A = {1_{{0}}}, and every basic open around 1_{{0}} holds
/// another member of S, namely a block identity 1_{B_n}.
PettisWitnessReport pettis_witness_unpunto(std::size_t trials, std::uint64_t seed);

struct InverseCheckEntry {
  SymElement x;
  SymElement product;  ///< x⁻¹ ∘ x
  IsolationResult x_result;
  IsolationResult product_result;
  bool skipped = false;  ///< x itself is not certified isolated
  bool ok = false;
};

struct InverseCheckReport {
  std::vector<InverseCheckEntry> entries;
  bool ok() const;
};

/// For each certified-isolated x, certifies that x⁻¹∘x is isolated too.
InverseCheckReport isolated_inverse_check(const std::vector<SymElement>& points, const ProbeSemigroup& s);

}  // namespace pbij
