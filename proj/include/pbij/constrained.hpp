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
#include <span>
#include <string>
#include <vector>

#include "pbij/basic_open.hpp"
#include "pbij/partial_bijection.hpp"
#include "pbij/set_descriptor.hpp"
#include "pbij/sym_element.hpp"

namespace pbij {

/// An ideal on ℕ with decidable membership over descriptors: either the
/// empty collection, or { X : X ∖ base is finite } (Fin when base = ∅).
class IdealModel {
 public:
  enum class Kind { Empty, AlmostSubset };

  static IdealModel empty() { return IdealModel(Kind::Empty, {}); }
  static IdealModel fin() { return IdealModel(Kind::AlmostSubset, {}); }
  /// Subsets of `base` up to finitely many points.
  static IdealModel almost_subset(SetDescriptor base) { return IdealModel(Kind::AlmostSubset, std::move(base)); }

  Kind kind() const { return kind_; }
  const SetDescriptor& base() const { return base_; }
  bool contains(const SetDescriptor& x) const;
  /// ℕ is not a member.
  bool proper() const;
  bool contains_all_finite() const { return kind_ == Kind::AlmostSubset; }
  /// The least ideal with all finite sets containing this one and A.
  IdealModel generated_with(const SetDescriptor& a) const;

  /// `empty`, `fin`, or `almost-subset(<descriptor>)`.
  std::string to_string() const;
  /// Accepts `empty`, `fin`, or a descriptor (read as almost-subset of it).
  static IdealModel parse(std::string_view text);

 private:
  IdealModel(Kind kind, SetDescriptor base) : kind_(kind), base_(std::move(base)) {}
  Kind kind_;
  SetDescriptor base_;
};

/// A collection C of subsets of ℕ with decidable membership.
class CollectionModel {
 public:
  enum class Kind { AtMostN, Schreier, InitialSegments, IdealMembers, CoIdeal, All };

  /// [ℕ]^{≤n}
  static CollectionModel at_most(std::size_t n) { return CollectionModel(Kind::AtMostN, n, IdealModel::fin()); }
  /// { F finite : |F| ≤ min F + 1 }, with ∅ included.
  static CollectionModel schreier() { return CollectionModel(Kind::Schreier, 0, IdealModel::fin()); }
  /// { {0, ..., k} : k ∈ ℕ }
  static CollectionModel initial_segments() { return CollectionModel(Kind::InitialSegments, 0, IdealModel::fin()); }
  static CollectionModel ideal_members(IdealModel i) { return CollectionModel(Kind::IdealMembers, 0, std::move(i)); }
  /// I⁺: every set outside the ideal.
  static CollectionModel co_ideal(IdealModel i) { return CollectionModel(Kind::CoIdeal, 0, std::move(i)); }
  static CollectionModel all() { return CollectionModel(Kind::All, 0, IdealModel::fin()); }

  Kind kind() const { return kind_; }
  bool contains(const SetDescriptor& x) const;
  bool contains(std::span<const Point> finite_set) const;

  bool hereditary() const;
  bool upward_closed() const;
  bool contains_all_finite() const;

  std::string to_string() const;

 private:
  CollectionModel(Kind kind, std::size_t n, IdealModel ideal) : kind_(kind), n_(n), ideal_(std::move(ideal)) {}
  Kind kind_;
  std::size_t n_;
  IdealModel ideal_;
};

/// dom(f) ∈ C and im(f) ∈ C.
bool in_S(const SymElement& f, const CollectionModel& c);
bool in_S(const PartialBijection& f, const CollectionModel& c);
/// ℕ ∖ dom(f) ∈ C and ℕ ∖ im(f) ∈ C.
bool in_S_plus(const SymElement& f, const CollectionModel& c);

struct LawVerdict {
  enum class Status { Pass, Fail, NotApplicable, NotChecked };

  std::string law;  ///< "i" ... "v"
  Status status = Status::NotChecked;
  std::string detail;
  /// Offending elements, when a check found one: f, g, and f ∘ g.
  std::vector<std::string> witness;
};

const char* to_string(LawVerdict::Status status);

struct SCLawOptions {
  /// Window for the exhaustive checks of laws (i) and (ii).
  std::size_t window = 5;
  std::size_t opens = 100;
  std::size_t symbolic_pairs = 300;
  std::uint64_t seed = 0;
};

/// Checks the algebraic content of laws (i), (ii), (iii) and (v) for S(C)
/// and S⁺(C); (iv) is topological and reported as not checked.
std::vector<LawVerdict> check_SC_laws(const CollectionModel& c, const SCLawOptions& options = {});

/// The witness f = 1_B ∪ {(x_i, y_i)} with B = A^c ∖ (X ∪ Y ∪ U ∪ Z), and
/// the clauses certifying f ∈ V ∩ (S⁺(I⁺) ∖ S⁺(J⁺)) for J generated by I and A.
struct NonPPWitness {
  SymElement f;
  IdealModel j = IdealModel::fin();
  SetDescriptor dom_complement;
  SetDescriptor im_complement;

  bool in_open = false;
  bool dom_complement_in_j = false;
  bool dom_complement_outside_i = false;
  bool im_complement_in_j = false;
  bool im_complement_outside_i = false;
  /// dom(f)^c = (A ∪ X ∪ Y ∪ U ∪ Z) ∩ X^c, and the same for im with Y.
  bool dom_identity = false;
  bool im_identity = false;

  bool certified() const {
    return in_open && dom_complement_in_j && dom_complement_outside_i && im_complement_in_j &&
           im_complement_outside_i && dom_identity && im_identity;
  }
};

/// Throws InvalidOpen for an inconsistent V, ContractViolation when A or A^c
/// lies in I, or when A^c is finite (J would not be proper).
NonPPWitness nonpp_witness(const BasicOpen& v, const IdealModel& i, const SetDescriptor& a);

}  // namespace pbij
