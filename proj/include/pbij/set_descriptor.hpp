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
#include <string_view>
#include <vector>

#include "pbij/partial_bijection.hpp"

namespace pbij {

class DescriptorBuilder;

/// Either a natural number or "infinite".
class Cardinality {
 public:
  static Cardinality finite(std::uint64_t n) { return Cardinality(n); }
  static Cardinality infinite() { return Cardinality(); }

  bool is_finite() const { return value_.has_value(); }
  /// Requires is_finite().
  std::uint64_t value() const { return *value_; }

  std::string to_string() const { return is_finite() ? std::to_string(*value_) : "infinite"; }

  friend bool operator==(const Cardinality&, const Cardinality&) = default;

 private:
  Cardinality() = default;
  explicit Cardinality(std::uint64_t n) : value_(n) {}
  std::optional<std::uint64_t> value_;
};

/// An eventually periodic subset of ℕ:
///
///     finite_add ∪ { x : x mod m ∈ residues, x ∉ finite_remove }
///
/// Canonical form: m is the least period of the residue pattern,
/// finite_add misses the tail, finite_remove lies inside it, and the empty
/// tail has m = 1. Under it structural equality is extensional equality.
class SetDescriptor {
 public:
  /// ∅
  SetDescriptor() = default;

  static SetDescriptor empty() { return {}; }
  static SetDescriptor naturals();
  static SetDescriptor finite(std::span<const Point> points);
  static SetDescriptor finite(std::initializer_list<Point> points) {
    return finite(std::span<const Point>(points.begin(), points.size()));
  }
  /// { x : x ≡ residue (mod modulus) }
  static SetDescriptor residue_class(Point residue, Point modulus);
  /// Any combination of the three parts; the result is canonicalized.
  static SetDescriptor from_parts(std::span<const Point> finite_add, Point modulus,
                                  std::span<const Point> residues,
                                  std::span<const Point> finite_remove = {});

  bool contains(Point x) const;
  bool is_finite() const { return residues_.empty(); }
  bool is_empty() const { return residues_.empty() && finite_add_.empty(); }
  Cardinality size() const;

  /// All members below `bound`, ascending.
  std::vector<Point> enumerate(Point bound) const;
  /// The `count` least members not listed in `exclude`. Throws ContractViolation
  /// if the set runs out.
  std::vector<Point> least(std::size_t count, std::span<const Point> exclude = {}) const;
  std::optional<Point> min() const;
  /// Largest member; the set must be finite and nonempty.
  Point max() const;
  /// Number of members strictly below x.
  std::uint64_t rank(Point x) const;
  /// Every member of a finite set, ascending.
  std::vector<Point> members() const;

  Point modulus() const { return modulus_; }
  const std::vector<Point>& residues() const { return residues_; }
  const std::vector<Point>& finite_add() const { return finite_add_; }
  const std::vector<Point>& finite_remove() const { return finite_remove_; }

  /// Least x such that membership of every y >= x is decided by the tail alone.
  Point threshold() const;

  /// `finite [0] tail mod 3 residues [1] remove [4]`, or `empty`.
  std::string to_string() const;
  /// Accepts the to_string() grammar; parts may appear in any order.
  static SetDescriptor parse(std::string_view text);

  friend bool operator==(const SetDescriptor&, const SetDescriptor&) = default;

 private:
  friend class DescriptorBuilder;
  bool tail_has(Point x) const;

  Point modulus_ = 1;
  std::vector<Point> residues_;
  std::vector<Point> finite_add_;
  std::vector<Point> finite_remove_;
};

SetDescriptor intersect(const SetDescriptor& a, const SetDescriptor& b);
SetDescriptor unite(const SetDescriptor& a, const SetDescriptor& b);
SetDescriptor difference(const SetDescriptor& a, const SetDescriptor& b);
SetDescriptor complement(const SetDescriptor& d);

/// |a ∩ b|, or infinite.
Cardinality finite_intersection_size(const SetDescriptor& a, const SetDescriptor& b);

bool is_subset(const SetDescriptor& a, const SetDescriptor& b);
/// a ∖ b is finite.
bool is_almost_subset(const SetDescriptor& a, const SetDescriptor& b);

/// Largest modulus any operation may produce before refusing.
inline constexpr Point kMaxModulus = Point{1} << 22;

}  // namespace pbij
