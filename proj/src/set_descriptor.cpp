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

#include "pbij/set_descriptor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "pbij/error.hpp"
#include "text.hpp"

namespace pbij {

namespace {

Point checked_lcm(Point a, Point b) {
  Point l = std::lcm(a, b);
  if (l > kMaxModulus) {
    throw UnsupportedConfiguration("residue modulus " + std::to_string(l) + " exceeds limit " +
                                   std::to_string(kMaxModulus));
  }
  return l;
}

// Least period of a residue bitmap of length L (a divisor of L), from the
// prefix function of the bitmap.
Point least_period(const std::vector<bool>& bits) {
  const std::size_t L = bits.size();
  std::vector<std::size_t> pi(L, 0);
  for (std::size_t i = 1; i < L; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && bits[i] != bits[k]) k = pi[k - 1];
    if (bits[i] == bits[k]) ++k;
    pi[i] = k;
  }
  const std::size_t p = L - pi[L - 1];
  return L % p == 0 ? p : L;
}

std::vector<Point> sorted_unique(std::span<const Point> pts) {
  std::vector<Point> v(pts.begin(), pts.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void write_list(std::ostream& os, const std::vector<Point>& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
}

}  // namespace

// Assembles a canonical descriptor from a tail bitmap and the exact
// membership predicate, consulted below `threshold` only.
class DescriptorBuilder {
 public:
  static SetDescriptor build(std::vector<bool> bits, Point threshold,
                             const std::function<bool(Point)>& member) {
    SetDescriptor d;
    const bool any = std::find(bits.begin(), bits.end(), true) != bits.end();
    Point m = any ? least_period(bits) : 1;
    d.modulus_ = m;
    if (any) {
      for (Point r = 0; r < m; ++r) {
        if (bits[r]) d.residues_.push_back(r);
      }
    }
    for (Point x = 0; x < threshold; ++x) {
      bool in = member(x);
      bool tail = d.tail_has(x);
      if (in && !tail) d.finite_add_.push_back(x);
      if (!in && tail) d.finite_remove_.push_back(x);
    }
    return d;
  }

  static std::vector<bool> tail_bits(const SetDescriptor& d, Point L) {
    std::vector<bool> bits(L);
    for (Point r = 0; r < L; ++r) bits[r] = d.tail_has(r);
    return bits;
  }
};

SetDescriptor SetDescriptor::naturals() { return residue_class(0, 1); }

SetDescriptor SetDescriptor::finite(std::span<const Point> points) {
  SetDescriptor d;
  d.finite_add_ = sorted_unique(points);
  return d;
}

SetDescriptor SetDescriptor::residue_class(Point residue, Point modulus) {
  if (modulus == 0) throw ContractViolation("residue_class: modulus must be positive");
  std::vector<Point> r{residue % modulus};
  return from_parts({}, modulus, r, {});
}

SetDescriptor SetDescriptor::from_parts(std::span<const Point> finite_add, Point modulus,
                                        std::span<const Point> residues,
                                        std::span<const Point> finite_remove) {
  if (modulus == 0) throw ContractViolation("tail modulus must be positive");
  if (modulus > kMaxModulus) {
    throw UnsupportedConfiguration("tail modulus " + std::to_string(modulus) + " exceeds limit");
  }
  std::vector<bool> bits(modulus, false);
  for (Point r : residues) {
    if (r >= modulus) {
      throw ContractViolation("residue " + std::to_string(r) + " not below modulus " +
                              std::to_string(modulus));
    }
    bits[r] = true;
  }
  auto add = sorted_unique(finite_add);
  auto remove = sorted_unique(finite_remove);
  Point threshold = 0;
  if (!add.empty()) threshold = std::max(threshold, add.back() + 1);
  if (!remove.empty()) threshold = std::max(threshold, remove.back() + 1);
  auto member = [&](Point x) {
    if (std::binary_search(add.begin(), add.end(), x)) return true;
    return bits[x % modulus] && !std::binary_search(remove.begin(), remove.end(), x);
  };
  return DescriptorBuilder::build(bits, threshold, member);
}

bool SetDescriptor::tail_has(Point x) const {
  return !residues_.empty() && std::binary_search(residues_.begin(), residues_.end(), x % modulus_);
}

bool SetDescriptor::contains(Point x) const {
  if (std::binary_search(finite_add_.begin(), finite_add_.end(), x)) return true;
  return tail_has(x) && !std::binary_search(finite_remove_.begin(), finite_remove_.end(), x);
}

Cardinality SetDescriptor::size() const {
  if (!is_finite()) return Cardinality::infinite();
  return Cardinality::finite(finite_add_.size());
}

Point SetDescriptor::threshold() const {
  Point t = 0;
  if (!finite_add_.empty()) t = std::max(t, finite_add_.back() + 1);
  if (!finite_remove_.empty()) t = std::max(t, finite_remove_.back() + 1);
  return t;
}

std::vector<Point> SetDescriptor::enumerate(Point bound) const {
  std::vector<Point> out;
  if (is_finite()) {
    for (Point x : finite_add_) {
      if (x < bound) out.push_back(x);
    }
    return out;
  }
  for (Point x = 0; x < bound; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<Point> SetDescriptor::least(std::size_t count, std::span<const Point> exclude) const {
  std::vector<Point> out;
  if (count == 0) return out;
  auto excluded = [&](Point x) { return std::find(exclude.begin(), exclude.end(), x) != exclude.end(); };
  if (is_finite()) {
    for (Point x : finite_add_) {
      if (!excluded(x)) out.push_back(x);
      if (out.size() == count) return out;
    }
    throw ContractViolation("finite set " + to_string() + " has fewer than " + std::to_string(count) +
                            " admissible members");
  }
  for (Point x = 0; out.size() < count; ++x) {
    if (contains(x) && !excluded(x)) out.push_back(x);
  }
  return out;
}

std::optional<Point> SetDescriptor::min() const {
  if (is_empty()) return std::nullopt;
  return least(1).front();
}

Point SetDescriptor::max() const {
  if (!is_finite() || finite_add_.empty()) {
    throw ContractViolation("max() requires a finite nonempty set, got " + to_string());
  }
  return finite_add_.back();
}

std::uint64_t SetDescriptor::rank(Point x) const {
  if (is_finite()) {
    return static_cast<std::uint64_t>(std::lower_bound(finite_add_.begin(), finite_add_.end(), x) -
                                      finite_add_.begin());
  }
  std::uint64_t n = 0;
  for (Point y = 0; y < x; ++y) n += contains(y) ? 1 : 0;
  return n;
}

std::vector<Point> SetDescriptor::members() const {
  if (!is_finite()) throw ContractViolation("members() of infinite set " + to_string());
  return finite_add_;
}

std::string SetDescriptor::to_string() const {
  if (is_empty()) return "empty";
  std::ostringstream os;
  bool sep = false;
  if (!finite_add_.empty()) {
    os << "finite ";
    write_list(os, finite_add_);
    sep = true;
  }
  if (!residues_.empty()) {
    os << (sep ? " " : "") << "tail mod " << modulus_ << " residues ";
    write_list(os, residues_);
    sep = true;
  }
  if (!finite_remove_.empty()) {
    os << " remove ";
    write_list(os, finite_remove_);
  }
  return os.str();
}

SetDescriptor SetDescriptor::parse(std::string_view s) {
  text::Cursor c(s);
  if (c.try_consume("empty")) {
    if (!c.at_end()) c.fail("trailing input");
    return {};
  }
  if (c.try_consume("naturals")) {
    if (!c.at_end()) c.fail("trailing input");
    return naturals();
  }
  std::vector<Point> add, remove, residues;
  Point modulus = 1;
  bool any = false;
  while (!c.at_end()) {
    if (c.try_consume("finite")) {
      auto v = c.number_list();
      add.insert(add.end(), v.begin(), v.end());
    } else if (c.try_consume("remove")) {
      auto v = c.number_list();
      remove.insert(remove.end(), v.begin(), v.end());
    } else if (c.try_consume("tail")) {
      c.expect("mod");
      modulus = c.number();
      if (modulus == 0) c.fail("modulus must be positive");
      c.expect("residues");
      residues = c.number_list();
      for (Point r : residues) {
        if (r >= modulus) c.fail("residue " + std::to_string(r) + " not below modulus");
      }
    } else {
      c.fail("expected 'finite', 'tail' or 'remove'");
    }
    any = true;
  }
  if (!any) c.fail("empty descriptor text");
  return from_parts(add, modulus, residues, remove);
}

namespace {

SetDescriptor combine(const SetDescriptor& a, const SetDescriptor& b, bool (*op)(bool, bool)) {
  const Point L = checked_lcm(a.modulus(), b.modulus());
  auto ba = DescriptorBuilder::tail_bits(a, L);
  auto bb = DescriptorBuilder::tail_bits(b, L);
  std::vector<bool> bits(L);
  for (Point r = 0; r < L; ++r) bits[r] = op(ba[r], bb[r]);
  const Point threshold = std::max(a.threshold(), b.threshold());
  return DescriptorBuilder::build(std::move(bits), threshold,
                                  [&](Point x) { return op(a.contains(x), b.contains(x)); });
}

}  // namespace

SetDescriptor intersect(const SetDescriptor& a, const SetDescriptor& b) {
  if (a.is_finite() || b.is_finite()) {
    // Cheap path; keeps huge-modulus blocks usable against finite sets.
    const SetDescriptor& fin = a.is_finite() ? a : b;
    const SetDescriptor& other = a.is_finite() ? b : a;
    std::vector<Point> pts;
    for (Point x : fin.finite_add()) {
      if (other.contains(x)) pts.push_back(x);
    }
    return SetDescriptor::finite(pts);
  }
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

SetDescriptor unite(const SetDescriptor& a, const SetDescriptor& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

SetDescriptor difference(const SetDescriptor& a, const SetDescriptor& b) {
  if (a.is_finite()) {
    std::vector<Point> pts;
    for (Point x : a.finite_add()) {
      if (!b.contains(x)) pts.push_back(x);
    }
    return SetDescriptor::finite(pts);
  }
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

SetDescriptor complement(const SetDescriptor& d) {
  return combine(d, SetDescriptor::naturals(), [](bool x, bool) { return !x; });
}

Cardinality finite_intersection_size(const SetDescriptor& a, const SetDescriptor& b) {
  return intersect(a, b).size();
}

bool is_subset(const SetDescriptor& a, const SetDescriptor& b) { return difference(a, b).is_empty(); }

bool is_almost_subset(const SetDescriptor& a, const SetDescriptor& b) {
  return difference(a, b).is_finite();
}

}  // namespace pbij
