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

#include "pbij/sym_element.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "pbij/error.hpp"
#include "text.hpp"

namespace pbij {

const char* to_string(SymKind kind) {
  switch (kind) {
    case SymKind::FinMap: return "FinMap";
    case SymKind::PartialIdentity: return "PartialIdentity";
    case SymKind::BlockPerm: return "BlockPerm";
    case SymKind::IdentityExtension: return "IdentityExtension";
  }
  return "?";
}

namespace {

std::string pairs_text(const std::vector<Pair>& pairs) {
  std::ostringstream os;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    os << (a ? ", " : "") << pairs[a].first << "->" << pairs[a].second;
  }
  return os.str();
}

std::vector<Point> sorted_sources(const std::vector<Pair>& pairs) {
  std::vector<Point> v;
  for (const auto& p : pairs) v.push_back(p.first);
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Point> sorted_targets(const std::vector<Pair>& pairs) {
  std::vector<Point> v;
  for (const auto& p : pairs) v.push_back(p.second);
  std::sort(v.begin(), v.end());
  return v;
}

const Pair* find_source(const std::vector<Pair>& moved, Point x) {
  auto it = std::lower_bound(moved.begin(), moved.end(), Pair{x, 0},
                             [](const Pair& a, const Pair& b) { return a.first < b.first; });
  if (it != moved.end() && it->first == x) return &*it;
  return nullptr;
}

}  // namespace

SymElement SymElement::from_parts(const SetDescriptor& fixed, std::span<const Pair> pairs) {
  std::set<Point> sources, targets;
  std::vector<Point> absorbed;
  SymElement e;
  for (const auto& [x, y] : pairs) {
    if (!sources.insert(x).second) throw ContractViolation("source " + std::to_string(x) + " repeated");
    if (!targets.insert(y).second) throw ContractViolation("target " + std::to_string(y) + " repeated");
    if (fixed.contains(x) || fixed.contains(y)) {
      throw ContractViolation("pair " + std::to_string(x) + "->" + std::to_string(y) +
                              " meets the fixed set " + fixed.to_string());
    }
    if (x == y) {
      absorbed.push_back(x);
    } else {
      e.moved_.emplace_back(x, y);
    }
  }
  std::sort(e.moved_.begin(), e.moved_.end());
  e.fixed_ = absorbed.empty() ? fixed : unite(fixed, SetDescriptor::finite(absorbed));
  return e;
}

SymElement SymElement::fin(std::span<const Pair> pairs) { return from_parts(SetDescriptor::empty(), pairs); }

SymElement SymElement::identity(const SetDescriptor& set) {
  SymElement e;
  e.fixed_ = set;
  return e;
}

SymElement SymElement::block_perm(const SetDescriptor& block, std::span<const Pair> perm) {
  std::vector<Point> xs, ys;
  for (const auto& [x, y] : perm) {
    if (!block.contains(x) || !block.contains(y)) {
      throw ContractViolation("pair " + std::to_string(x) + "->" + std::to_string(y) +
                              " leaves block " + block.to_string());
    }
    xs.push_back(x);
    ys.push_back(y);
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end() ||
      std::adjacent_find(ys.begin(), ys.end()) != ys.end() || xs != ys) {
    throw ContractViolation("block_perm: pairs do not biject their support");
  }
  return from_parts(difference(block, SetDescriptor::finite(xs)), perm);
}

SymElement SymElement::from_window(const PartialBijection& f) {
  auto pairs = f.pairs();
  return fin(pairs);
}

SymKind SymElement::kind() const {
  if (fixed_.is_finite()) return SymKind::FinMap;
  if (moved_.empty()) return SymKind::PartialIdentity;
  if (sorted_sources(moved_) == sorted_targets(moved_)) return SymKind::BlockPerm;
  return SymKind::IdentityExtension;
}

SetDescriptor SymElement::domain() const {
  if (moved_.empty()) return fixed_;
  return unite(fixed_, SetDescriptor::finite(sorted_sources(moved_)));
}

SetDescriptor SymElement::image() const {
  if (moved_.empty()) return fixed_;
  return unite(fixed_, SetDescriptor::finite(sorted_targets(moved_)));
}

std::size_t SymElement::domain_size() const {
  if (!has_finite_domain()) throw ContractViolation("domain_size of infinite-domain element " + to_string());
  return fixed_.finite_add().size() + moved_.size();
}

std::optional<Point> SymElement::apply(Point x) const {
  if (fixed_.contains(x)) return x;
  if (const Pair* p = find_source(moved_, x)) return p->second;
  return std::nullopt;
}

Point SymElement::eval(Point x) const {
  auto y = apply(x);
  if (!y) throw OutOfDomain("ev_" + std::to_string(x) + " undefined for " + to_string());
  return *y;
}

std::vector<Point> SymElement::support() const {
  std::vector<Point> v;
  for (const auto& [x, y] : moved_) {
    v.push_back(x);
    v.push_back(y);
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Pair> SymElement::finite_pairs() const {
  if (!has_finite_domain()) throw ContractViolation("finite_pairs of infinite-domain element " + to_string());
  std::vector<Pair> out = moved_;
  for (Point x : fixed_.finite_add()) out.emplace_back(x, x);
  std::sort(out.begin(), out.end());
  return out;
}

std::string SymElement::to_string() const {
  if (is_empty()) return "empty";
  switch (kind()) {
    case SymKind::FinMap: return "fin(" + pairs_text(finite_pairs()) + ")";
    case SymKind::PartialIdentity: return "id(" + fixed_.to_string() + ")";
    case SymKind::BlockPerm: return "perm(" + domain().to_string() + "; " + pairs_text(moved_) + ")";
    case SymKind::IdentityExtension: return "ext(" + fixed_.to_string() + "; " + pairs_text(moved_) + ")";
  }
  return "?";
}

namespace {

std::vector<Pair> parse_pairs(text::Cursor& c) {
  std::vector<Pair> pairs;
  if (c.peek() == ')') return pairs;
  do {
    Point x = c.number();
    c.expect("->");
    Point y = c.number();
    pairs.emplace_back(x, y);
  } while (c.try_consume(","));
  return pairs;
}

SetDescriptor parse_set(text::Cursor& c, std::span<const SetDescriptor> blocks) {
  if (c.try_consume("B")) {
    Point k = c.number();
    if (k >= blocks.size()) c.fail("block B" + std::to_string(k) + " not in family");
    return blocks[k];
  }
  auto rest = c.rest();
  auto end = rest.find_first_of(";)");
  if (end == std::string_view::npos) c.fail("unterminated set");
  auto set = SetDescriptor::parse(rest.substr(0, end));
  c.advance(end);
  return set;
}

}  // namespace

SymElement SymElement::parse(std::string_view s, std::span<const SetDescriptor> blocks) {
  text::Cursor c(s);
  SymElement out;
  try {
    if (c.try_consume("empty")) {
      out = empty();
    } else if (c.try_consume("fin(")) {
      auto pairs = parse_pairs(c);
      c.expect(")");
      out = fin(pairs);
    } else if (c.try_consume("id(")) {
      auto set = parse_set(c, blocks);
      c.expect(")");
      out = identity(set);
    } else if (c.try_consume("perm(")) {
      auto set = parse_set(c, blocks);
      c.expect(";");
      auto pairs = parse_pairs(c);
      c.expect(")");
      out = block_perm(set, pairs);
    } else if (c.try_consume("ext(")) {
      auto set = parse_set(c, blocks);
      c.expect(";");
      auto pairs = parse_pairs(c);
      c.expect(")");
      out = from_parts(set, pairs);
    } else {
      c.fail("expected empty, fin(, id(, perm( or ext(");
    }
  } catch (const ContractViolation& e) {
    throw ParseError("element", e.what());
  }
  if (!c.at_end()) c.fail("trailing input");
  return out;
}

SymElement sym_compose(const SymElement& f, const SymElement& g) {
  // Points fixed by g land in dom f either in f's fixed set (staying fixed)
  // or among f's moved sources; g's moved points are finitely many.
  SetDescriptor fixed = intersect(f.fixed(), g.fixed());
  std::vector<Pair> pairs;
  for (const auto& [x, y] : f.moved()) {
    if (g.fixed().contains(x)) pairs.emplace_back(x, y);
  }
  for (const auto& [x, y] : g.moved()) {
    if (f.fixed().contains(y)) {
      pairs.emplace_back(x, y);
    } else if (const Pair* p = find_source(f.moved(), y)) {
      pairs.emplace_back(x, p->second);
    }
  }
  return SymElement::from_parts(fixed, pairs);
}

SymElement sym_inverse(const SymElement& f) {
  std::vector<Pair> pairs;
  for (const auto& [x, y] : f.moved()) pairs.emplace_back(y, x);
  return SymElement::from_parts(f.fixed(), pairs);
}

PartialBijection project_to_window(const SymElement& f, std::size_t window) {
  for (const auto& [x, y] : f.moved()) {
    if (x >= window || y >= window) {
      throw WindowTooSmall("moved pair " + std::to_string(x) + "->" + std::to_string(y) +
                           " escapes window " + std::to_string(window));
    }
  }
  if (f.has_finite_domain() && !f.fixed().is_empty() && f.fixed().max() >= window) {
    throw WindowTooSmall("finite domain of " + f.to_string() + " escapes window " + std::to_string(window));
  }
  std::vector<Pair> pairs = f.moved();
  for (Point x : f.fixed().enumerate(window)) pairs.emplace_back(x, x);
  return PartialBijection::from_pairs(window, pairs);
}

std::string Stratum::to_string() const {
  switch (kind) {
    case Kind::Group: return "S_inf(B" + std::to_string(i) + ")";
    case Kind::Finite:
      return "I_" + std::to_string(k) + "(B" + std::to_string(i) + ",B" + std::to_string(j) + ")";
    case Kind::Empty: return "I_0";
    case Kind::Outside: return "outside";
  }
  return "?";
}

Stratum classify(const SymElement& f, std::span<const SetDescriptor> blocks) {
  if (f.is_empty()) return Stratum::empty();
  if (!f.has_finite_domain()) {
    if (f.kind() != SymKind::BlockPerm && f.kind() != SymKind::PartialIdentity) return Stratum::outside();
    SetDescriptor dom = f.domain();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (blocks[i] == dom) return Stratum::group(i);
    }
    return Stratum::outside();
  }
  auto pairs = f.finite_pairs();
  auto holds = [&](const SetDescriptor& b, bool sources) {
    return std::all_of(pairs.begin(), pairs.end(),
                       [&](const Pair& p) { return b.contains(sources ? p.first : p.second); });
  };
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!holds(blocks[i], true)) continue;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (holds(blocks[j], false)) return Stratum::finite(pairs.size(), i, j);
    }
  }
  return Stratum::outside();
}

std::vector<Pair> complete_to_permutation(std::span<const Point> xs, std::span<const Point> ys) {
  if (xs.size() != ys.size()) throw ContractViolation("complete_to_permutation: length mismatch");
  std::map<Point, Point> forward, backward;
  for (std::size_t a = 0; a < xs.size(); ++a) {
    if (!forward.emplace(xs[a], ys[a]).second || !backward.emplace(ys[a], xs[a]).second) {
      throw ContractViolation("complete_to_permutation: map is not injective");
    }
  }
  // Each chain runs from a point with no preimage to one with no image;
  // closing it into a cycle yields a bijection of xs ∪ ys.
  std::vector<Pair> closing;
  for (const auto& [y, x] : backward) {
    if (forward.count(y)) continue;
    Point start = x;
    while (backward.count(start)) start = backward.at(start);
    closing.emplace_back(y, start);
  }
  for (const auto& p : closing) forward.insert(p);
  std::vector<Pair> out;
  for (const auto& [x, y] : forward) {
    if (x != y) out.emplace_back(x, y);
  }
  return out;
}

}  // namespace pbij
