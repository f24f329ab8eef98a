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

#include "pbij/partial_bijection.hpp"

#include <algorithm>
#include <sstream>

#include "pbij/error.hpp"
#include "text.hpp"

namespace pbij {

PartialBijection::PartialBijection(std::size_t window) {
  if (window == 0 || window >= kUndefined) {
    throw ContractViolation("window must be in [1, 2^32 - 1), got " + std::to_string(window));
  }
  target_.assign(window, kUndefined);
}

PartialBijection PartialBijection::from_pairs(std::size_t window, std::span<const Pair> pairs) {
  PartialBijection f(window);
  std::vector<bool> hit(window, false);
  for (const auto& [x, y] : pairs) {
    if (x >= window || y >= window) {
      throw ContractViolation("pair " + std::to_string(x) + "->" + std::to_string(y) +
                              " leaves window " + std::to_string(window));
    }
    if (f.target_[x] != kUndefined) throw ContractViolation("source " + std::to_string(x) + " repeated");
    if (hit[y]) throw ContractViolation("target " + std::to_string(y) + " repeated");
    f.target_[x] = static_cast<std::uint32_t>(y);
    hit[y] = true;
  }
  return f;
}

PartialBijection PartialBijection::identity(std::size_t window, std::span<const Point> points) {
  std::vector<Pair> pairs;
  pairs.reserve(points.size());
  for (Point p : points) pairs.emplace_back(p, p);
  return from_pairs(window, pairs);
}

std::size_t PartialBijection::size() const {
  return static_cast<std::size_t>(
      std::count_if(target_.begin(), target_.end(), [](std::uint32_t t) { return t != kUndefined; }));
}

std::optional<Point> PartialBijection::apply(Point x) const {
  if (!defined_at(x)) return std::nullopt;
  return target_[x];
}

Point PartialBijection::eval(Point x) const {
  if (!defined_at(x)) {
    throw OutOfDomain("ev_" + std::to_string(x) + " undefined for " + to_string());
  }
  return target_[x];
}

std::vector<Point> PartialBijection::domain() const {
  std::vector<Point> out;
  for (std::size_t x = 0; x < target_.size(); ++x) {
    if (target_[x] != kUndefined) out.push_back(x);
  }
  return out;
}

std::vector<Point> PartialBijection::image() const {
  std::vector<Point> out;
  for (std::uint32_t t : target_) {
    if (t != kUndefined) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Pair> PartialBijection::pairs() const {
  std::vector<Pair> out;
  for (std::size_t x = 0; x < target_.size(); ++x) {
    if (target_[x] != kUndefined) out.emplace_back(x, target_[x]);
  }
  return out;
}

bool PartialBijection::is_idempotent() const {
  for (std::size_t x = 0; x < target_.size(); ++x) {
    if (target_[x] != kUndefined && target_[x] != x) return false;
  }
  return true;
}

std::string PartialBijection::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [x, y] : pairs()) {
    if (!first) os << ", ";
    first = false;
    os << x << "->" << y;
  }
  os << "}@" << window();
  return os.str();
}

PartialBijection PartialBijection::parse(std::string_view s) {
  text::Cursor c(s);
  std::vector<Pair> pairs;
  c.expect("{");
  if (!c.try_consume("}")) {
    do {
      Point x = c.number();
      c.expect("->");
      Point y = c.number();
      pairs.emplace_back(x, y);
    } while (c.try_consume(","));
    c.expect("}");
  }
  c.expect("@");
  std::size_t window = c.number();
  if (!c.at_end()) c.fail("trailing input");
  try {
    return from_pairs(window, pairs);
  } catch (const ContractViolation& e) {
    throw ParseError("literal", e.what());
  }
}

std::size_t PartialBijection::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint32_t t : target_) {
    h ^= t;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const PartialBijection& a, const PartialBijection& b) {
  if (auto c = a.window() <=> b.window(); c != 0) return c;
  return a.target_ <=> b.target_;
}

PartialBijection compose(const PartialBijection& f, const PartialBijection& g) {
  if (f.window() != g.window()) {
    throw ContractViolation("compose: window mismatch " + std::to_string(f.window()) + " vs " +
                            std::to_string(g.window()));
  }
  PartialBijection r(f.window());
  const auto& ft = f.target_;
  const auto& gt = g.target_;
  for (std::size_t x = 0; x < gt.size(); ++x) {
    std::uint32_t y = gt[x];
    if (y != PartialBijection::kUndefined) r.target_[x] = ft[y];
  }
  return r;
}

PartialBijection inverse(const PartialBijection& f) {
  PartialBijection r(f.window());
  for (std::size_t x = 0; x < f.target_.size(); ++x) {
    std::uint32_t y = f.target_[x];
    if (y != PartialBijection::kUndefined) r.target_[y] = static_cast<std::uint32_t>(x);
  }
  return r;
}

bool is_idempotent(const PartialBijection& f) { return f.is_idempotent(); }

Projections projections(const PartialBijection& f) { return {f.domain(), f.image(), f}; }

IdempotentSet idempotents(std::span<const PartialBijection> elements) {
  IdempotentSet out;
  for (const auto& e : elements) {
    if (e.is_idempotent()) out.members.push_back(e);
  }
  return out;
}

}  // namespace pbij
