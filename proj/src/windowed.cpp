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


#include "pbij/windowed.hpp"

#include <algorithm>
#include <cmath>

#include "pbij/error.hpp"

namespace pbij {

std::vector<std::vector<Point>> windowed_blocks(const BlockFamily& family, std::size_t window) {
  std::vector<std::vector<Point>> out;
  for (const auto& b : family.blocks()) out.push_back(b.enumerate(window));
  return out;
}

void for_each_injection(std::size_t window, std::span<const Point> from, std::span<const Point> to, std::size_t k,
                        const std::function<void(const PartialBijection&)>& visit) {
  if (k > from.size() || k > to.size()) return;
  std::vector<Pair> pairs;
  std::vector<bool> used(to.size(), false);
  // Choose sources in increasing order, targets in any order.
  auto rec = [&](auto& self, std::size_t start) -> void {
    if (pairs.size() == k) {
      visit(PartialBijection::from_pairs(window, pairs));
      return;
    }
    for (std::size_t a = start; a + (k - pairs.size()) <= from.size(); ++a) {
      for (std::size_t b = 0; b < to.size(); ++b) {
        if (used[b]) continue;
        used[b] = true;
        pairs.emplace_back(from[a], to[b]);
        self(self, a + 1);
        pairs.pop_back();
        used[b] = false;
      }
    }
  };
  rec(rec, 0);
}

std::vector<PartialBijection> symmetric_group(std::span<const Point> points, std::size_t window) {
  std::vector<PartialBijection> out;
  std::vector<Point> image(points.begin(), points.end());
  std::sort(image.begin(), image.end());
  std::vector<Pair> pairs(image.size());
  do {
    for (std::size_t a = 0; a < image.size(); ++a) pairs[a] = {points[a], image[a]};
    out.push_back(PartialBijection::from_pairs(window, pairs));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

std::vector<PartialBijection> group_generators(std::span<const Point> points, std::size_t window) {
  const std::size_t n = points.size();
  if (n <= 1) return {PartialBijection::identity(window, points)};
  std::vector<Pair> swap, cycle;
  for (std::size_t a = 0; a < n; ++a) {
    Point s = a == 0 ? points[1] : a == 1 ? points[0] : points[a];
    swap.emplace_back(points[a], s);
    cycle.emplace_back(points[a], points[(a + 1) % n]);
  }
  auto t = PartialBijection::from_pairs(window, swap);
  auto c = PartialBijection::from_pairs(window, cycle);
  if (n == 2) return {t};
  return {t, c};
}

void require_intersections_inside(const BlockFamily& family, std::size_t window) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const auto& meet = family.intersection(i, j);
      if (!meet.is_empty() && meet.max() >= window) {
        throw WindowTooSmall("B" + std::to_string(i) + " ∩ B" + std::to_string(j) + " = " + meet.to_string() +
                             " reaches past window " + std::to_string(window));
      }
    }
  }
}

void require_headroom(const BlockFamily& family, std::size_t window) {
  try {
    require_intersections_inside(family, window);
  } catch (const WindowTooSmall& e) {
    throw HeadroomViolation(e.what());
  }
  const std::size_t need = 2 * family.max_intersection() + 2;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::size_t have = family.block(i).enumerate(window).size();
    if (have < need) {
      throw HeadroomViolation("B" + std::to_string(i) + " has " + std::to_string(have) + " points below window " +
                              std::to_string(window) + ", needs " + std::to_string(need) +
                              " to realize every fresh-point choice");
    }
  }
}

WindowedStructure::WindowedStructure(const StratifiedSemigroup& semigroup, std::size_t window)
    : window_(window),
      blocks_(windowed_blocks(semigroup.family(), window)),
      bounds_(semigroup.bounds()),
      contains_empty_(semigroup.contains_empty()) {
  for (const auto& b : blocks_) {
    std::vector<bool> m(window, false);
    for (Point p : b) m[p] = true;
    member_.push_back(std::move(m));
  }
}

bool WindowedStructure::contains(const PartialBijection& f) const {
  if (f.window() != window_) return false;
  const auto dom = f.domain();
  const auto im = f.image();
  if (dom.empty()) return contains_empty_;
  auto inside = [&](const std::vector<Point>& pts, std::size_t b) {
    return std::all_of(pts.begin(), pts.end(), [&](Point p) { return member_[b][p]; });
  };
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (dom == blocks_[i] && im == blocks_[i]) return true;
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (!inside(dom, i)) continue;
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
      if (dom.size() <= bounds_[i][j] && inside(im, j)) return true;
    }
  }
  return false;
}

namespace {

double injections(double a, double b, std::size_t k) {
  double c = 1;
  for (std::size_t t = 0; t < k; ++t) c *= (a - t) * (b - t) / static_cast<double>(t + 1);
  return c;
}

}  // namespace

double WindowedStructure::estimated_size() const {
  double total = contains_empty_ ? 1 : 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    total += std::tgamma(static_cast<double>(blocks_[i].size()) + 1);
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
      const std::size_t top = std::min({bounds_[i][j], blocks_[i].size(), blocks_[j].size()});
      for (std::size_t k = 1; k <= top; ++k) total += injections(blocks_[i].size(), blocks_[j].size(), k);
    }
  }
  return total;
}

std::vector<PartialBijection> WindowedStructure::enumerate() const {
  ElementSet seen;
  if (contains_empty_) seen.insert(PartialBijection(window_));
  for (const auto& b : blocks_) {
    for (auto& g : symmetric_group(b, window_)) seen.insert(std::move(g));
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
      const std::size_t top = std::min({bounds_[i][j], blocks_[i].size(), blocks_[j].size()});
      for (std::size_t k = 1; k <= top; ++k) {
        for_each_injection(window_, blocks_[i], blocks_[j], k, [&](const PartialBijection& f) { seen.insert(f); });
      }
    }
  }
  std::vector<PartialBijection> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

Prop22Verdict check_prop22(const BlockFamily& family, std::size_t n, std::size_t window, std::size_t max_elements) {
  require_intersections_inside(family, window);
  Prop22Verdict v;
  v.n = n;
  v.window = window;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (family.weight(i, j) <= n) continue;
      Prop22Violation w;
      w.i = i;
      w.j = j;
      w.f = SymElement::identity(family.block(j));
      w.g = SymElement::identity(family.block(i));
      w.composite = sym_compose(w.f, w.g);
      w.composite_window = project_to_window(w.composite, window);
      w.stratum = classify(w.composite, family.blocks());
      v.violation = std::move(w);
      return v;
    }
  }

  WindowedStructure s(StratifiedSemigroup::displayed(family, n), window);
  if (s.estimated_size() > static_cast<double>(max_elements)) {
    throw UnsupportedConfiguration("windowed union has about " + std::to_string(s.estimated_size()) +
                                   " elements, above the limit " + std::to_string(max_elements));
  }
  const auto elements = s.enumerate();
  const ElementSet set(elements.begin(), elements.end());

  // Generators whose products reach every element: block group generators,
  // one representative per finite stratum, and 1_∅.
  std::vector<PartialBijection> gens{PartialBijection(window)};
  const auto& A = s.blocks();
  for (const auto& b : A) {
    auto g = group_generators(b, window);
    gens.insert(gens.end(), g.begin(), g.end());
  }
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = 0; j < A.size(); ++j) {
      const std::size_t top = std::min({n, A[i].size(), A[j].size()});
      for (std::size_t k = 1; k <= top; ++k) {
        std::vector<Pair> pairs;
        for (std::size_t a = 0; a < k; ++a) pairs.emplace_back(A[i][a], A[j][a]);
        gens.push_back(PartialBijection::from_pairs(window, pairs));
      }
    }
  }

  // S·T ⊆ S with S ⊆ ⟨T⟩ gives S·S ⊆ S.
  v.elements = elements.size();
  v.generators = gens.size();
  v.closed = true;
  for (const auto& e : elements) {
    if (!set.count(inverse(e))) v.closed = false;
    for (const auto& t : gens) {
      ++v.products;
      if (!set.count(compose(e, t))) v.closed = false;
    }
  }
  return v;
}

}  // namespace pbij
