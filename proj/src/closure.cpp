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


#include "pbij/closure.hpp"

#include <algorithm>
#include <iterator>
#include <unordered_map>

#include "pbij/error.hpp"

namespace pbij {

bool ClosureResult::contains(const PartialBijection& f) const {
  return std::binary_search(elements.begin(), elements.end(), f);
}

std::size_t ClosureResult::depth_of(const PartialBijection& f) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), f);
  if (it == elements.end() || *it != f) throw ContractViolation(f.to_string() + " is not in the closure");
  return depth[static_cast<std::size_t>(it - elements.begin())];
}

ClosureResult close(std::span<const PartialBijection> generators, std::size_t max_elements) {
  if (generators.empty()) return {{}, {}, {}, true};
  const std::size_t window = generators.front().window();
  std::vector<PartialBijection> letters;
  for (const auto& g : generators) {
    if (g.window() != window) throw ContractViolation("close: generators use different windows");
    letters.push_back(g);
    letters.push_back(inverse(g));
  }
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());

  // Words over generators and inverses; an inverse word is a reversed word of inverses.
  std::unordered_map<PartialBijection, std::size_t, PartialBijectionHash> seen;
  std::vector<PartialBijection> frontier = letters;
  for (const auto& l : letters) seen.emplace(l, 0);
  ClosureResult out;
  out.frontier_sizes.push_back(frontier.size());
  out.complete = true;
  for (std::size_t gen = 1; !frontier.empty(); ++gen) {
    std::vector<PartialBijection> next;
    for (const auto& f : frontier) {
      for (const auto& l : letters) {
        PartialBijection h = compose(f, l);
        if (seen.emplace(h, gen).second) next.push_back(std::move(h));
      }
      if (seen.size() > max_elements) {
        out.complete = false;
        break;
      }
    }
    if (!out.complete) break;
    std::sort(next.begin(), next.end());
    if (!next.empty()) out.frontier_sizes.push_back(next.size());
    frontier = std::move(next);
  }
  out.elements.reserve(seen.size());
  for (const auto& [e, d] : seen) out.elements.push_back(e);
  std::sort(out.elements.begin(), out.elements.end());
  out.depth.reserve(out.elements.size());
  for (const auto& e : out.elements) out.depth.push_back(seen.at(e));
  return out;
}

bool is_closed(std::span<const PartialBijection> elements) {
  std::unordered_set<PartialBijection, PartialBijectionHash> set(elements.begin(), elements.end());
  for (const auto& a : elements) {
    if (!set.count(inverse(a))) return false;
    for (const auto& b : elements) {
      if (!set.count(compose(a, b))) return false;
    }
  }
  return true;
}

std::vector<PartialBijection> block_group_generators(const BlockFamily& family, std::size_t window) {
  std::vector<PartialBijection> out;
  for (const auto& a : windowed_blocks(family, window)) {
    auto g = group_generators(a, window);
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

Stratum classify_window(const PartialBijection& f, const std::vector<std::vector<Point>>& blocks) {
  const auto dom = f.domain();
  const auto im = f.image();
  if (dom.empty()) return Stratum::empty();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (dom == blocks[i] && im == blocks[i]) return Stratum::group(i);
  }
  auto inside = [](const std::vector<Point>& pts, const std::vector<Point>& b) {
    return std::includes(b.begin(), b.end(), pts.begin(), pts.end());
  };
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!inside(dom, blocks[i])) continue;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (inside(im, blocks[j])) return Stratum::finite(dom.size(), i, j);
    }
  }
  return Stratum::outside();
}

std::map<std::string, std::size_t> stratum_counts(std::span<const PartialBijection> elements,
                                                  const std::vector<std::vector<Point>>& blocks) {
  std::map<std::string, std::size_t> out;
  for (const auto& e : elements) ++out[classify_window(e, blocks).to_string()];
  return out;
}

StructuralDiff compare_with_structural(const ClosureResult& result, const BlockFamily& family, std::size_t window) {
  require_headroom(family, window);
  if (!result.complete) throw ContractViolation("closure stopped at its element budget; nothing to compare");
  if (!result.elements.empty() && result.elements.front().window() != window) {
    throw ContractViolation("closure window differs from " + std::to_string(window));
  }
  WindowedStructure s(StratifiedSemigroup::generated(family), window);
  const auto structural = s.enumerate();
  StructuralDiff d;
  d.closure_size = result.elements.size();
  d.structural_size = structural.size();
  std::set_difference(result.elements.begin(), result.elements.end(), structural.begin(), structural.end(),
                      std::back_inserter(d.closure_only));
  std::set_difference(structural.begin(), structural.end(), result.elements.begin(), result.elements.end(),
                      std::back_inserter(d.structural_only));
  return d;
}

}  // namespace pbij
