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


#include "pbij/basic_open.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pbij/error.hpp"
#include "text.hpp"

namespace pbij {

namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

BasicOpen BasicOpen::make(std::vector<Pair> positive, std::vector<Point> forbid_dom, std::vector<Point> forbid_im) {
  sort_unique(positive);
  sort_unique(forbid_dom);
  sort_unique(forbid_im);
  return {std::move(positive), std::move(forbid_dom), std::move(forbid_im)};
}

void BasicOpen::validate() const {
  std::set<Point> xs, ys;
  for (const auto& [x, y] : positive) {
    auto pair = "v(" + std::to_string(x) + "," + std::to_string(y) + ")";
    if (!xs.insert(x).second) throw InvalidOpen(pair + " sends " + std::to_string(x) + " to two places");
    if (!ys.insert(y).second) throw InvalidOpen(pair + " hits " + std::to_string(y) + " twice");
    if (std::binary_search(forbid_dom.begin(), forbid_dom.end(), x)) throw InvalidOpen(pair + " clashes with w1(" + std::to_string(x) + ")");
    if (std::binary_search(forbid_im.begin(), forbid_im.end(), y)) throw InvalidOpen(pair + " clashes with w2(" + std::to_string(y) + ")");
  }
}

bool BasicOpen::consistent() const {
  try {
    validate();
    return true;
  } catch (const InvalidOpen&) {
    return false;
  }
}

std::vector<Point> BasicOpen::points() const {
  std::vector<Point> out(forbid_dom.begin(), forbid_dom.end());
  out.insert(out.end(), forbid_im.begin(), forbid_im.end());
  for (const auto& [x, y] : positive) {
    out.push_back(x);
    out.push_back(y);
  }
  sort_unique(out);
  return out;
}

std::string BasicOpen::to_string() const {
  std::vector<std::string> parts;
  for (const auto& [x, y] : positive) parts.push_back("v(" + std::to_string(x) + "," + std::to_string(y) + ")");
  for (Point u : forbid_dom) parts.push_back("w1(" + std::to_string(u) + ")");
  for (Point z : forbid_im) parts.push_back("w2(" + std::to_string(z) + ")");
  if (parts.empty()) return "all";
  std::ostringstream os;
  for (std::size_t a = 0; a < parts.size(); ++a) os << (a ? " & " : "") << parts[a];
  return os.str();
}

BasicOpen BasicOpen::parse(std::string_view s) {
  text::Cursor c(s);
  std::vector<Pair> positive;
  std::vector<Point> fd, fi;
  if (c.try_consume("all")) {
    if (!c.at_end()) c.fail("trailing input");
    return {};
  }
  do {
    if (c.try_consume("v(")) {
      Point x = c.number();
      c.expect(",");
      Point y = c.number();
      positive.emplace_back(x, y);
    } else if (c.try_consume("w1(")) {
      fd.push_back(c.number());
    } else if (c.try_consume("w2(")) {
      fi.push_back(c.number());
    } else {
      c.fail("expected v(x,y), w1(u) or w2(z)");
    }
    c.expect(")");
  } while (c.try_consume("&"));
  if (!c.at_end()) c.fail("trailing input");
  return make(std::move(positive), std::move(fd), std::move(fi));
}

bool open_contains(const BasicOpen& v, const SymElement& f) {
  for (const auto& [x, y] : v.positive) {
    if (f.apply(x) != std::optional<Point>(y)) return false;
  }
  const auto dom = f.domain();
  for (Point u : v.forbid_dom) {
    if (dom.contains(u)) return false;
  }
  const auto im = f.image();
  for (Point z : v.forbid_im) {
    if (im.contains(z)) return false;
  }
  return true;
}

bool open_contains(const BasicOpen& v, const PartialBijection& f) {
  for (const auto& [x, y] : v.positive) {
    if (f.apply(x) != std::optional<Point>(y)) return false;
  }
  for (Point u : v.forbid_dom) {
    if (f.defined_at(u)) return false;
  }
  const auto im = f.image();
  for (Point z : v.forbid_im) {
    if (std::binary_search(im.begin(), im.end(), z)) return false;
  }
  return true;
}

BasicOpen random_basic_open(Rng& rng, const RandomOpenLimits& limits) {
  for (;;) {
    std::vector<Pair> positive;
    std::vector<Point> fd, fi;
    for (auto k = rng.below(limits.max_positive + 1); k > 0; --k) {
      positive.emplace_back(rng.below(limits.point_bound), rng.below(limits.point_bound));
    }
    for (auto k = rng.below(limits.max_forbid + 1); k > 0; --k) fd.push_back(rng.below(limits.point_bound));
    for (auto k = rng.below(limits.max_forbid + 1); k > 0; --k) fi.push_back(rng.below(limits.point_bound));
    auto v = BasicOpen::make(std::move(positive), std::move(fd), std::move(fi));
    if (v.consistent()) return v;
  }
}

}  // namespace pbij
