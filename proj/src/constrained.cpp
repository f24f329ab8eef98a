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


#include "pbij/constrained.hpp"

#include <algorithm>
#include <unordered_set>

#include "pbij/error.hpp"
#include "pbij/sampling.hpp"

namespace pbij {

bool IdealModel::contains(const SetDescriptor& x) const {
  if (kind_ == Kind::Empty) return false;
  return difference(x, base_).is_finite();
}

bool IdealModel::proper() const {
  if (kind_ == Kind::Empty) return true;
  return !complement(base_).is_finite();
}

IdealModel IdealModel::generated_with(const SetDescriptor& a) const {
  if (kind_ == Kind::Empty) return almost_subset(a);
  return almost_subset(unite(base_, a));
}

std::string IdealModel::to_string() const {
  if (kind_ == Kind::Empty) return "empty";
  if (base_.is_empty()) return "fin";
  return "almost-subset(" + base_.to_string() + ")";
}

IdealModel IdealModel::parse(std::string_view text) {
  if (text == "empty") return empty();
  if (text == "fin") return fin();
  return almost_subset(SetDescriptor::parse(text));
}

bool CollectionModel::contains(const SetDescriptor& x) const {
  switch (kind_) {
    case Kind::AtMostN: return x.is_finite() && x.finite_add().size() <= n_;
    case Kind::Schreier:
      return x.is_finite() && (x.is_empty() || x.finite_add().size() <= x.finite_add().front() + 1);
    case Kind::InitialSegments: return x.is_finite() && !x.is_empty() && x.max() + 1 == x.finite_add().size();
    case Kind::IdealMembers: return ideal_.contains(x);
    case Kind::CoIdeal: return !ideal_.contains(x);
    case Kind::All: return true;
  }
  return false;
}

bool CollectionModel::contains(std::span<const Point> finite_set) const {
  return contains(SetDescriptor::finite(finite_set));
}

bool CollectionModel::hereditary() const {
  switch (kind_) {
    case Kind::AtMostN:
    case Kind::Schreier:
    case Kind::IdealMembers:
    case Kind::All: return true;
    case Kind::InitialSegments: return false;
    case Kind::CoIdeal: return ideal_.kind() == IdealModel::Kind::Empty;
  }
  return false;
}

bool CollectionModel::upward_closed() const {
  switch (kind_) {
    case Kind::CoIdeal:
    case Kind::All: return true;
    case Kind::IdealMembers: return !ideal_.proper();
    default: return false;
  }
}

bool CollectionModel::contains_all_finite() const {
  switch (kind_) {
    case Kind::IdealMembers: return ideal_.contains_all_finite();
    case Kind::CoIdeal: return ideal_.kind() == IdealModel::Kind::Empty;
    case Kind::All: return true;
    default: return false;
  }
}

std::string CollectionModel::to_string() const {
  switch (kind_) {
    case Kind::AtMostN: return "at-most(" + std::to_string(n_) + ")";
    case Kind::Schreier: return "schreier";
    case Kind::InitialSegments: return "initial-segments";
    case Kind::IdealMembers: return "ideal(" + ideal_.to_string() + ")";
    case Kind::CoIdeal: return "co-ideal(" + ideal_.to_string() + ")";
    case Kind::All: return "all";
  }
  return "?";
}

bool in_S(const SymElement& f, const CollectionModel& c) { return c.contains(f.domain()) && c.contains(f.image()); }

bool in_S(const PartialBijection& f, const CollectionModel& c) {
  const auto dom = f.domain();
  const auto im = f.image();
  return c.contains(dom) && c.contains(im);
}

bool in_S_plus(const SymElement& f, const CollectionModel& c) {
  return c.contains(complement(f.domain())) && c.contains(complement(f.image()));
}

const char* to_string(LawVerdict::Status status) {
  switch (status) {
    case LawVerdict::Status::Pass: return "pass";
    case LawVerdict::Status::Fail: return "fail";
    case LawVerdict::Status::NotApplicable: return "not-applicable";
    case LawVerdict::Status::NotChecked: return "not-checked";
  }
  return "?";
}

namespace {

void all_partial_bijections(std::size_t window, const std::function<void(const PartialBijection&)>& visit) {
  std::vector<Pair> pairs;
  std::vector<bool> used(window, false);
  auto rec = [&](auto& self, Point x) -> void {
    if (x == window) {
      visit(PartialBijection::from_pairs(window, pairs));
      return;
    }
    self(self, x + 1);
    for (Point y = 0; y < window; ++y) {
      if (used[y]) continue;
      used[y] = true;
      pairs.emplace_back(x, y);
      self(self, x + 1);
      pairs.pop_back();
      used[y] = false;
    }
  };
  rec(rec, 0);
}

std::vector<Point> subset_of(std::uint64_t mask) {
  std::vector<Point> out;
  for (Point x = 0; mask >> x; ++x) {
    if ((mask >> x) & 1U) out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<LawVerdict> check_SC_laws(const CollectionModel& c, const SCLawOptions& options) {
  using Status = LawVerdict::Status;
  const std::size_t w = options.window;
  std::vector<LawVerdict> out;

  // (i) S(C) on the window.
  std::vector<PartialBijection> members;
  all_partial_bijections(w, [&](const PartialBijection& f) {
    if (in_S(f, c)) members.push_back(f);
  });
  std::unordered_set<PartialBijection, PartialBijectionHash> set(members.begin(), members.end());
  std::vector<std::string> escape;
  for (const auto& f : members) {
    if (!escape.empty()) break;
    if (!set.count(inverse(f))) {
      escape = {f.to_string(), "inverse", inverse(f).to_string()};
      break;
    }
    for (const auto& g : members) {
      auto h = compose(f, g);
      if (!set.count(h)) {
        escape = {f.to_string(), g.to_string(), h.to_string()};
        break;
      }
    }
  }
  const bool closed = escape.empty();
  {
    LawVerdict v{"i", Status::NotApplicable, "", escape};
    std::string summary = std::to_string(members.size()) + " members on window " + std::to_string(w) + ", " +
                          (closed ? "closed" : "not closed") + " under composition and inverse";
    if (c.hereditary()) {
      v.status = closed ? Status::Pass : Status::Fail;
      v.detail = "C hereditary; " + summary;
    } else {
      v.detail = "C not hereditary; " + summary;
    }
    out.push_back(std::move(v));
  }

  // (ii) intersections read off from 1_A ∘ 1_B.
  {
    LawVerdict v{"ii", Status::NotApplicable, "windowed S(C) is not a subsemigroup", {}};
    if (closed) {
      v.status = Status::Pass;
      v.detail = "every A, B in C below the window has A ∩ B in C";
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << w) && v.status == Status::Pass; ++a) {
        auto sa = subset_of(a);
        if (!c.contains(sa)) continue;
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << w); ++b) {
          auto sb = subset_of(b);
          if (!c.contains(sb)) continue;
          auto meet = compose(PartialBijection::identity(w, sa), PartialBijection::identity(w, sb));
          if (!c.contains(meet.domain())) {
            v.status = Status::Fail;
            v.detail = "intersection escapes C";
            v.witness = {PartialBijection::identity(w, sa).to_string(), PartialBijection::identity(w, sb).to_string(),
                         meet.to_string()};
            break;
          }
        }
      }
    }
    out.push_back(std::move(v));
  }

  // (iii) the finite part of any basic open is already in S(C).
  {
    LawVerdict v{"iii", Status::NotApplicable, "C misses some finite set", {}};
    if (c.contains_all_finite()) {
      Rng rng(Rng::derive(options.seed, 3));
      v.status = Status::Pass;
      v.detail = std::to_string(options.opens) + " random basic opens each meet S(C)";
      for (std::size_t t = 0; t < options.opens; ++t) {
        auto open = random_basic_open(rng);
        auto f = SymElement::fin(open.positive);
        if (!open_contains(open, f) || !in_S(f, c)) {
          v.status = Status::Fail;
          v.detail = "finite part of " + open.to_string() + " is not in V ∩ S(C)";
          v.witness = {f.to_string()};
          break;
        }
      }
    }
    out.push_back(std::move(v));
  }

  out.push_back({"iv", Status::NotChecked, "topological: closedness of C in 2^N", {}});

  // (v) S⁺(C) on random symbolic elements.
  {
    LawVerdict v{"v", Status::NotApplicable, "C not upward closed", {}};
    if (c.upward_closed()) {
      Rng rng(Rng::derive(options.seed, 5));
      std::vector<SymElement> pool;
      for (std::size_t t = 0; t < 40 * options.symbolic_pairs && pool.size() < 64; ++t) {
        auto f = random_sym_element(rng, 24);
        if (in_S_plus(f, c)) pool.push_back(std::move(f));
      }
      v.status = Status::Pass;
      std::size_t checked = 0;
      for (std::size_t t = 0; t < options.symbolic_pairs && !pool.empty(); ++t) {
        const auto& f = rng.pick(pool);
        const auto& g = rng.pick(pool);
        auto h = sym_compose(f, g);
        ++checked;
        if (!in_S_plus(h, c) || !in_S_plus(sym_inverse(f), c)) {
          v.status = Status::Fail;
          v.witness = {f.to_string(), g.to_string(), h.to_string()};
          break;
        }
      }
      v.detail = std::to_string(checked) + " products of " + std::to_string(pool.size()) + " sampled members of S+(C)";
    }
    out.push_back(std::move(v));
  }
  return out;
}

NonPPWitness nonpp_witness(const BasicOpen& v, const IdealModel& i, const SetDescriptor& a) {
  v.validate();
  const SetDescriptor ac = complement(a);
  if (i.contains(a)) throw ContractViolation("A = " + a.to_string() + " belongs to the ideal " + i.to_string());
  if (i.contains(ac)) throw ContractViolation("A^c = " + ac.to_string() + " belongs to the ideal " + i.to_string());
  if (ac.is_finite()) throw ContractViolation("A^c is finite, so the extended ideal contains N");

  std::vector<Point> xs, ys;
  for (const auto& [x, y] : v.positive) {
    xs.push_back(x);
    ys.push_back(y);
  }
  const SetDescriptor X = SetDescriptor::finite(xs);
  const SetDescriptor Y = SetDescriptor::finite(ys);
  const SetDescriptor all_points = SetDescriptor::finite(v.points());

  NonPPWitness w;
  w.j = i.generated_with(a);
  w.f = SymElement::from_parts(difference(ac, all_points), v.positive);
  w.dom_complement = complement(w.f.domain());
  w.im_complement = complement(w.f.image());

  w.in_open = open_contains(v, w.f);
  w.dom_complement_in_j = w.j.contains(w.dom_complement);
  w.dom_complement_outside_i = !i.contains(w.dom_complement);
  w.im_complement_in_j = w.j.contains(w.im_complement);
  w.im_complement_outside_i = !i.contains(w.im_complement);
  const SetDescriptor spread = unite(a, all_points);
  w.dom_identity = w.dom_complement == intersect(spread, complement(X));
  w.im_identity = w.im_complement == intersect(spread, complement(Y));
  return w;
}

}  // namespace pbij
