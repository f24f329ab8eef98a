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


#include "pbij/topology.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <sstream>

#include "pbij/error.hpp"

namespace pbij {

namespace {

constexpr std::size_t kDefaultHorizon = 64;
constexpr std::size_t kMembershipReplay = 8;

std::string pair_text(const Pair& p) { return std::to_string(p.first) + "->" + std::to_string(p.second); }

std::size_t horizon_for(const SymElement& f, const BasicOpen* v = nullptr) {
  Point top = 0;
  for (Point x : f.support()) top = std::max(top, x + 1);
  if (f.has_finite_domain()) {
    for (const auto& [x, y] : f.finite_pairs()) top = std::max({top, x + 1, y + 1});
  }
  if (v != nullptr) {
    for (Point x : v->points()) top = std::max(top, x + 1);
  }
  return std::max<std::size_t>(kDefaultHorizon, top);
}

// Why a permutation of `block` cannot lie in V, if some constraint says so.
std::optional<std::string> block_excluded(const BasicOpen& v, const SetDescriptor& block) {
  for (const auto& [a, b] : v.positive) {
    if (!block.contains(a)) return "v(" + std::to_string(a) + "," + std::to_string(b) + "): " + std::to_string(a) + " not in block";
    if (!block.contains(b)) return "v(" + std::to_string(a) + "," + std::to_string(b) + "): " + std::to_string(b) + " not in block";
  }
  for (Point u : v.forbid_dom) {
    if (block.contains(u)) return "w1(" + std::to_string(u) + "): " + std::to_string(u) + " in block";
  }
  for (Point z : v.forbid_im) {
    if (block.contains(z)) return "w2(" + std::to_string(z) + "): " + std::to_string(z) + " in block";
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------- two-adic

SetDescriptor TwoAdicFamily::block(std::size_t n) const {
  if (n > kMaxIndex) {
    throw UnsupportedConfiguration("two-adic block index " + std::to_string(n) + " exceeds " +
                                   std::to_string(kMaxIndex));
  }
  static const std::vector<SetDescriptor> blocks = [] {
    std::vector<SetDescriptor> out;
    for (std::size_t k = 0; k <= kMaxIndex; ++k) {
      const Point p = Point{1} << k;
      std::vector<Point> zero{0}, residue{p};
      out.push_back(SetDescriptor::from_parts(zero, 2 * p, residue));
    }
    return out;
  }();
  return blocks[n];
}

std::size_t TwoAdicFamily::index_of(Point x) const {
  if (x == 0) throw ContractViolation("0 lies in every two-adic block");
  return static_cast<std::size_t>(std::countr_zero(x));
}

std::size_t TwoAdicFamily::blocks_meeting(Point window) const {
  std::size_t n = 0;
  while (n <= kMaxIndex && least_private_point(n) < window) ++n;
  return n;
}

BlockFamily TwoAdicFamily::prefix(std::size_t count) const {
  std::vector<SetDescriptor> blocks;
  for (std::size_t n = 0; n < count; ++n) blocks.push_back(block(n));
  return BlockFamily::create(std::move(blocks), "two-adic-prefix-" + std::to_string(count));
}

// ---------------------------------------------------------------- semigroups

ProbeSemigroup ProbeSemigroup::pettis(BlockFamily family, std::size_t n) {
  if (family.max_intersection() > n) {
    throw UnsupportedFamily("family " + family.name() + " has an intersection of size " +
                            std::to_string(family.max_intersection()) + " > n = " + std::to_string(n));
  }
  ProbeSemigroup s;
  s.kind_ = Kind::Pettis;
  s.n_ = n;
  s.family_ = std::move(family);
  return s;
}

ProbeSemigroup ProbeSemigroup::unpunto() {
  ProbeSemigroup s;
  s.kind_ = Kind::Unpunto;
  s.n_ = 1;
  return s;
}

SetDescriptor ProbeSemigroup::block(std::size_t i) const {
  return kind_ == Kind::Pettis ? family_->block(i) : TwoAdicFamily().block(i);
}

std::optional<std::size_t> ProbeSemigroup::group_block(const SymElement& f) const {
  if (f.has_finite_domain()) return std::nullopt;
  const SetDescriptor dom = f.domain();
  if (dom != f.image()) return std::nullopt;
  if (kind_ == Kind::Pettis) {
    for (std::size_t i = 0; i < family_->size(); ++i) {
      if (family_->block(i) == dom) return i;
    }
    return std::nullopt;
  }
  auto private_points = difference(dom, SetDescriptor::finite({0}));
  auto x = private_points.min();
  if (!x) return std::nullopt;
  const std::size_t i = TwoAdicFamily().index_of(*x);
  if (i > TwoAdicFamily::kMaxIndex || TwoAdicFamily().block(i) != dom) return std::nullopt;
  return i;
}

bool ProbeSemigroup::contains(const SymElement& f) const {
  if (!f.has_finite_domain()) return group_block(f).has_value();
  const std::size_t k = f.domain_size();
  if (k > n_) return false;
  if (kind_ == Kind::Unpunto) return true;
  return classify(f, family_->blocks()).kind != Stratum::Kind::Outside;
}

std::string ProbeSemigroup::to_string() const {
  if (kind_ == Kind::Unpunto) return "unpunto(two-adic)";
  return "pettis(" + (family_->name().empty() ? std::string("family") : family_->name()) +
         ", n=" + std::to_string(n_) + ")";
}

// ---------------------------------------------------------------- schemas

const char* to_string(SequenceSchema::Kind kind) {
  switch (kind) {
    case SequenceSchema::Kind::BlockIdentities: return "block-identities";
    case SequenceSchema::Kind::SingletonIdentities: return "singleton-identities";
    case SequenceSchema::Kind::GrowingExtensions: return "growing-extensions";
    case SequenceSchema::Kind::GroupNeighbors: return "group-neighbors";
  }
  return "?";
}

SequenceSchema SequenceSchema::growing_extensions(SymElement base, SetDescriptor dom_pool, SetDescriptor im_pool) {
  if (difference(dom_pool, base.domain()).is_finite() || difference(im_pool, base.image()).is_finite()) {
    throw ContractViolation("growing extensions of " + base.to_string() + " need infinite fresh pools");
  }
  return {Kind::GrowingExtensions, std::move(base), std::move(dom_pool), std::move(im_pool)};
}

SequenceSchema SequenceSchema::group_neighbors(SymElement base, SetDescriptor block) {
  if (block.is_finite() || base.domain() != block || base.image() != block) {
    throw ContractViolation(base.to_string() + " does not permute " + block.to_string());
  }
  return {Kind::GroupNeighbors, std::move(base), block, block};
}

namespace {

SetDescriptor fresh_domain(const SequenceSchema& s) { return difference(s.dom_pool, s.base.domain()); }
SetDescriptor fresh_image(const SequenceSchema& s) { return difference(s.im_pool, s.base.image()); }
SetDescriptor swap_pool(const SequenceSchema& s) {
  auto support = s.base.support();
  return difference(s.dom_pool, SetDescriptor::finite(support));
}

}  // namespace

SymElement SequenceSchema::element(std::size_t l) const {
  switch (kind) {
    case Kind::BlockIdentities: return SymElement::identity(TwoAdicFamily().block(l));
    case Kind::SingletonIdentities: return SymElement::fin({{l, l}});
    case Kind::GrowingExtensions: {
      const Point n = fresh_domain(*this).least(l + 1).back();
      const Point m = fresh_image(*this).least(l + 1).back();
      auto pairs = base.moved();
      pairs.emplace_back(n, m);
      return SymElement::from_parts(base.fixed(), pairs);
    }
    case Kind::GroupNeighbors: {
      auto pts = swap_pool(*this).least(2 * l + 2);
      auto perm = base.moved();
      perm.emplace_back(pts[2 * l], pts[2 * l + 1]);
      perm.emplace_back(pts[2 * l + 1], pts[2 * l]);
      std::sort(perm.begin(), perm.end());
      return SymElement::block_perm(dom_pool, perm);
    }
  }
  return {};
}

std::string SequenceSchema::to_string() const {
  std::string s = pbij::to_string(kind);
  if (kind == Kind::GrowingExtensions) {
    s += "(base=" + base.to_string() + "; dom_pool=" + dom_pool.to_string() + "; im_pool=" + im_pool.to_string() + ")";
  } else if (kind == Kind::GroupNeighbors) {
    s += "(base=" + base.to_string() + ")";
  }
  return s;
}

EventualBehavior eventual_behavior(const SequenceSchema& seq, Point x) {
  const std::string xs = std::to_string(x);
  switch (seq.kind) {
    case SequenceSchema::Kind::BlockIdentities: {
      if (x == 0) return {0, Point{0}, "0 lies in every block"};
      const std::size_t k = TwoAdicFamily().index_of(x);
      return {k + 1, std::nullopt, xs + " lies only in B_" + std::to_string(k)};
    }
    case SequenceSchema::Kind::SingletonIdentities:
      return {static_cast<std::size_t>(x) + 1, std::nullopt, xs + " lies only in the " + xs + "-th domain"};
    case SequenceSchema::Kind::GrowingExtensions: {
      if (auto y = seq.base.apply(x)) return {0, y, xs + " lies in dom(base)"};
      auto fresh = fresh_domain(seq);
      if (fresh.contains(x)) {
        const auto l = static_cast<std::size_t>(fresh.rank(x));
        return {l + 1, std::nullopt, xs + " is the added source only at l = " + std::to_string(l)};
      }
      return {0, std::nullopt, xs + " is never added"};
    }
    case SequenceSchema::Kind::GroupNeighbors: {
      auto y = seq.base.apply(x);
      if (!y) return {0, std::nullopt, xs + " lies outside the block"};
      auto pool = swap_pool(seq);
      if (pool.contains(x)) {
        const auto l = static_cast<std::size_t>(pool.rank(x) / 2);
        return {l + 1, y, xs + " is swapped only at l = " + std::to_string(l)};
      }
      return {0, y, xs + " is never swapped"};
    }
  }
  return {};
}

ConvergenceResult check_convergence(const SequenceSchema& seq, const SymElement& limit, std::size_t horizon,
                                    std::size_t replay) {
  ConvergenceResult r;
  r.horizon = horizon;
  for (Point x = 0; x < horizon; ++x) {
    const auto eb = eventual_behavior(seq, x);
    const auto want = limit.apply(x);
    PointCertificate c{x, want ? 1 : 2, eb.n0, eb.reason};
    if (eb.value != want) {
      c.reason = want ? "x in dom(limit) but eventually " +
                            (eb.value ? "maps to " + std::to_string(*eb.value) : std::string("undefined")) + " (" +
                            eb.reason + ")"
                      : "x not in dom(limit) but eventually in dom (" + eb.reason + ")";
      r.counterexample = c;
      r.detail = "clause (" + std::string(c.clause == 1 ? "i" : "ii") + ") fails at x = " + std::to_string(x);
      return r;
    }
    std::size_t end = eb.n0 + replay;
    if (seq.kind == SequenceSchema::Kind::BlockIdentities) end = std::min(end, TwoAdicFamily::kMaxIndex + 1);
    for (std::size_t l = eb.n0; l < end; ++l) {
      if (seq.element(l).apply(x) != want) {
        c.reason = "element " + std::to_string(l) + " disagrees with the tail analysis";
        r.counterexample = c;
        r.detail = "replay failed at x = " + std::to_string(x);
        return r;
      }
    }
    r.certificates.push_back(std::move(c));
  }
  r.converges = true;
  r.detail = "all points below " + std::to_string(horizon) + " certified";
  return r;
}

// ---------------------------------------------------------------- isolation

const char* to_string(IsolationResult::Verdict verdict) {
  switch (verdict) {
    case IsolationResult::Verdict::Isolated: return "isolated";
    case IsolationResult::Verdict::NotIsolated: return "not-isolated";
    case IsolationResult::Verdict::Unknown: return "unknown";
  }
  return "?";
}

bool IsolationResult::certified() const {
  const bool steps = !proof.empty() && std::all_of(proof.begin(), proof.end(), [](const ProofStep& s) { return s.holds; });
  switch (verdict) {
    case Verdict::Isolated: return open.has_value() && steps;
    case Verdict::NotIsolated: return sequence.has_value() && convergence && convergence->converges && steps;
    case Verdict::Unknown: return false;
  }
  return false;
}

std::vector<ProofStep> prove_singleton(const BasicOpen& v, const SymElement& f, const ProbeSemigroup& s) {
  std::vector<ProofStep> steps;
  steps.push_back({"f in V", open_contains(v, f)});
  steps.push_back({"f in S", s.contains(f)});

  const std::size_t bound = s.bound();
  bool finite_ok = false;
  if (f.has_finite_domain()) {
    auto positives = v.positive;
    std::sort(positives.begin(), positives.end());
    finite_ok = positives == f.finite_pairs() && positives.size() == bound;
  }
  steps.push_back({"finite members of V have the " + std::to_string(bound) +
                       " positive pairs as their whole graph, so equal f",
                   finite_ok});

  auto exclude = [&](std::size_t k) {
    auto why = block_excluded(v, s.block(k));
    steps.push_back({"S_inf(B" + std::to_string(k) + ") misses V: " + why.value_or("no constraint applies"),
                     why.has_value()});
  };
  if (s.kind() == ProbeSemigroup::Kind::Pettis) {
    for (std::size_t k = 0; k < s.family()->size(); ++k) exclude(k);
    return steps;
  }
  auto all_points = v.points();
  const bool zero_forbidden =
      std::find(v.forbid_dom.begin(), v.forbid_dom.end(), Point{0}) != v.forbid_dom.end() ||
      std::find(v.forbid_im.begin(), v.forbid_im.end(), Point{0}) != v.forbid_im.end();
  if (zero_forbidden) {
    steps.push_back({"every block contains 0, which V forbids", true});
    return steps;
  }
  std::optional<Point> pinned;
  for (const auto& [a, b] : v.positive) {
    if (a != 0) pinned = a;
    else if (b != 0) pinned = b;
    if (pinned) break;
  }
  if (!pinned) {
    steps.push_back({"no constraint separates the infinitely many blocks", false});
    return steps;
  }
  const std::size_t k = TwoAdicFamily().index_of(*pinned);
  steps.push_back({"blocks other than B" + std::to_string(k) + " miss " + std::to_string(*pinned), true});
  if (k > TwoAdicFamily::kMaxIndex) {
    steps.push_back({"block index out of range", false});
    return steps;
  }
  exclude(k);
  return steps;
}

namespace {

IsolationResult not_isolated(const SymElement& f, const ProbeSemigroup& s, SequenceSchema seq, std::string reason) {
  IsolationResult r;
  r.verdict = IsolationResult::Verdict::NotIsolated;
  r.element = f;
  r.reason = std::move(reason);
  bool members = true;
  for (std::size_t l = 0; l < kMembershipReplay; ++l) {
    auto g = seq.element(l);
    members = members && s.contains(g) && g != f;
  }
  r.proof.push_back({"sequence elements 0.." + std::to_string(kMembershipReplay - 1) + " lie in S and differ from f",
                     members});
  r.convergence = check_convergence(seq, f, horizon_for(f));
  r.sequence = std::move(seq);
  return r;
}

IsolationResult isolated(const SymElement& f, const ProbeSemigroup& s, BasicOpen v, std::string reason) {
  IsolationResult r;
  r.element = f;
  r.proof = prove_singleton(v, f, s);
  const bool ok = std::all_of(r.proof.begin(), r.proof.end(), [](const ProofStep& p) { return p.holds; });
  r.verdict = ok ? IsolationResult::Verdict::Isolated : IsolationResult::Verdict::Unknown;
  r.open = std::move(v);
  r.reason = std::move(reason);
  return r;
}

std::optional<IsolationResult> group_case(const SymElement& f, const ProbeSemigroup& s) {
  auto k = s.group_block(f);
  if (!k) return std::nullopt;
  return not_isolated(f, s, SequenceSchema::group_neighbors(f, s.block(*k)),
                      "S_inf(B" + std::to_string(*k) + ") is open and has no isolated points");
}

}  // namespace

IsolationResult isolated_certificate(const SymElement& f, const ProbeSemigroup& s) {
  if (!s.contains(f)) throw NotInSemigroup(f.to_string() + " is not in " + s.to_string());
  if (auto r = group_case(f, s)) return *r;

  const auto pairs = f.finite_pairs();
  if (s.kind() == ProbeSemigroup::Kind::Pettis) {
    const auto& family = *s.family();
    if (pairs.size() < s.bound()) {
      auto st = classify(f, family.blocks());
      const std::size_t i = st.kind == Stratum::Kind::Finite ? st.i : 0;
      const std::size_t j = st.kind == Stratum::Kind::Finite ? st.j : 0;
      return not_isolated(f, s, SequenceSchema::growing_extensions(f, family.block(i), family.block(j)),
                          "f lies below the top stratum of I(B" + std::to_string(i) + ",B" + std::to_string(j) + ")");
    }
    std::vector<Point> dom;
    for (const auto& p : pairs) dom.push_back(p.first);
    std::vector<Point> forbid;
    for (std::size_t k = 0; k < family.size(); ++k) forbid.push_back(family.block(k).least(1, dom).front());
    return isolated(f, s, BasicOpen::make(pairs, forbid, {}), "top stratum: positives pin f, w1 points exclude every group");
  }

  if (pairs.empty()) {
    return not_isolated(f, s, SequenceSchema::singleton_identities(), "1_empty is the limit of 1_{{l}}");
  }
  const auto [a, b] = pairs.front();
  if (a == 0 && b == 0) {
    return not_isolated(f, s, SequenceSchema::block_identities(), "u_0 is the limit of 1_{B_l}");
  }
  if (a != 0 && b != 0) {
    return isolated(f, s, BasicOpen::make(pairs, {0}, {}), "no group avoids 0; the positive pair pins f");
  }
  const Point p = a != 0 ? a : b;
  const auto block = TwoAdicFamily().block(TwoAdicFamily().index_of(p));
  const Point y = block.least(1, std::vector<Point>{0, p}).front();
  return isolated(f, s, BasicOpen::make(pairs, {y}, {}),
                  "only B_" + std::to_string(TwoAdicFamily().index_of(p)) + " contains " + std::to_string(p) +
                      ", and w1(" + std::to_string(y) + ") excludes it");
}

// ---------------------------------------------------------------- windowed search

std::string WindowedMember::to_string() const {
  if (!group) return "finite " + projection.to_string();
  return "group " + (block ? "B" + std::to_string(*block) : std::string("B_far")) + " " + projection.to_string();
}

namespace {

struct WindowBlock {
  std::optional<std::size_t> index;
  std::vector<Point> points;
};

bool contains_point(const std::vector<Point>& v, Point x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// First permutation of `pts` satisfying V, by backtracking over the points
// in constraint-first order.
std::optional<PartialBijection> find_group_member(const BasicOpen& v, const std::vector<Point>& pts,
                                                  std::size_t window) {
  for (Point u : v.forbid_dom) {
    if (contains_point(pts, u)) return std::nullopt;
  }
  for (Point z : v.forbid_im) {
    if (contains_point(pts, z)) return std::nullopt;
  }
  std::vector<std::optional<Point>> required;
  std::vector<Point> order;
  for (const auto& [a, b] : v.positive) {
    if (!contains_point(pts, a)) return std::nullopt;
    order.push_back(a);
  }
  for (Point x : pts) {
    if (!contains_point(order, x)) order.push_back(x);
  }
  auto target_of = [&](Point x) -> std::optional<Point> {
    for (const auto& [a, b] : v.positive) {
      if (a == x) return b;
    }
    return std::nullopt;
  };
  std::vector<Pair> chosen;
  std::vector<bool> used(window, false);
  std::function<bool(std::size_t)> go = [&](std::size_t depth) {
    if (depth == order.size()) return true;
    const Point x = order[depth];
    const auto want = target_of(x);
    for (Point y : pts) {
      if (used[y] || (want && *want != y)) continue;
      used[y] = true;
      chosen.emplace_back(x, y);
      if (go(depth + 1)) return true;
      chosen.pop_back();
      used[y] = false;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return PartialBijection::from_pairs(window, chosen);
}

void extend_finite(const BasicOpen& v, const std::vector<Point>& sources, const std::vector<Point>& targets,
                   std::size_t bound, std::size_t window, std::set<PartialBijection>& out) {
  for (const auto& [a, b] : v.positive) {
    if (!contains_point(sources, a) || !contains_point(targets, b)) return;
  }
  if (v.positive.size() > bound) return;
  std::vector<Pair> graph = v.positive;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    if (out.size() >= 2) return;
    out.insert(PartialBijection::from_pairs(window, graph));
    if (graph.size() == bound) return;
    for (std::size_t xi = from; xi < sources.size(); ++xi) {
      const Point x = sources[xi];
      if (contains_point(v.forbid_dom, x)) continue;
      if (std::any_of(graph.begin(), graph.end(), [&](const Pair& p) { return p.first == x; })) continue;
      for (Point y : targets) {
        if (contains_point(v.forbid_im, y)) continue;
        if (std::any_of(graph.begin(), graph.end(), [&](const Pair& p) { return p.second == y; })) continue;
        graph.emplace_back(x, y);
        go(xi + 1);
        graph.pop_back();
        if (out.size() >= 2) return;
      }
    }
  };
  go(0);
}

}  // namespace

SingletonSearch verify_singleton(const BasicOpen& v, const SymElement& f, const ProbeSemigroup& s,
                                 std::size_t window) {
  for (Point x : v.points()) {
    if (x >= window) {
      throw WindowTooSmall("open " + v.to_string() + " mentions " + std::to_string(x) + " >= window " +
                           std::to_string(window));
    }
  }
  const PartialBijection fw = project_to_window(f, window);

  std::vector<WindowBlock> blocks;
  std::vector<Point> all_points;
  for (Point x = 0; x < window; ++x) all_points.push_back(x);
  if (s.kind() == ProbeSemigroup::Kind::Pettis) {
    for (std::size_t k = 0; k < s.family()->size(); ++k) blocks.push_back({k, s.block(k).enumerate(window)});
  } else {
    const TwoAdicFamily fam;
    for (std::size_t k = 0; k < fam.blocks_meeting(window); ++k) blocks.push_back({k, fam.block(k).enumerate(window)});
    blocks.push_back({std::nullopt, {0}});
  }

  SingletonSearch out;
  out.window = window;
  std::set<PartialBijection> finite;
  if (s.kind() == ProbeSemigroup::Kind::Pettis) {
    for (const auto& bi : blocks) {
      for (const auto& bj : blocks) extend_finite(v, bi.points, bj.points, s.bound(), window, finite);
    }
  } else {
    extend_finite(v, all_points, all_points, s.bound(), window, finite);
  }
  for (const auto& g : finite) out.members.push_back({false, std::nullopt, g});
  for (const auto& b : blocks) {
    if (out.members.size() >= 2) break;
    if (auto g = find_group_member(v, b.points, window)) out.members.push_back({true, b.index, *g});
  }
  if (out.members.size() > 2) out.members.erase(out.members.begin() + 2, out.members.end());

  if (out.members.size() == 1) {
    const auto& m = out.members.front();
    if (f.has_finite_domain()) {
      out.singleton = !m.group && m.projection == fw;
    } else {
      out.singleton = m.group && m.block == s.group_block(f) && m.projection == fw;
    }
  }
  return out;
}

// ---------------------------------------------------------------- Pettis witness

BasicOpen random_open_containing(Rng& rng, const SymElement& target, const RandomOpenLimits& limits) {
  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    auto v = random_basic_open(rng, limits);
    if (open_contains(v, target)) return v;
  }
  throw ContractViolation("no random basic open containing " + target.to_string() + " found");
}

bool PettisWitnessReport::ok() const {
  return product_is_u0 && std::all_of(trials.begin(), trials.end(), [](const PettisTrial& t) { return t.ok; });
}

PettisTrial pettis_witness_for(const BasicOpen& v) {
  const auto s = ProbeSemigroup::unpunto();
  const TwoAdicFamily fam;
  const auto u0 = SymElement::fin({{0, 0}});
  PettisTrial trial;
  trial.open = v;
  auto forbidden = v.forbid_dom;
  forbidden.insert(forbidden.end(), v.forbid_im.begin(), v.forbid_im.end());
  std::optional<std::size_t> pick;
  for (std::size_t n = 0; n <= TwoAdicFamily::kMaxIndex && !pick; ++n) {
    const auto b = fam.block(n);
    if (std::none_of(forbidden.begin(), forbidden.end(), [&](Point x) { return b.contains(x); })) pick = n;
  }
  if (!pick) {
    trial.trace.push_back("no block avoids the forbidden points");
    return trial;
  }
  trial.block = *pick;
  const std::string bn = "B" + std::to_string(*pick);
  trial.witness = SymElement::identity(fam.block(*pick));
  for (const auto& p : v.positive) {
    trial.trace.push_back("v(" + std::to_string(p.first) + "," + std::to_string(p.second) + "): " + pair_text(p) +
                          " holds in 1_" + bn);
  }
  for (Point u : v.forbid_dom) trial.trace.push_back("w1(" + std::to_string(u) + "): " + std::to_string(u) + " not in " + bn);
  for (Point z : v.forbid_im) trial.trace.push_back("w2(" + std::to_string(z) + "): " + std::to_string(z) + " not in " + bn);
  trial.ok = open_contains(v, trial.witness) && s.contains(trial.witness) && trial.witness != u0;
  return trial;
}

PettisWitnessReport pettis_witness_unpunto(std::size_t trials, std::uint64_t seed) {
  const auto u0 = SymElement::fin({{0, 0}});
  PettisWitnessReport r;
  r.a = sym_inverse(SymElement::fin({{1, 0}}));
  r.product = sym_compose(sym_inverse(r.a), r.a);
  r.product_is_u0 = r.product == u0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(Rng::derive(seed, t));
    r.trials.push_back(pettis_witness_for(random_open_containing(rng, u0)));
  }
  return r;
}

// ---------------------------------------------------------------- inverse check

bool InverseCheckReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const InverseCheckEntry& e) { return e.skipped || e.ok; });
}

InverseCheckReport isolated_inverse_check(const std::vector<SymElement>& points, const ProbeSemigroup& s) {
  InverseCheckReport r;
  for (const auto& x : points) {
    InverseCheckEntry e;
    e.x = x;
    e.x_result = isolated_certificate(x, s);
    e.product = sym_compose(sym_inverse(x), x);
    if (e.x_result.verdict != IsolationResult::Verdict::Isolated || !e.x_result.certified()) {
      e.skipped = true;
      r.entries.push_back(std::move(e));
      continue;
    }
    e.product_result = isolated_certificate(e.product, s);
    e.ok = e.product_result.verdict == IsolationResult::Verdict::Isolated && e.product_result.certified();
    r.entries.push_back(std::move(e));
  }
  return r;
}

}  // namespace pbij
