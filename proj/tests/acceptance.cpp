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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "commands.hpp"
#include "pbij/basic_open.hpp"
#include "pbij/block_family.hpp"
#include "pbij/closure.hpp"
#include "pbij/constrained.hpp"
#include "pbij/error.hpp"
#include "pbij/topology.hpp"
#include "pbij/windowed.hpp"
#include "support.hpp"

namespace pbij {
namespace {

using testing::disjoint_family;
using testing::family_with_weights;
using testing::one_point_family;
using testing::p_matrix_by_chains;
using testing::random_weights;
using testing::two_point_family;

struct Outcome {
  bool pass = true;
  std::string detail;
};

constexpr std::size_t kMaxWindow = 24;
constexpr std::size_t kMaxBlockPoints = 7;

struct SizedFamily {
  BlockFamily family;
  std::size_t window;
};

// Residue classes mod m split among k blocks; every pair of blocks then
// meets in n extra points, either one shared set or a private set per pair.
std::optional<SizedFamily> try_uniform_family(Rng& rng, std::size_t n) {
  const std::size_t k = rng.between(2, 4);
  const Point m = rng.between(k, 12);
  std::vector<std::vector<Point>> residues(k);
  std::vector<int> owner(m, -1);
  for (Point r = 0; r < m; ++r) {
    int b = r < k ? static_cast<int>(r) : static_cast<int>(rng.below(k + 1)) - 1;
    if (b >= 0) residues[b].push_back(r);
    owner[r] = b;
  }
  const Point span = rng.between(10, kMaxWindow);
  std::vector<std::vector<Point>> extra(k);
  std::set<Point> used;
  auto draw = [&](std::function<bool(int)> allowed) -> std::optional<Point> {
    std::vector<Point> cands;
    for (Point p = 0; p < span; ++p) {
      if (!used.count(p) && allowed(owner[p % m])) cands.push_back(p);
    }
    if (cands.empty()) return std::nullopt;
    Point p = rng.pick(cands);
    used.insert(p);
    return p;
  };
  if (n > 0 && (k == 2 || rng.coin())) {
    for (std::size_t t = 0; t < n; ++t) {
      auto p = draw([](int) { return true; });
      if (!p) return std::nullopt;
      for (std::size_t a = 0; a < k; ++a) {
        if (owner[*p % m] != static_cast<int>(a)) extra[a].push_back(*p);
      }
    }
  } else {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        for (std::size_t t = 0; t < n; ++t) {
          auto p = draw([&](int o) { return o < 0 || o == static_cast<int>(a) || o == static_cast<int>(b); });
          if (!p) return std::nullopt;
          if (owner[*p % m] != static_cast<int>(a)) extra[a].push_back(*p);
          if (owner[*p % m] != static_cast<int>(b)) extra[b].push_back(*p);
        }
      }
    }
  }
  std::vector<SetDescriptor> blocks;
  for (std::size_t a = 0; a < k; ++a) blocks.push_back(SetDescriptor::from_parts(extra[a], m, residues[a]));
  auto family = BlockFamily::create(blocks);
  if (family.uniform_n() != std::optional<std::size_t>(n)) return std::nullopt;
  for (std::size_t w = 1; w <= kMaxWindow; ++w) {
    try {
      require_headroom(family, w);
    } catch (const Error&) {
      continue;
    }
    for (const auto& a : windowed_blocks(family, w)) {
      if (a.size() > kMaxBlockPoints) return std::nullopt;
    }
    return SizedFamily{family, w};
  }
  return std::nullopt;
}

SizedFamily uniform_family(Rng& rng, std::size_t n) {
  for (;;) {
    if (auto f = try_uniform_family(rng, n)) return *f;
  }
}

std::vector<SizedFamily> c1_families(std::uint64_t seed, std::size_t count) {
  std::vector<SizedFamily> out;
  for (std::size_t t = 0; t < count; ++t) {
    Rng rng(Rng::derive(seed, t));
    out.push_back(uniform_family(rng, t % 3));
  }
  return out;
}

Outcome c1_closure() {
  const auto start = std::chrono::steady_clock::now();
  const auto families = c1_families(101, 24);
  std::size_t equal = 0, elements = 0;
  std::string first_bad;
  for (const auto& [family, w] : families) {
    auto r = close(block_group_generators(family, w), 2'000'000);
    if (r.complete) {
      auto d = compare_with_structural(r, family, w);
      elements += r.elements.size();
      if (d.empty()) {
        ++equal;
        continue;
      }
    }
    if (first_bad.empty()) first_bad = " first mismatch at W=" + std::to_string(w);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.pass = equal == families.size() && secs <= 300.0;
  o.detail = std::to_string(equal) + "/" + std::to_string(families.size()) +
             " random families: closure equals structural set (" + std::to_string(elements) + " elements, " +
             std::to_string(static_cast<int>(secs)) + " s)" + first_bad;
  return o;
}

std::size_t prop22_window(const BlockFamily& family) {
  for (std::size_t w = 1;; ++w) {
    try {
      require_intersections_inside(family, w);
      return std::max<std::size_t>(w, 8);
    } catch (const WindowTooSmall&) {
    }
  }
}

Outcome c2_prop22() {
  Rng rng(202);
  std::size_t violating = 0, satisfying = 0;
  for (int t = 0; t < 10; ++t) {
    BlockFamily family = family_with_weights(random_weights(rng, rng.between(2, 4), 3));
    while (family.max_intersection() == 0) family = family_with_weights(random_weights(rng, rng.between(2, 4), 3));
    const std::size_t mx = family.max_intersection();
    const std::size_t n = rng.below(mx);
    auto v = check_prop22(family, n, prop22_window(family));
    if (v.violation && !v.closed) {
      const auto& x = *v.violation;
      const std::size_t size = x.composite_window.size();
      if (size == family.weight(x.i, x.j) && size > n && x.composite.domain_size() == size &&
          x.composite == sym_compose(x.f, x.g)) {
        ++violating;
      }
    }
  }
  for (int t = 0; t < 10; ++t) {
    auto family = t % 2 == 0 ? uniform_family(rng, rng.below(3)).family
                             : family_with_weights(random_weights(rng, rng.between(2, 3), 2));
    const std::size_t n = family.max_intersection() + rng.below(2);
    auto v = check_prop22(family, n, prop22_window(family));
    if (v.closed && !v.violation) ++satisfying;
  }
  return {violating == 10 && satisfying == 10,
          std::to_string(violating) + "/10 violating families give an escaping composite, " +
              std::to_string(satisfying) + "/10 satisfying families certified closed"};
}

Outcome c3_pmatrix() {
  std::vector<Matrix> cases;
  for (const auto& f : {disjoint_family(), one_point_family(), two_point_family()}) cases.push_back(f.weights());
  for (const auto& sf : c1_families(101, 24)) cases.push_back(sf.family.weights());
  Rng rng(303);
  for (int t = 0; t < 300; ++t) cases.push_back(random_weights(rng, rng.between(1, 6), 4));
  cases.push_back(Matrix{{0, 0}, {0, 0}});
  std::size_t agree = 0;
  for (const auto& w : cases) {
    auto dp = p_matrix_from_weights(w);
    if (dp == p_matrix_by_paths(w) && dp == p_matrix_by_chains(w, w.size())) ++agree;
  }
  return {agree == cases.size(), std::to_string(agree) + "/" + std::to_string(cases.size()) +
                                     " families: dynamic programming equals path and chain enumeration"};
}

bool factor_shape_ok(const Factor& f, const BlockFamily& family) {
  const auto& b = family.block(f.block);
  if (f.role == Factor::Role::BlockIdentity) return f.element == SymElement::identity(b);
  return f.element.domain() == b && f.element.image() == b;
}

Outcome c4_factorize() {
  std::size_t total = 0, good = 0;
  for (const auto& [family, window] : {std::pair{disjoint_family(), std::size_t{12}},
                                       std::pair{one_point_family(), std::size_t{13}},
                                       std::pair{two_point_family(), std::size_t{16}}}) {
    auto s = StratifiedSemigroup::generated(family);
    WindowedStructure ws(s, window);
    for (const auto& e : ws.enumerate()) {
      SymElement lifted = SymElement::from_window(e);
      for (std::size_t i = 0; i < family.size(); ++i) {
        if (!ws.blocks()[i].empty() && e.domain() == ws.blocks()[i] && e.image() == ws.blocks()[i]) {
          auto moved = e.pairs();
          std::erase_if(moved, [](const Pair& p) { return p.first == p.second; });
          lifted = SymElement::block_perm(family.block(i), moved);
          break;
        }
      }
      ++total;
      try {
        auto fz = factorize(lifted, family);
        bool ok = recompose(fz) == lifted;
        for (const auto& f : fz.factors) ok = ok && factor_shape_ok(f, family);
        good += ok ? 1 : 0;
      } catch (const Error&) {
      }
    }
  }
  return {good == total, std::to_string(good) + "/" + std::to_string(total) +
                             " windowed stratum elements factor into block generators and recompose"};
}

Outcome c5_unpunto() {
  const auto s = ProbeSemigroup::unpunto();
  const auto u1_inv = SymElement::fin({{0, 1}});
  const auto product = sym_compose(sym_inverse(u1_inv), u1_inv);
  const bool product_ok = product == SymElement::identity(SetDescriptor::finite({0}));

  std::vector<SymElement> points;
  const std::vector<Point> xs{1, 2, 3, 5, 6};
  for (Point x : xs) {
    points.push_back(SymElement::fin({{x, 0}}));
    points.push_back(SymElement::fin({{0, x}}));
    for (Point y : xs) points.push_back(sym_compose(SymElement::fin({{0, y}}), SymElement::fin({{x, 0}})));
  }
  std::size_t certified = 0, searches = 0, singletons = 0;
  for (const auto& f : points) {
    auto c = isolated_certificate(f, s);
    if (c.verdict != IsolationResult::Verdict::Isolated || !c.certified()) continue;
    ++certified;
    for (std::size_t w : {12u, 20u, 28u}) {
      ++searches;
      singletons += verify_singleton(*c.open, f, s, w).singleton ? 1 : 0;
    }
  }

  const auto u0 = SymElement::fin({{0, 0}});
  auto report = pettis_witness_unpunto(100, 505);
  std::size_t distinct = 0;
  for (const auto& t : report.trials) {
    if (t.ok && open_contains(t.open, u0) && open_contains(t.open, t.witness) && t.witness != u0 &&
        s.contains(t.witness)) {
      ++distinct;
    }
  }
  const bool pass = product_ok && report.product_is_u0 && certified == points.size() && singletons == searches &&
                    distinct == 100;
  return {pass, std::string("A^-1 A = ") + product.to_string() + "; " + std::to_string(certified) + "/" +
                    std::to_string(points.size()) + " points certified, " + std::to_string(singletons) + "/" +
                    std::to_string(searches) + " windowed searches singleton; " + std::to_string(distinct) +
                    "/100 opens around u_0 hold another member"};
}

Outcome c6_nonpp() {
  const auto evens = SetDescriptor::residue_class(0, 2);
  std::string detail;
  bool pass = true;
  for (const auto& ideal : {IdealModel::fin(), IdealModel::empty()}) {
    std::size_t certified = 0;
    for (std::size_t t = 0; t < 50; ++t) {
      Rng rng(Rng::derive(606, t));
      const auto v = random_basic_open(rng);
      const auto w = nonpp_witness(v, ideal, evens);
      const bool independent = open_contains(v, w.f) && w.dom_complement == complement(w.f.domain()) &&
                               w.im_complement == complement(w.f.image()) && w.j.contains(w.dom_complement) &&
                               !ideal.contains(w.dom_complement) && w.j.contains(w.im_complement) &&
                               !ideal.contains(w.im_complement);
      certified += w.certified() && independent ? 1 : 0;
    }
    pass = pass && certified == 50;
    detail += (detail.empty() ? "" : ", ") + ideal.to_string() + " " + std::to_string(certified) + "/50";
  }
  return {pass, "nonPP witnesses certified: " + detail};
}

Outcome c7_convergence() {
  const auto u0 = SymElement::fin({{0, 0}});
  auto a = check_convergence(SequenceSchema::block_identities(), u0, 64);
  auto b = check_convergence(SequenceSchema::singleton_identities(), SymElement::empty(), 64);
  auto c = check_convergence(SequenceSchema::block_identities(), SymElement::empty(), 64);
  const bool c_ok = !c.converges && c.counterexample && c.counterexample->x == 0 && c.counterexample->clause == 2;

  cli::RunConfig cfg;
  cfg.schema = "growing-extensions";
  cfg.seed = 707;
  cfg.trials = 20;
  cfg.horizon = 64;
  auto r = cli::verify_convergence(cfg);
  const bool grow = r.exit_code() == 0 && r.witnesses["runs"].size() == 20;
  return {a.converges && b.converges && c_ok && grow,
          std::string("1_{B_n} -> u_0 ") + (a.converges ? "converges" : "FAILS") + ", 1_{{n}} -> 1_empty " +
              (b.converges ? "converges" : "FAILS") + ", 1_{B_n} -> 1_empty " +
              (c_ok ? "fails at x=0 clause (ii)" : "WRONG") + ", growing extensions " + r.verdicts().front().detail};
}

Outcome c8_commutation() {
  std::size_t ok = 0, total = 0;
  for (Point w : {16, 32}) {
    Rng rng(808 + w);
    for (int t = 0; t < 1000; ++t) {
      auto f = random_sym_element(rng, w), g = random_sym_element(rng, w);
      ++total;
      ok += project_to_window(sym_compose(f, g), w) == compose(project_to_window(f, w), project_to_window(g, w));
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " pairs commute with projection at W 16, 32"};
}

Outcome c9_determinism() {
  std::vector<std::pair<std::string, std::function<cli::Report()>>> runs;
  auto cfg = [](std::uint64_t seed) {
    cli::RunConfig c;
    c.seed = seed;
    return c;
  };
  runs.emplace_back("nonpp fin", [&] { auto c = cfg(11); c.trials = 50; return cli::verify_nonpp(c); });
  runs.emplace_back("nonpp empty", [&] {
    auto c = cfg(11);
    c.ideal = "empty";
    c.trials = 50;
    return cli::verify_nonpp(c);
  });
  runs.emplace_back("pettis-witness", [&] { auto c = cfg(5); c.trials = 100; return cli::verify_pettis_witness(c); });
  runs.emplace_back("convergence", [&] {
    auto c = cfg(707);
    c.schema = "growing-extensions";
    return cli::verify_convergence(c);
  });
  for (const char* coll : {"at-most:2", "schreier", "initial-segments", "ideal:fin", "co-ideal:fin"}) {
    runs.emplace_back(std::string("sc-laws ") + coll, [&, coll] {
      auto c = cfg(3);
      c.collection = coll;
      return cli::verify_sc_laws(c);
    });
  }
  std::size_t same = 0;
  std::string bad;
  for (const auto& [name, fn] : runs) {
    if (fn().body().dump() == fn().body().dump()) {
      ++same;
    } else {
      bad += " " + name;
    }
  }
  auto digest = [](const std::vector<SizedFamily>& fs) {
    std::string s;
    for (const auto& f : fs) {
      for (const auto& b : f.family.blocks()) s += b.to_string() + ";";
      s += std::to_string(f.window) + "|";
    }
    return s;
  };
  const bool families_same = digest(c1_families(101, 24)) == digest(c1_families(101, 24));
  return {same == runs.size() && families_same,
          std::to_string(same) + "/" + std::to_string(runs.size()) +
              " seeded reports byte-identical on rerun; random family generation " +
              (families_same ? "repeatable" : "NOT repeatable") + bad};
}

}  // namespace
}  // namespace pbij

int main() {
  using pbij::Outcome;
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"C1 closure/structure equivalence", pbij::c1_closure},
      {"C2 intersection bound both directions", pbij::c2_prop22},
      {"C3 P matrix", pbij::c3_pmatrix},
      {"C4 factorization soundness", pbij::c4_factorize},
      {"C5 one-point example suite", pbij::c5_unpunto},
      {"C6 non-Pettis witnesses", pbij::c6_nonpp},
      {"C7 convergence catalog", pbij::c7_convergence},
      {"C8 projection commutes with composition", pbij::c8_commutation},
      {"C9 determinism", pbij::c9_determinism},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
