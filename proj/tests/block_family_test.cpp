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


#include <gtest/gtest.h>

#include "pbij/error.hpp"
#include "pbij/windowed.hpp"
#include "support.hpp"

namespace pbij {
namespace {

using namespace pbij::testing;

// 0-based version of the weights {12:3, 23:1, 34:3, 45:2, 15:2}.
Matrix five_block_weights() {
  Matrix w(5, std::vector<std::size_t>(5, 0));
  auto set = [&](std::size_t a, std::size_t b, std::size_t v) { w[a][b] = w[b][a] = v; };
  set(0, 1, 3);
  set(1, 2, 1);
  set(2, 3, 3);
  set(3, 4, 2);
  set(0, 4, 2);
  return w;
}

TEST(Family, RejectsBadInput) {
  EXPECT_THROW(BlockFamily::create({}), ContractViolation);
  EXPECT_THROW(BlockFamily::create({SetDescriptor::finite({1, 2})}), ContractViolation);
  EXPECT_THROW(BlockFamily::create({SetDescriptor::residue_class(0, 2), SetDescriptor::residue_class(0, 4)}),
               NotAlmostDisjoint);
}

TEST(Family, IntersectionData) {
  auto f = one_point_family();
  EXPECT_EQ(f.uniform_n(), std::optional<std::size_t>(1));
  EXPECT_EQ(f.intersection(1, 2), SetDescriptor::finite({0}));
  EXPECT_EQ(disjoint_family().uniform_n(), std::optional<std::size_t>(0));
  EXPECT_EQ(two_point_family().max_intersection(), 2u);
  auto fw = family_with_weights(five_block_weights());
  EXPECT_EQ(fw.weights(), five_block_weights());
  EXPECT_FALSE(fw.uniform_n().has_value());
}

TEST(PMatrix, Examples) {
  for (const auto& row : p_matrix(disjoint_family())) {
    for (auto v : row) EXPECT_EQ(v, 0u);
  }
  // Four blocks of the one-point shape.
  std::vector<Point> zero{0};
  std::vector<SetDescriptor> b{SetDescriptor::residue_class(0, 4)};
  for (Point r = 1; r < 4; ++r) b.push_back(SetDescriptor::from_parts(zero, 4, std::vector<Point>{r}));
  for (const auto& row : p_matrix(BlockFamily::create(b))) {
    for (auto v : row) EXPECT_EQ(v, 1u);
  }
  EXPECT_EQ(p_matrix(BlockFamily::create({SetDescriptor::naturals()})), Matrix{{0}});
}

TEST(PMatrix, FiveBlockOracle) {
  auto w = five_block_weights();
  auto p = p_matrix_from_weights(w);
  EXPECT_EQ(p, p_matrix_by_chains(w, 5));
  EXPECT_EQ(p[0][3], 2u);
  EXPECT_EQ(p[0][1], 3u);
  EXPECT_EQ(p[1][2], 2u);
  EXPECT_EQ(p[0][0], 3u);
}

TEST(PMatrix, AgreesWithChainEnumeration) {
  Rng rng(31);
  for (int t = 0; t < 120; ++t) {
    std::size_t n = rng.between(1, 6);
    auto w = random_weights(rng, n, 4);
    ASSERT_EQ(p_matrix_from_weights(w), p_matrix_by_chains(w, n));
  }
}

TEST(PMatrix, PathEnumerationAgrees) {
  Rng rng(33);
  for (int t = 0; t < 150; ++t) {
    std::size_t n = rng.between(1, 6);
    auto w = random_weights(rng, n, 5);
    auto paths = p_matrix_by_paths(w);
    ASSERT_EQ(paths, p_matrix_from_weights(w));
    ASSERT_EQ(paths, p_matrix_by_chains(w, n));
  }
  EXPECT_THROW(p_matrix_by_paths(Matrix(kMaxPathBlocks + 1, std::vector<std::size_t>(kMaxPathBlocks + 1, 0))),
               UnsupportedConfiguration);
}

TEST(PMatrix, AgreesOnRealizedFamilies) {
  Rng rng(32);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = rng.between(2, 5);
    auto fam = family_with_weights(random_weights(rng, n, 3));
    ASSERT_EQ(p_matrix(fam), p_matrix_by_chains(fam.weights(), n));
  }
}

TEST(MChain, Examples) {
  auto f = one_point_family();
  auto c = m_chain(f, 1, 1, 1);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->interior, std::vector<std::size_t>{0});
  EXPECT_TRUE(is_valid_chain(*c, f.weights()));
  EXPECT_FALSE(m_chain(disjoint_family(), 0, 1, 1).has_value());
  EXPECT_FALSE(m_chain(disjoint_family(), 0, 0, 1).has_value());

  auto fw = family_with_weights(five_block_weights());
  auto two = m_chain(fw, 0, 3, 2);
  ASSERT_TRUE(two.has_value());
  EXPECT_EQ(two->interior, std::vector<std::size_t>{4});
  EXPECT_EQ(two->to_string(), "B0 -> B4 -> B3 (m=2)");
  EXPECT_FALSE(m_chain(fw, 0, 3, 3).has_value());
}

TEST(MChain, ExistsExactlyUpToP) {
  Rng rng(33);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = rng.between(1, 6);
    auto fam = family_with_weights(random_weights(rng, n, 3));
    auto p = p_matrix(fam);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t m = 0; m <= 4; ++m) {
          auto c = m_chain(fam, i, j, m);
          bool expected = m <= p[i][j] && (i != j || n > 1);
          ASSERT_EQ(c.has_value(), expected) << i << " " << j << " " << m;
          if (c) ASSERT_TRUE(is_valid_chain(*c, fam.weights()));
        }
      }
    }
  }
}

TEST(ChainValidity, RejectsReturningThroughStart) {
  auto f = one_point_family();
  EXPECT_FALSE(is_valid_chain({1, 1, {1}, 1}, f.weights()));
  EXPECT_FALSE(is_valid_chain({1, 1, {}, 0}, f.weights()));
  EXPECT_TRUE(is_valid_chain({1, 1, {2}, 1}, f.weights()));
  EXPECT_FALSE(is_valid_chain({1, 2, {}, 2}, f.weights()));
}

TEST(Membership, Examples) {
  auto s = StratifiedSemigroup::generated(one_point_family());
  EXPECT_TRUE(s.contains(SymElement::empty()));
  EXPECT_TRUE(s.contains(SymElement::fin({{4, 0}})));
  EXPECT_FALSE(s.contains(SymElement::fin({{1, 4}, {4, 1}})));
  EXPECT_TRUE(s.contains(SymElement::block_perm(s.family().block(1), {{1, 4}, {4, 1}})));
  EXPECT_FALSE(s.contains(SymElement::identity(SetDescriptor::residue_class(0, 6))));

  auto u2 = StratifiedSemigroup::generated(two_point_family());
  EXPECT_TRUE(u2.contains(SymElement::fin({{1, 2}, {5, 6}})));
  EXPECT_FALSE(u2.contains(SymElement::fin({{1, 2}, {5, 6}, {9, 10}})));

  auto d = StratifiedSemigroup::generated(disjoint_family());
  EXPECT_FALSE(d.contains(SymElement::fin({{0, 3}})));
  EXPECT_TRUE(d.contains(SymElement::empty()));
  EXPECT_FALSE(StratifiedSemigroup::generated(BlockFamily::create({SetDescriptor::naturals()}))
                   .contains(SymElement::empty()));
}

TEST(Membership, InvariantUnderInverse) {
  Rng rng(34);
  auto fam = family_with_weights(five_block_weights());
  auto s = StratifiedSemigroup::generated(fam);
  for (int t = 0; t < 500; ++t) {
    auto f = random_sym(rng, 40);
    ASSERT_EQ(s.contains(f), s.contains(sym_inverse(f))) << f.to_string();
  }
}

void expect_factorizes(const SymElement& f, const BlockFamily& fam) {
  auto fz = factorize(f, fam);
  ASSERT_FALSE(fz.factors.empty());
  for (const auto& factor : fz.factors) {
    const auto& b = fam.block(factor.block);
    if (factor.derived()) {
      ASSERT_EQ(factor.element, SymElement::identity(b));
    } else {
      ASSERT_EQ(factor.element.kind(), SymKind::BlockPerm);
      ASSERT_EQ(factor.element.domain(), b);
    }
  }
  ASSERT_EQ(recompose(fz), f) << f.to_string();
}

TEST(Factorize, PaperShapes) {
  auto u2 = two_point_family();
  // Top stratum across two blocks: h then g.
  auto top = factorize(SymElement::fin({{1, 2}, {5, 6}}), u2);
  EXPECT_EQ(top.factors.size(), 2u);
  EXPECT_EQ(recompose(top), SymElement::fin({{1, 2}, {5, 6}}));
  // One point below the top: a third block absorbs the surplus.
  auto lower = factorize(SymElement::fin({{1, 2}}), u2);
  EXPECT_EQ(lower.factors.size(), 3u);
  EXPECT_EQ(recompose(lower), SymElement::fin({{1, 2}}));
  // Same block on both sides.
  auto same = factorize(SymElement::fin({{1, 5}, {5, 9}}), u2);
  EXPECT_EQ(same.walk.front(), 0u);
  EXPECT_EQ(same.walk.back(), 0u);
  EXPECT_EQ(recompose(same), SymElement::fin({{1, 5}, {5, 9}}));
}

TEST(Factorize, EmptyMap) {
  expect_factorizes(SymElement::empty(), disjoint_family());
  expect_factorizes(SymElement::empty(), one_point_family());
  expect_factorizes(SymElement::empty(), two_point_family());
  EXPECT_THROW(factorize(SymElement::empty(), BlockFamily::create({SetDescriptor::naturals()})), NotInSemigroup);
}

TEST(Factorize, RejectsNonMembers) {
  EXPECT_THROW(factorize(SymElement::fin({{0, 3}}), disjoint_family()), NotInSemigroup);
  EXPECT_THROW(factorize(SymElement::fin({{1, 2}, {4, 5}}), one_point_family()), NotInSemigroup);
}

TEST(Factorize, TwoBlockFamiliesUseFourFactorsWhenNeeded) {
  std::vector<Point> shared{0, 3};
  auto fam = BlockFamily::create({SetDescriptor::from_parts(shared, 3, std::vector<Point>{1}),
                                  SetDescriptor::from_parts(shared, 3, std::vector<Point>{2})});
  auto fz = factorize(SymElement::fin({{1, 2}}), fam);
  EXPECT_EQ(fz.walk, (std::vector<std::size_t>{0, 1, 0, 1}));
  EXPECT_EQ(recompose(fz), SymElement::fin({{1, 2}}));
}

TEST(Factorize, WindowedStrataOfBenchmarkFamilies) {
  for (const auto& [fam, window] : {std::pair{disjoint_family(), std::size_t{12}},
                                    std::pair{one_point_family(), std::size_t{13}},
                                    std::pair{two_point_family(), std::size_t{16}}}) {
    auto s = StratifiedSemigroup::generated(fam);
    WindowedStructure ws(s, window);
    std::size_t count = 0;
    for (const auto& e : ws.enumerate()) {
      auto lifted = SymElement::from_window(e);
      bool group = false;
      for (std::size_t i = 0; i < fam.size(); ++i) {
        if (e.domain() == ws.blocks()[i] && e.image() == ws.blocks()[i]) group = true;
      }
      if (group) continue;
      ASSERT_TRUE(s.contains(lifted)) << lifted.to_string();
      expect_factorizes(lifted, fam);
      ++count;
    }
    EXPECT_GT(count, 0u);
    for (std::size_t i = 0; i < fam.size(); ++i) {
      const auto& a = ws.blocks()[i];
      for (const auto& g : symmetric_group(std::span<const Point>(a.data(), std::min<std::size_t>(a.size(), 4)), window)) {
        auto moved = g.pairs();
        std::erase_if(moved, [](const Pair& p) { return p.first == p.second; });
        expect_factorizes(SymElement::block_perm(fam.block(i), moved), fam);
      }
    }
  }
}

TEST(Factorize, RandomFamilies) {
  Rng rng(35);
  for (int t = 0; t < 30; ++t) {
    auto fam = family_with_weights(random_weights(rng, rng.between(2, 5), 3));
    auto p = p_matrix(fam);
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t i = rng.below(fam.size()), j = rng.below(fam.size());
      if (p[i][j] == 0) continue;
      std::size_t k = rng.between(1, p[i][j]);
      auto xs = fam.block(i).least(k + 6);
      auto ys = fam.block(j).least(k + 6);
      rng.shuffle(xs);
      rng.shuffle(ys);
      std::vector<Pair> pairs;
      for (std::size_t a = 0; a < k; ++a) pairs.emplace_back(xs[a], ys[a]);
      expect_factorizes(SymElement::fin(pairs), fam);
    }
  }
}

TEST(Prop22, Examples) {
  auto closed = check_prop22(disjoint_family(), 0, 12);
  EXPECT_TRUE(closed.closed);
  EXPECT_FALSE(closed.violation.has_value());

  auto open = check_prop22(one_point_family(), 0, 12);
  EXPECT_FALSE(open.closed);
  ASSERT_TRUE(open.violation.has_value());
  EXPECT_EQ(open.violation->composite.domain_size(), 1u);
  EXPECT_EQ(open.violation->composite_window.size(), 1u);
  EXPECT_EQ(open.violation->stratum.kind, Stratum::Kind::Finite);

  std::vector<Point> shared{0, 3};
  auto fam = BlockFamily::create({SetDescriptor::from_parts(shared, 3, std::vector<Point>{1}),
                                  SetDescriptor::from_parts(shared, 3, std::vector<Point>{2}),
                                  SetDescriptor::from_parts(std::vector<Point>{}, 3, std::vector<Point>{0},
                                                            std::vector<Point>{0, 3})});
  EXPECT_TRUE(check_prop22(fam, 2, 18).closed);
  EXPECT_THROW(check_prop22(fam, 2, 3), WindowTooSmall);
}

TEST(Prop22, AgreesWithBruteForceProducts) {
  // The generator-based certificate matches checking every product.
  auto fam = one_point_family();
  for (std::size_t n : {1u, 2u}) {
    auto v = check_prop22(fam, n, 10);
    WindowedStructure s(StratifiedSemigroup::displayed(fam, n), 10);
    auto all = s.enumerate();
    bool closed = true;
    for (const auto& a : all) {
      for (const auto& b : all) closed = closed && s.contains(compose(a, b));
    }
    EXPECT_EQ(v.closed, closed);
    EXPECT_EQ(v.elements, all.size());
  }
}

}  // namespace
}  // namespace pbij
