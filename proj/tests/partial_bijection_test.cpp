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

#include <set>

#include "pbij/error.hpp"
#include "support.hpp"

namespace pbij {
namespace {

using testing::compose_by_definition;
using testing::random_pbij;

TEST(Compose, EmptyAbsorbs) {
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    auto f = random_pbij(rng, 8);
    EXPECT_EQ(compose(PartialBijection(8), f), PartialBijection(8));
    EXPECT_EQ(compose(f, PartialBijection(8)), PartialBijection(8));
  }
}

TEST(Compose, PartialIdentitiesIntersect) {
  std::vector<Point> a{0, 2, 3, 7}, b{2, 5, 7}, ab{2, 7};
  EXPECT_EQ(compose(PartialBijection::identity(10, a), PartialBijection::identity(10, b)),
            PartialBijection::identity(10, ab));
}

TEST(Compose, DomainFormulaExample) {
  auto f = PartialBijection::from_pairs(6, {{1, 2}, {3, 4}});
  auto g = PartialBijection::from_pairs(6, {{0, 1}, {2, 3}});
  EXPECT_EQ(compose(f, g), PartialBijection::from_pairs(6, {{0, 2}, {2, 4}}));
}

TEST(Compose, MatchesDefinition) {
  Rng rng(2);
  for (int t = 0; t < 500; ++t) {
    auto f = random_pbij(rng, 9);
    auto g = random_pbij(rng, 9);
    EXPECT_EQ(compose(f, g), PartialBijection::from_pairs(9, compose_by_definition(f, g)));
  }
}

TEST(Compose, WindowMismatchRejected) {
  EXPECT_THROW(compose(PartialBijection(4), PartialBijection(5)), ContractViolation);
}

TEST(Compose, Associative) {
  for (std::size_t w : {6, 10, 16}) {
    Rng rng(100 + w);
    for (int t = 0; t < 1000; ++t) {
      auto f = random_pbij(rng, w), g = random_pbij(rng, w), h = random_pbij(rng, w);
      ASSERT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
    }
  }
}

TEST(Inverse, Basics) {
  std::vector<Point> a{1, 4};
  auto id = PartialBijection::identity(6, a);
  EXPECT_EQ(inverse(id), id);
  EXPECT_EQ(inverse(PartialBijection::from_pairs(4, {{1, 2}})), PartialBijection::from_pairs(4, {{2, 1}}));
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    auto f = random_pbij(rng, 12);
    EXPECT_EQ(inverse(inverse(f)), f);
  }
}

TEST(Inverse, RegularityAndAntiHomomorphism) {
  Rng rng(4);
  for (int t = 0; t < 1000; ++t) {
    auto f = random_pbij(rng, 10), g = random_pbij(rng, 10);
    auto fi = inverse(f);
    ASSERT_EQ(compose(compose(f, fi), f), f);
    ASSERT_EQ(compose(compose(fi, f), fi), fi);
    ASSERT_EQ(compose(fi, f), PartialBijection::identity(10, f.domain()));
    ASSERT_EQ(compose(f, fi), PartialBijection::identity(10, f.image()));
    ASSERT_EQ(inverse(compose(f, g)), compose(inverse(g), fi));
  }
}

// All partial bijections of [0, n), by extending a prefix one source at a time.
std::vector<PartialBijection> all_partial_bijections(std::size_t n) {
  std::vector<PartialBijection> out;
  std::vector<Pair> pairs;
  std::vector<bool> used(n, false);
  auto rec = [&](auto& self, std::size_t x) -> void {
    if (x == n) {
      out.push_back(PartialBijection::from_pairs(n, pairs));
      return;
    }
    self(self, x + 1);
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y]) continue;
      used[y] = true;
      pairs.emplace_back(x, y);
      self(self, x + 1);
      pairs.pop_back();
      used[y] = false;
    }
  };
  rec(rec, 0);
  return out;
}

TEST(Idempotent, CharacterizationByExhaustion) {
  auto all = all_partial_bijections(4);
  ASSERT_EQ(all.size(), 209u);  // sum_k C(4,k)^2 k!
  std::size_t count = 0;
  for (const auto& f : all) {
    bool partial_identity = f == PartialBijection::identity(4, f.domain());
    EXPECT_EQ(is_idempotent(f), compose(f, f) == f);
    EXPECT_EQ(is_idempotent(f), partial_identity);
    count += is_idempotent(f) ? 1 : 0;
  }
  EXPECT_EQ(count, 16u);
  std::vector<Point> pts{0, 3, 5};
  EXPECT_TRUE(is_idempotent(PartialBijection::identity(6, pts)));
  EXPECT_FALSE(is_idempotent(PartialBijection::from_pairs(3, {{1, 2}})));
  EXPECT_TRUE(is_idempotent(PartialBijection(3)));
}

TEST(Idempotent, SetOfIdempotents) {
  auto all = all_partial_bijections(3);
  auto e = idempotents(all);
  EXPECT_EQ(e.members.size(), 8u);
  for (const auto& m : e.members) EXPECT_EQ(compose(m, m), m);
}

TEST(Projections, ReadOff) {
  auto f = PartialBijection::from_pairs(6, {{0, 2}, {2, 4}});
  auto p = projections(f);
  EXPECT_EQ(p.domain, (std::vector<Point>{0, 2}));
  EXPECT_EQ(p.image, (std::vector<Point>{2, 4}));
  EXPECT_EQ(p.ev(2), 4u);
  EXPECT_THROW(p.ev(1), OutOfDomain);
  auto e = projections(PartialBijection(5));
  EXPECT_TRUE(e.domain.empty());
  EXPECT_TRUE(e.image.empty());
  EXPECT_THROW(e.ev(0), OutOfDomain);
  EXPECT_EQ(PartialBijection::from_pairs(8, {{2, 7}}).eval(2), 7u);
}

TEST(Literal, RoundTrip) {
  auto f = PartialBijection::from_pairs(6, {{3, 4}, {1, 2}});
  EXPECT_EQ(f.to_string(), "{1->2, 3->4}@6");
  EXPECT_EQ(PartialBijection::parse("{1->2, 3->4}@6"), f);
  EXPECT_EQ(PartialBijection::parse("{}@4"), PartialBijection(4));
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    auto g = random_pbij(rng, 11);
    EXPECT_EQ(PartialBijection::parse(g.to_string()), g);
  }
}

TEST(Literal, Rejects) {
  EXPECT_THROW(PartialBijection::parse("{1->2, 1->3}@6"), ParseError);
  EXPECT_THROW(PartialBijection::parse("{1->9}@6"), ParseError);
  EXPECT_THROW(PartialBijection::parse("{1->2"), ParseError);
  EXPECT_THROW(PartialBijection::from_pairs(5, {{1, 2}, {3, 2}}), ContractViolation);
}

TEST(Hash, DistinguishesWindows) {
  std::set<std::size_t> hashes;
  for (std::size_t w = 1; w < 20; ++w) hashes.insert(PartialBijection(w).hash());
  EXPECT_EQ(hashes.size(), 19u);
}

}  // namespace
}  // namespace pbij
