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

#include <numeric>

#include "pbij/error.hpp"
#include "support.hpp"

namespace pbij {
namespace {

using testing::random_descriptor;

SetDescriptor evens() { return SetDescriptor::residue_class(0, 2); }
SetDescriptor odds() { return SetDescriptor::residue_class(1, 2); }
SetDescriptor zero_plus(Point r) { return SetDescriptor::from_parts(std::vector<Point>{0}, 3, std::vector<Point>{r}); }

std::vector<bool> bitmap(const SetDescriptor& d, Point bound) {
  std::vector<bool> v(bound);
  for (Point x = 0; x < bound; ++x) v[x] = d.contains(x);
  return v;
}

TEST(Member, Basics) {
  EXPECT_TRUE(evens().contains(4));
  EXPECT_FALSE(evens().contains(7));
  EXPECT_TRUE(zero_plus(1).contains(0));
  EXPECT_TRUE(zero_plus(1).contains(4));
  EXPECT_FALSE(zero_plus(1).contains(3));
}

TEST(Intersect, Examples) {
  EXPECT_TRUE(intersect(evens(), odds()).is_empty());
  EXPECT_EQ(intersect(evens(), SetDescriptor::residue_class(0, 3)), SetDescriptor::residue_class(0, 6));
  EXPECT_EQ(intersect(zero_plus(1), zero_plus(2)), SetDescriptor::finite({0}));
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(evens()), odds());
  auto c = complement(zero_plus(1));
  EXPECT_EQ(c, SetDescriptor::from_parts({}, 3, std::vector<Point>{0, 2}, std::vector<Point>{0}));
  for (Point x = 0; x < 60; ++x) EXPECT_EQ(c.contains(x), !zero_plus(1).contains(x)) << x;
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    auto d = random_descriptor(rng);
    EXPECT_EQ(complement(complement(d)), d) << d.to_string();
  }
}

TEST(FiniteIntersectionSize, Examples) {
  EXPECT_EQ(finite_intersection_size(evens(), odds()), Cardinality::finite(0));
  EXPECT_EQ(finite_intersection_size(zero_plus(1), zero_plus(2)), Cardinality::finite(1));
  EXPECT_EQ(finite_intersection_size(evens(), SetDescriptor::residue_class(0, 4)), Cardinality::infinite());
}

TEST(FiniteIntersectionSize, AgreesWithCounting) {
  Rng rng(12);
  for (int t = 0; t < 500; ++t) {
    auto a = random_descriptor(rng), b = random_descriptor(rng);
    auto size = finite_intersection_size(a, b);
    if (!size.is_finite()) continue;
    Point bound = 10 * std::lcm(a.modulus(), b.modulus()) + 40;
    std::uint64_t count = 0;
    for (Point x = 0; x < bound; ++x) count += (a.contains(x) && b.contains(x)) ? 1 : 0;
    EXPECT_EQ(size.value(), count);
  }
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(evens().enumerate(7), (std::vector<Point>{0, 2, 4, 6}));
  EXPECT_TRUE(SetDescriptor::empty().enumerate(100).empty());
  std::vector<Point> scan;
  for (Point x = 0; x < 8; ++x) {
    if (x == 0 || x % 3 == 1) scan.push_back(x);
  }
  EXPECT_EQ(zero_plus(1).enumerate(8), scan);
}

TEST(BooleanAlgebra, LawsOnEnumerations) {
  Rng rng(13);
  for (int t = 0; t < 300; ++t) {
    auto a = random_descriptor(rng), b = random_descriptor(rng), c = random_descriptor(rng);
    auto A = bitmap(a, 200), B = bitmap(b, 200);
    auto i = bitmap(intersect(a, b), 200), u = bitmap(unite(a, b), 200), d = bitmap(difference(a, b), 200);
    auto na = bitmap(complement(a), 200);
    for (Point x = 0; x < 200; ++x) {
      ASSERT_EQ(i[x], A[x] && B[x]);
      ASSERT_EQ(u[x], A[x] || B[x]);
      ASSERT_EQ(d[x], A[x] && !B[x]);
      ASSERT_EQ(na[x], !A[x]);
    }
    ASSERT_EQ(complement(unite(a, b)), intersect(complement(a), complement(b)));
    ASSERT_EQ(intersect(a, unite(b, c)), unite(intersect(a, b), intersect(a, c)));
    ASSERT_EQ(intersect(a, b), intersect(b, a));
  }
}

TEST(Canonical, StructuralEqualityIsExtensional) {
  auto a = SetDescriptor::from_parts({}, 4, std::vector<Point>{0, 2});
  EXPECT_EQ(a, evens());
  EXPECT_EQ(a.modulus(), 2u);
  auto b = SetDescriptor::from_parts(std::vector<Point>{2, 3}, 2, std::vector<Point>{0}, std::vector<Point>{4});
  EXPECT_EQ(b.finite_add(), (std::vector<Point>{3}));
  EXPECT_EQ(b.finite_remove(), (std::vector<Point>{4}));
  EXPECT_EQ(unite(evens(), odds()), SetDescriptor::naturals());
}

TEST(Literal, RoundTrip) {
  EXPECT_EQ(zero_plus(1).to_string(), "finite [0] tail mod 3 residues [1]");
  EXPECT_EQ(SetDescriptor::parse("tail mod 2 residues [0]"), evens());
  EXPECT_EQ(SetDescriptor::parse("empty"), SetDescriptor::empty());
  Rng rng(14);
  for (int t = 0; t < 200; ++t) {
    auto d = random_descriptor(rng);
    EXPECT_EQ(SetDescriptor::parse(d.to_string()), d);
  }
  EXPECT_THROW(SetDescriptor::parse("tail mod 3 residues [5]"), ParseError);
  EXPECT_THROW(SetDescriptor::parse("finite [1, 2"), ParseError);
  EXPECT_THROW(SetDescriptor::parse(""), ParseError);
}

TEST(Least, SkipsExcluded) {
  std::vector<Point> ex{0, 2};
  EXPECT_EQ(evens().least(3, ex), (std::vector<Point>{4, 6, 8}));
  EXPECT_THROW(SetDescriptor::finite({1}).least(2), ContractViolation);
  EXPECT_EQ(zero_plus(2).rank(5), 2u);
}

TEST(Subset, Almost) {
  auto a = SetDescriptor::from_parts(std::vector<Point>{1}, 2, std::vector<Point>{0});
  EXPECT_FALSE(is_subset(a, evens()));
  EXPECT_TRUE(is_almost_subset(a, evens()));
  EXPECT_FALSE(is_almost_subset(evens(), SetDescriptor::residue_class(0, 4)));
}

TEST(Limits, HugeModulusRefused) {
  auto a = SetDescriptor::residue_class(0, 3001);
  auto b = SetDescriptor::residue_class(0, 3011);
  EXPECT_THROW(intersect(a, b), UnsupportedConfiguration);
}

}  // namespace
}  // namespace pbij
