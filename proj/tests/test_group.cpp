// Copyright 2026 The qrflab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qrflab/config.hpp"
#include "qrflab/group.hpp"

using namespace qrf;

namespace {

const std::vector<std::vector<int>> kGroups = {{2}, {5}, {6}, {16}, {2, 3}, {2, 2}, {3, 4}, {2, 2, 3}};

GroupElement el(const GroupSpec& G, std::vector<long long> r) { return GroupElement(G, std::move(r)); }

}  // namespace

TEST(Group, ParseAndName) {
  EXPECT_EQ(GroupSpec::parse("Z6").moduli(), std::vector<int>{6});
  EXPECT_EQ(GroupSpec::parse("z2xZ3").moduli(), (std::vector<int>{2, 3}));
  EXPECT_EQ(GroupSpec::parse("Z2xZ3").name(), "Z2xZ3");
  EXPECT_EQ(GroupSpec::parse("Z3xZ4").order(), 12u);
  EXPECT_THROW(GroupSpec::parse("Q8"), StructuralError);
  EXPECT_THROW(GroupSpec::parse("Z1"), StructuralError);
  EXPECT_THROW(GroupSpec::parse(""), StructuralError);
  EXPECT_THROW(GroupSpec(std::vector<int>{}), StructuralError);
  EXPECT_THROW(GroupSpec(std::vector<int>{4, 0}), StructuralError);
}

TEST(Group, ComposeExamples) {
  const GroupSpec z6({6});
  EXPECT_EQ(compose(el(z6, {4}), el(z6, {5})), el(z6, {3}));
  EXPECT_EQ(compose(el(z6, {4}), z6.identity()), el(z6, {4}));
  EXPECT_EQ(inverse(el(z6, {4})), el(z6, {2}));
  EXPECT_EQ(inverse(z6.identity()), z6.identity());
  const GroupSpec z23({2, 3});
  EXPECT_EQ(compose(el(z23, {1, 2}), el(z23, {1, 2})), el(z23, {0, 1}));
  EXPECT_EQ(inverse(el(z23, {1, 2})), el(z23, {1, 1}));
}

TEST(Group, ResiduesReduce) {
  const GroupSpec z16({16});
  EXPECT_EQ(el(z16, {-3}).residues(), std::vector<int>{13});
  EXPECT_EQ(el(z16, {35}).residues(), std::vector<int>{3});
  EXPECT_THROW(el(z16, {1, 2}), StructuralError);
}

TEST(Group, CharacterExamples) {
  const GroupSpec z4({4});
  const cplx v = eval_character(Character(z4, {1}), el(z4, {1}));
  EXPECT_NEAR(std::abs(v - cplx(0, 1)), 0.0, 1e-15);
  const GroupSpec z6({6});
  EXPECT_NEAR(std::abs(eval_character(Character(z6, {3}), el(z6, {2})) - 1.0), 0.0, 1e-15);
  for (const auto& g : enumerate_elements(z6)) EXPECT_EQ(eval_character(Character(z6, {0}), g), cplx(1.0));
  const GroupSpec z2({2});
  const auto chars = enumerate_characters(z2);
  ASSERT_EQ(chars.size(), 2u);
  EXPECT_TRUE(chars[0].is_trivial());
  EXPECT_NEAR(std::abs(eval_character(chars[1], el(z2, {1})) + 1.0), 0.0, 1e-15);
  EXPECT_EQ(enumerate_characters(GroupSpec({5})).size(), 5u);
}

TEST(Group, EnumerationOrder) {
  const GroupSpec z22({2, 2});
  const auto els = enumerate_elements(z22);
  ASSERT_EQ(els.size(), 4u);
  EXPECT_EQ(els[0].residues(), (std::vector<int>{0, 0}));
  EXPECT_EQ(els[1].residues(), (std::vector<int>{0, 1}));
  EXPECT_EQ(els[2].residues(), (std::vector<int>{1, 0}));
  EXPECT_EQ(els[3].residues(), (std::vector<int>{1, 1}));
  EXPECT_EQ(enumerate_elements(GroupSpec({3, 4})).size(), 12u);
}

TEST(Group, IndexArithmeticMatchesOracle) {
  for (const auto& m : kGroups) {
    const GroupSpec G(m);
    const std::size_t n = G.order();
    for (std::size_t a = 0; a < n; ++a) {
      EXPECT_EQ(G.element(a).residues(), oracle::residues(m, a));
      EXPECT_EQ(G.index_of(G.element(a)), a);
      EXPECT_EQ(G.neg(a), oracle::index(m, oracle::neg(m, oracle::residues(m, a))));
      for (std::size_t b = 0; b < n; ++b) {
        EXPECT_EQ(G.add(a, b), oracle::index(m, oracle::add(m, oracle::residues(m, a), oracle::residues(m, b))));
      }
    }
  }
}

TEST(Group, CharactersMatchOracle) {
  for (const auto& m : kGroups) {
    const GroupSpec G(m);
    const std::size_t n = G.order();
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t g = 0; g < n; ++g) {
        const cplx expect = oracle::chi(m, oracle::residues(m, k), oracle::residues(m, g));
        EXPECT_NEAR(std::abs(G.chi(k, g) - expect), 0.0, 1e-13);
        EXPECT_NEAR(std::abs(eval_character(G.character(k), G.element(g)) - expect), 0.0, 1e-13);
      }
    }
  }
}

TEST(Group, LargeCyclicCharactersUseRootTable) {
  const GroupSpec G({257});
  EXPECT_NEAR(std::abs(G.chi(5, 100) - oracle::chi({257}, {5}, {100})), 0.0, 1e-13);
  const GroupSpec H({64, 3});
  EXPECT_NEAR(std::abs(H.chi(H.index_of(el(H, {7, 2})), H.index_of(el(H, {9, 1}))) -
                       oracle::chi({64, 3}, {7, 2}, {9, 1})),
              0.0, 1e-13);
}

TEST(GroupProperty, Orthogonality) {
  for (const auto& m : kGroups) {
    const GroupSpec G(m);
    const std::size_t n = G.order();
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t kp = 0; kp < n; ++kp) {
        cplx s = 0;
        for (std::size_t g = 0; g < n; ++g) s += std::conj(G.chi(k, g)) * G.chi(kp, g);
        EXPECT_NEAR(std::abs(s - (k == kp ? double(n) : 0.0)), 0.0, 1e-12);
      }
    }
  }
}

TEST(GroupProperty, CharacterOrderDividesGroupOrder) {
  for (const auto& m : kGroups) {
    const GroupSpec G(m);
    const std::size_t n = G.order();
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t g = 0; g < n; ++g) {
        cplx p = 1;
        for (std::size_t t = 0; t < n; ++t) p *= G.chi(k, g);
        EXPECT_NEAR(std::abs(p - 1.0), 0.0, 1e-12);
      }
    }
  }
}

TEST(GroupProperty, Commutative) {
  std::mt19937_64 rng(3);
  const GroupSpec G({2, 3, 4});
  std::uniform_int_distribution<std::size_t> pick(0, G.order() - 1);
  for (int t = 0; t < 1000; ++t) {
    const auto a = G.element(pick(rng)), b = G.element(pick(rng));
    EXPECT_EQ(compose(a, b), compose(b, a));
    EXPECT_EQ(compose(a, inverse(a)), G.identity());
  }
}
