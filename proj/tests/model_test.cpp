// Copyright 2026 The finchar Authors
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

#include <set>

#include "finchar/error.hpp"
#include "finchar/model.hpp"
#include "finchar/predicates.hpp"
#include "support.hpp"

namespace finchar {
namespace {

const auto B = Universe::boolean();

std::vector<RawList> all_lists(const UniverseRef& u, std::size_t max_len) {
  std::vector<RawList> out{RawList(u)};
  std::vector<RawList> frontier = out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<RawList> next;
    for (const auto& l : frontier) {
      for (Element a = 0; a < u->size(); ++a) next.push_back(l.snoc(a));
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

TEST(Star, Concatenates) {
  EXPECT_EQ(star(RawList(B, {1, 0}), RawList(B, {1})), RawList(B, {1, 0, 1}));
  EXPECT_EQ(star(RawList(B), RawList(B, {0, 1})), RawList(B, {0, 1}));
  EXPECT_EQ(star(RawList(B, {0, 1}), RawList(B)), RawList(B, {0, 1}));
}

TEST(Star, AssociativeOverShortLists) {
  const auto u = Universe::atomic("U", 2);
  const auto ls = all_lists(u, 2);
  for (const auto& a : ls) {
    for (const auto& b : ls) {
      for (const auto& c : ls) EXPECT_EQ(star(star(a, b), c), star(a, star(b, c)));
    }
  }
}

TEST(ListSubseteq, ElementWise) {
  EXPECT_TRUE(list_subseteq(RawList(B, {1, 1}), RawList(B, {1, 0})));
  EXPECT_FALSE(list_subseteq(RawList(B, {0}), RawList(B, {1})));
  for (const auto& u : all_lists(B, 3)) EXPECT_TRUE(list_subseteq(RawList(B), u));
}

TEST(Hat, ElementSet) {
  EXPECT_EQ(hat(RawList(B, {1, 0, 1})), Subset(B, {0, 1}));
  EXPECT_TRUE(hat(RawList(B)).empty());
}

TEST(Canonicalize, SortsAndDeduplicates) {
  const auto u3 = Universe::atomic("C", 3);
  EXPECT_EQ(canonicalize(RawList(B, {1, 0, 1, 1})).items(), (std::vector<Element>{0, 1}));
  EXPECT_TRUE(canonicalize(RawList(B)).items().empty());
  EXPECT_EQ(canonicalize(RawList(u3, {2, 2, 0})).items(), (std::vector<Element>{0, 2}));
}

TEST(Canonicalize, IdempotentAndInvisibleToMembership) {
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto u = Universe::atomic("U", n);
    const auto t = n >= 2 ? test::lists(u, {{}, {0}, {0, 1}}) : test::lists(u, {{}});
    const auto d = ListPredicate::downward_closure(u, {RawList(u, n ? std::vector<Element>{0}
                                                                  : std::vector<Element>{})});
    for (const auto& l : all_lists(u, 2 * n)) {
      const auto c = canonicalize(l);
      EXPECT_EQ(canonicalize(c.raw()), c);
      EXPECT_EQ(hat(c.raw()), hat(l));
      EXPECT_EQ(lp_member(t, l), lp_member(t, c));
      EXPECT_EQ(lp_member(d, l), d.member(hat(l).mask()));
    }
  }
}

TEST(LpMember, SetSemantics) {
  const auto t = test::lists(B, {{}, {1}, {1, 0}});
  EXPECT_TRUE(lp_member(t, RawList(B, {1, 1})));
  EXPECT_FALSE(lp_member(t, RawList(B, {0})));
  EXPECT_TRUE(lp_member(t, RawList(B, {0, 1, 0})));
}

TEST(EnumerateSubsets, BinaryOrder) {
  const auto subsets = enumerate_subsets(B);
  EXPECT_EQ(test::masks(subsets), (std::vector<Mask>{0, 1, 2, 3}));
  EXPECT_EQ(enumerate_subsets(Universe::atomic("E", 0)).size(), 1u);
  const auto three = enumerate_subsets(Universe::atomic("T", 3));
  const auto ms = test::masks(three);
  EXPECT_EQ(std::set<Mask>(ms.begin(), ms.end()).size(), 8u);
}

TEST(Caps, TablesRefuseLargeUniverses) {
  const auto big = Universe::atomic("Big", 17);
  EXPECT_THROW(enumerate_subsets(big), CapExceeded);
  EXPECT_NO_THROW(enumerate_subsets(big, 17));
  EXPECT_THROW(enumerate_subsets(Universe::atomic("Huge", 25), 64), CapExceeded);
}

TEST(Universe, ProductsAndBottom) {
  const auto p = Universe::product(B, Universe::atomic("C", 3));
  EXPECT_EQ(p->size(), 6u);
  EXPECT_EQ(p->pair(1, 2), 5u);
  EXPECT_EQ(p->unpair(4), std::make_pair(Element{1}, Element{1}));
  const auto bot = Universe::bottom(B);
  EXPECT_EQ(bot->size(), 3u);
  EXPECT_TRUE(bot->is_bottom(2));
  EXPECT_FALSE(bot->is_bottom(1));
  EXPECT_THROW(check_element(*B, 2), InvalidModel);
}

TEST(Universe, MismatchIsAnError) {
  const auto c = Universe::atomic("C", 2);
  EXPECT_THROW(star(RawList(B, {0}), RawList(c, {0})), UniverseMismatch);
}

}  // namespace
}  // namespace finchar
