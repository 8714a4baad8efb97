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

#include "finchar/closures.hpp"
#include "finchar/gdc.hpp"
#include "finchar/partial_functions.hpp"
#include "support.hpp"

namespace finchar {
namespace {

const auto B = Universe::boolean();
const auto BB = Universe::product(B, B);

PFun fn(std::vector<std::optional<Element>> table) { return PFun(B, B, std::move(table)); }

ListSet functional_lists(const ListPredicate& t) {
  ListSet out;
  const auto closed = eng(t);
  for (Mask m = 0; m < 16; ++m) {
    if (closed(m) && is_functional_mask(*BB, m)) out.emplace_back(BB, m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(PhiStep, Examples) {
  const auto all = ListPredicate::all(BB);
  const auto x = functional_lists(all);
  EXPECT_EQ(phi_step(all, x), x);

  // Element 0 has no admissible partner: the empty list drops at once.
  const auto r = Relation::of(B, B, {{1, 0}, {1, 1}});
  const auto t = positive_alignment(r);
  const auto y = phi_step(t, functional_lists(t));
  EXPECT_EQ(std::count(y.begin(), y.end(), CanonicalList(BB, 0)), 0);
}

TEST(Approximation, Examples) {
  const auto all = approximation(ListPredicate::all(BB));
  EXPECT_TRUE(all.approximable);
  EXPECT_EQ(all.fixed_point, functional_lists(ListPredicate::all(BB)));

  const auto r = Relation::of(B, B, {{1, 0}, {1, 1}});
  EXPECT_FALSE(approximation(positive_alignment(r)).approximable);

  const auto only_empty = approximation(test::lists(BB, {{}}));
  EXPECT_FALSE(only_empty.approximable);
  EXPECT_TRUE(only_empty.fixed_point.empty());

  const auto s = positive_alignment(Relation::of(B, B, {{0, 1}, {1, 0}, {1, 1}}));
  const auto a = approximation(s);
  EXPECT_TRUE(a.approximable);
  EXPECT_EQ(phi_step(s, a.fixed_point), a.fixed_point);
}

TEST(ChoiceWitness, Examples) {
  const auto s = positive_alignment(Relation::of(B, B, {{0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(choice_witness(s), fn({1, 0}));
  EXPECT_EQ(choice_witness(ListPredicate::all(BB)), fn({0, 0}));
  EXPECT_FALSE(choice_witness(positive_alignment(Relation::of(B, B, {{1, 0}}))));
}

TEST(PositiveAlignment, Examples) {
  const auto none = positive_alignment(Relation(B, B));
  EXPECT_EQ(none.members().size(), 1u);
  EXPECT_TRUE(same_members(positive_alignment(Relation::full(B, B)), ListPredicate::all(BB)));
  const auto r = positive_alignment(Relation::of(B, B, {{0, 1}, {1, 0}}));
  EXPECT_TRUE(lp_member(r, RawList(BB, {BB->pair(0, 1), BB->pair(1, 0)})));
  EXPECT_FALSE(lp_member(r, RawList(BB, {BB->pair(0, 1), BB->pair(1, 0), BB->pair(0, 0)})));
}

TEST(DownwardPrime, Examples) {
  EXPECT_TRUE(is_downward_prime(positive_alignment(Relation::of(B, B, {{0, 1}}))));
  EXPECT_FALSE(is_downward_prime(test::lists(B, {{}, {0}, {1}})));
  EXPECT_TRUE(is_downward_prime(ListPredicate::all(B)));
}

TEST(RelationOf, Examples) {
  const auto r = Relation::of(B, B, {{0, 1}, {1, 1}});
  EXPECT_EQ(relation_of(positive_alignment(r)), r);
  EXPECT_EQ(relation_of(test::lists(BB, {{}})), Relation(B, B));
}

// Downward-prime predicates that are also closed under sublists are exactly
// the alignments of their relation.
TEST(RelationOf, AlignmentRecoversDownwardClosedPrimePredicates) {
  int checked = 0;
  for (std::uint64_t code = 1; code < (std::uint64_t{1} << 16); code += 2) {
    const auto t = test::from_code(BB, code);
    if (!is_downward_prime(t)) continue;
    if (SubsetPredicate(BB, test::table(t)) != eng(t)) continue;
    ++checked;
    EXPECT_TRUE(same_members(positive_alignment(relation_of(t)), t)) << code;
  }
  EXPECT_EQ(checked, 16);
}

// Closure under unions alone does not make a predicate an alignment.
TEST(RelationOf, UnionClosedButNotSublistClosedIsNotAnAlignment) {
  const auto t = test::lists(BB, {{}, {BB->pair(0, 0), BB->pair(0, 1)}});
  EXPECT_TRUE(is_downward_prime(t));
  EXPECT_EQ(relation_of(t), Relation(B, B));
  EXPECT_FALSE(same_members(positive_alignment(relation_of(t)), t));
  EXPECT_EQ(eng(positive_alignment(relation_of(t))), eng(t));
}

TEST(GreatestFixedPoint, ContainsEveryPostFixedPoint) {
  for (std::uint64_t code = 1; code < (std::uint64_t{1} << 16); code += 97) {
    const auto t = test::from_code(BB, code);
    const auto gfp = approximation(t).fixed_point;
    ASSERT_EQ(phi_step(t, gfp), gfp);
    // phi(X) is always a subset of X, so the post-fixed points are the fixed
    // points. The carrier has at most 9 lists; every subset is tried.
    const auto carrier = functional_lists(t);
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << carrier.size()); ++pick) {
      ListSet x;
      for (std::size_t i = 0; i < carrier.size(); ++i) {
        if (pick >> i & 1) x.push_back(carrier[i]);
      }
      const auto next = phi_step(t, x);
      if (next != x) continue;
      for (const auto& u : x) EXPECT_TRUE(std::binary_search(gfp.begin(), gfp.end(), u));
    }
  }
}

TEST(ChoiceWitness, ExistsExactlyWhenApproximable) {
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << 16); ++code) {
    const auto t = test::from_code(BB, code);
    const auto closed = oracle::eng(test::table(t));
    const bool approximable = approximation(t).approximable;
    const auto c = choice_witness(t);
    ASSERT_EQ(c.has_value(), approximable);
    ASSERT_EQ(approximable, oracle::has_total_choice(closed, 2, 2)) << code;
    if (c) {
      EXPECT_TRUE(c->total());
      EXPECT_TRUE(closed[pf_graph(*c).mask()]);
    }
  }
}

TEST(DownwardPrime, DomainAndTotalityLaws) {
  for (std::uint64_t code = 1; code < (std::uint64_t{1} << 16); code += 2) {
    const auto t = test::from_code(BB, code);
    if (!is_downward_prime(t)) continue;
    const auto f = empcf_witness(t);
    ASSERT_TRUE(f);
    Mask domain = 0;
    for (Element a = 0; a < 2; ++a) {
      for (Element b = 0; b < 2; ++b) {
        if (t.member(bit(BB->pair(a, b)))) domain |= bit(a);
      }
    }
    EXPECT_EQ(f->dom().mask(), domain) << code;
    if (approximation(t).approximable) {
      EXPECT_TRUE(f->total()) << code;
      EXPECT_TRUE(eng(t)(pf_graph(*f)));
    }
  }
}

TEST(EraseBottom, DropsBottomPairs) {
  const auto lifted = Universe::product(B, Universe::bottom(B));
  const RawList u(lifted, {lifted->pair(0, 2), lifted->pair(1, 0)});
  const auto e = erase_bottom(u);
  EXPECT_EQ(e.items(), (std::vector<Element>{BB->pair(1, 0)}));
}

TEST(LiftBottom, Examples) {
  const auto one = Universe::atomic("One", 1);
  const auto b1 = Universe::product(B, one);
  const auto t = positive_alignment(Relation::of(B, one, {{1, 0}}));
  const auto l = lift_bottom(t);
  const auto c = choice_witness(l);
  ASSERT_TRUE(c);
  const auto f = erase_bottom(*c);
  EXPECT_EQ(f.table(), (std::vector<std::optional<Element>>{std::nullopt, 0}));
  EXPECT_EQ(pf_graph(f), Subset(b1, {b1->pair(1, 0)}));

  const auto all = choice_witness(lift_bottom(ListPredicate::all(BB)));
  ASSERT_TRUE(all);
  EXPECT_TRUE(erase_bottom(*all).total());
}

TEST(LiftBottom, ErasedChoiceIsMaximalPartialChoice) {
  for (std::uint64_t code = 1; code < (std::uint64_t{1} << 16); code += 2) {
    const auto t = test::from_code(BB, code);
    const auto c = choice_witness(lift_bottom(t));
    ASSERT_TRUE(c) << code;
    const auto f = erase_bottom(*c);
    oracle::Fn g;
    for (const auto& v : f.table()) g.push_back(v ? static_cast<int>(*v) : -1);
    ASSERT_TRUE(oracle::pf_maximal(oracle::eng(test::table(t)), g, 2)) << code;
  }
}

}  // namespace
}  // namespace finchar
