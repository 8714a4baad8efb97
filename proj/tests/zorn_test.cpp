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
#include "finchar/error.hpp"
#include "finchar/maximality.hpp"
#include "finchar/zorn.hpp"
#include "support.hpp"

namespace finchar {
namespace {

using Pairs = std::vector<std::pair<Element, Element>>;

OrderedModel model(std::size_t n, const Pairs& lt, Mask carrier) {
  const auto u = Universe::atomic("U", n);
  return OrderedModel(u, lt, Subset(u, carrier));
}

Pairs to_pairs(const oracle::Pairs& p) {
  Pairs out;
  for (auto [a, b] : p) out.emplace_back(a, b);
  return out;
}

std::vector<RawList> core(const UniverseRef& u, std::initializer_list<std::vector<Element>> ls) {
  std::vector<RawList> out;
  for (const auto& l : ls) out.emplace_back(u, l);
  return out;
}

TEST(OrderedModel, RejectsNonOrders) {
  EXPECT_THROW(model(2, {{0, 0}}, 3), InvalidModel);
  EXPECT_THROW(model(3, {{0, 1}, {1, 2}}, 7), InvalidModel);
  EXPECT_THROW(model(2, {{0, 1}, {1, 0}}, 3), InvalidModel);
}

TEST(IsSubchain, Examples) {
  const auto m = model(3, {{0, 1}}, 7);
  EXPECT_TRUE(is_subchain(m, Subset(m.universe(), {0, 1})));
  EXPECT_FALSE(is_subchain(m, Subset(m.universe(), {0, 2})));
  EXPECT_TRUE(is_subchain(m, Subset(m.universe())));
}

TEST(IsInductive, Examples) {
  EXPECT_TRUE(is_inductive(model(3, {{0, 1}, {1, 2}, {0, 2}}, 7)));
  EXPECT_FALSE(is_inductive(model(3, {{0, 1}}, 0)));
  EXPECT_TRUE(is_inductive(model(2, {}, 3)));
}

TEST(ZornWitness, Examples) {
  EXPECT_EQ(zorn_witness(model(3, {{0, 1}, {1, 2}, {0, 2}}, 7)), Element{2});
  EXPECT_EQ(zorn_witness(model(1, {}, 1)), Element{0});
  EXPECT_EQ(zorn_witness(model(3, {{0, 1}}, 7)), Element{1});
  EXPECT_FALSE(zorn_witness(model(2, {}, 0)));
}

TEST(SubchainsAsListPred, Examples) {
  const auto m = model(2, {{0, 1}}, 3);
  EXPECT_EQ(grammar_of(m).core(), core(m.universe(), {{}, {0}, {0, 1}, {1}}));
  EXPECT_EQ(eng(subchains_as_listpred(m)), SubsetPredicate::constant(m.universe(), true));

  const auto m2 = model(3, {{0, 1}}, 7);
  const auto t = test::table(eng(subchains_as_listpred(m2)));
  EXPECT_EQ(t, (oracle::Table{1, 1, 1, 1, 1, 0, 0, 0}));

  const auto m3 = model(3, {{0, 1}}, 0);
  EXPECT_EQ(grammar_of(m3).core(), core(m3.universe(), {{}}));
  EXPECT_EQ(test::table(eng(subchains_as_listpred(m3))), (oracle::Table{1, 0, 0, 0, 0, 0, 0, 0}));
}

TEST(ZornWitness, MatchesOracleOnEveryOrderAndCarrier) {
  for (unsigned n = 0; n <= 3; ++n) {
    for (const auto& lt : oracle::strict_orders(n)) {
      for (Mask carrier = 0; carrier < (Mask{1} << n); ++carrier) {
        const auto m = model(n, to_pairs(lt), carrier);
        const bool inductive = oracle::inductive(lt, carrier);
        ASSERT_EQ(is_inductive(m), inductive);
        const auto w = zorn_witness(m);
        ASSERT_EQ(w.has_value(), inductive);
        if (w) EXPECT_TRUE(oracle::order_maxima(lt, carrier).count(*w));
        EXPECT_EQ(test::table(eng(subchains_as_listpred(m))), oracle::subchains(n, lt, carrier));
        EXPECT_EQ(test::table(subchain_table(m)), oracle::subchains(n, lt, carrier));

        const auto g = grammar_of(m);
        EXPECT_TRUE(chain_grammar_check(g));
        Pairs restricted;
        for (auto [a, b] : lt) {
          if ((carrier >> a & 1) && (carrier >> b & 1)) restricted.emplace_back(a, b);
        }
        EXPECT_EQ(order_of_grammar(g), OrderedModel(m.universe(), restricted, m.carrier()));
      }
    }
  }
}

TEST(ChainGrammar, AxiomExamples) {
  const auto u = Universe::atomic("U", 2);
  EXPECT_TRUE(chain_grammar_check(ChainGrammar(u, core(u, {{}, {0}, {1}, {0, 1}}))));

  const auto both = find_grammar_violation(ChainGrammar(u, core(u, {{0, 1}, {1, 0}, {}, {0}, {1}})));
  ASSERT_TRUE(both);
  EXPECT_EQ(both->axiom, GrammarViolation::Axiom::antisymmetry);

  const auto missing = find_grammar_violation(ChainGrammar(u, core(u, {{0}})));
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->axiom, GrammarViolation::Axiom::empty_list);

  const auto split = find_grammar_violation(ChainGrammar(u, core(u, {{}, {0, 1}, {0}})));
  ASSERT_TRUE(split);
  EXPECT_EQ(split->axiom, GrammarViolation::Axiom::exchange);
  EXPECT_THROW(order_of_grammar(ChainGrammar(u, core(u, {{0}}))), InvalidModel);
}

TEST(ChainGrammar, OrderOfGrammarExamples) {
  const auto u = Universe::atomic("U", 2);
  const auto m = order_of_grammar(ChainGrammar(u, core(u, {{}, {0}, {1}, {0, 1}})));
  EXPECT_EQ(m.pairs(), (Pairs{{0, 1}}));
  EXPECT_EQ(m.carrier(), Subset(u, {0, 1}));
  const auto e = order_of_grammar(ChainGrammar(u, core(u, {{}})));
  EXPECT_TRUE(e.pairs().empty());
  EXPECT_TRUE(e.carrier().empty());
}

// Maximal sets of eng(T) through the inclusion order.
TEST(InclusionModel, ChainsHaveUnionsAndZornGivesMaximalSets) {
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto u = Universe::atomic("U", n);
    for (std::uint64_t code = 1; code < (std::uint64_t{1} << (1u << n)); code += 2) {
      const auto t = test::from_code(u, code);
      const auto closed = eng(t);
      const auto m = inclusion_model(closed);
      EXPECT_TRUE(is_inductive(m));
      // The union of any chain of members is again a member.
      const auto chains = subchain_table(m);
      for (Mask f = 1; f < chains.entries(); ++f) {
        if (!chains(f)) continue;
        Mask join = 0;
        for (Element s : mask_elements(f)) join |= s;
        EXPECT_TRUE(closed(join));
      }
      const auto w = ttl_via_zorn(t);
      ASSERT_TRUE(w);
      EXPECT_TRUE(is_maximal(closed, *w));
    }
  }
}

}  // namespace
}  // namespace finchar
