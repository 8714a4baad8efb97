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

#pragma once

#include <optional>
#include <vector>

#include "finchar/ordered_model.hpp"
#include "finchar/predicates.hpp"

namespace finchar {

/// F is a subset of the carrier and totally ordered.
bool is_subchain(const OrderedModel& m, const Subset& f);

/// The subchain predicate of the carrier as a table.
SubsetPredicate subchain_table(const OrderedModel& m, std::size_t cap = kDefaultCap);

/// Every subchain of the carrier has an upper bound in the carrier.
bool is_inductive(const OrderedModel& m, std::size_t cap = kDefaultCap);

/// A maximal element of the carrier, obtained from a maximal subchain. The
/// maximal subchain is the TTL witness of subchains_as_listpred(m); the result
/// is its smallest-index upper bound. nullopt when `m` is not inductive.
std::optional<Element> zorn_witness(const OrderedModel& m, std::size_t cap = kDefaultCap);

/// The powerset of P's universe ordered by strict inclusion, with the members
/// of P as carrier. Element i of the result is the subset with mask i.
OrderedModel inclusion_model(const SubsetPredicate& p, std::size_t cap = kDefaultCap);

/// A maximal element of eng(T) obtained through zorn_witness on
/// inclusion_model(eng(T)); nullopt when the empty list is not in T.
std::optional<Subset> ttl_via_zorn(const ListPredicate& t, std::size_t cap = kDefaultCap);

/// The generated list-of-chains core: the empty list, [a] for every carrier
/// element, and u@a@b whenever u@a is in the core, b is in the carrier and
/// a < b. Lists come out in lexicographic order.
std::vector<RawList> chain_core(const OrderedModel& m);

/// Downward closure (by element inclusion) of chain_core(m).
ListPredicate subchains_as_listpred(const OrderedModel& m);

/// A candidate list-of-chains core over a universe.
class ChainGrammar {
 public:
  ChainGrammar(UniverseRef universe, std::vector<RawList> core);

  const UniverseRef& universe() const { return universe_; }
  /// Sorted, without duplicate lists.
  const std::vector<RawList>& core() const { return core_; }
  bool contains(const std::vector<Element>& items) const;

  friend bool operator==(const ChainGrammar& a, const ChainGrammar& b);

 private:
  UniverseRef universe_;
  std::vector<RawList> core_;
};

ChainGrammar grammar_of(const OrderedModel& m);

/// Which axiom a core violates, with the offending lists.
struct GrammarViolation {
  enum class Axiom { empty_list, exchange, deletion, antisymmetry };
  Axiom axiom;
  std::string detail;
};

std::optional<GrammarViolation> find_grammar_violation(const ChainGrammar& g);

/// All four list-of-chains axioms hold for the core.
bool chain_grammar_check(const ChainGrammar& g);

/// a < b iff [a, b] is in the core; the carrier is every element occurring in
/// the core. Throws InvalidModel when the core violates an axiom.
OrderedModel order_of_grammar(const ChainGrammar& g);

}  // namespace finchar
