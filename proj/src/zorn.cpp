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

#include "finchar/zorn.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "finchar/closures.hpp"
#include "finchar/maximality.hpp"

namespace finchar {

namespace {

bool chain_mask(const OrderedModel& m, Mask f) {
  if (!is_submask(f, m.carrier().mask())) return false;
  for (Element a : mask_elements(f)) {
    for (Element b : mask_elements(f)) {
      if (a != b && !m.less(a, b) && !m.less(b, a)) return false;
    }
  }
  return true;
}

bool has_upper_bound(const OrderedModel& m, Mask f) {
  for (Element a : m.carrier().elements()) {
    bool bound = true;
    for (Element b : mask_elements(f)) bound = bound && m.less_eq(b, a);
    if (bound) return true;
  }
  return false;
}

std::string render(const std::vector<Element>& items) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < items.size(); ++i) out << (i ? " " : "") << items[i];
  out << ']';
  return out.str();
}

using Items = std::vector<Element>;

Items slice(const Items& w, std::size_t from, std::size_t to) {
  return Items(w.begin() + static_cast<std::ptrdiff_t>(from),
               w.begin() + static_cast<std::ptrdiff_t>(to));
}

}  // namespace

bool is_subchain(const OrderedModel& m, const Subset& f) {
  require_same_universe(m.universe(), f.universe(), "is_subchain");
  return chain_mask(m, f.mask());
}

SubsetPredicate subchain_table(const OrderedModel& m, std::size_t cap) {
  auto p = SubsetPredicate::constant(m.universe(), false, cap);
  std::vector<std::uint8_t> table(p.entries());
  for (Mask f = 0; f < table.size(); ++f) table[f] = chain_mask(m, f) ? 1 : 0;
  return SubsetPredicate(m.universe(), std::move(table));
}

bool is_inductive(const OrderedModel& m, std::size_t cap) {
  check_cap(*m.universe(), cap);
  // Enumerate the submasks of the carrier, including the empty chain.
  const Mask carrier = m.carrier().mask();
  Mask f = 0;
  do {
    if (chain_mask(m, f) && !has_upper_bound(m, f)) return false;
    f = (f - carrier) & carrier;
  } while (f != 0);
  return true;
}

std::optional<Element> zorn_witness(const OrderedModel& m, std::size_t cap) {
  if (!is_inductive(m, cap)) return std::nullopt;
  const auto chain = ttl_witness(subchains_as_listpred(m), cap);
  if (!chain) return std::nullopt;
  for (Element a : m.carrier().elements()) {
    bool bound = true;
    for (Element b : chain->elements()) bound = bound && m.less_eq(b, a);
    if (bound) return a;
  }
  return std::nullopt;
}

OrderedModel inclusion_model(const SubsetPredicate& p, std::size_t cap) {
  check_cap(*p.universe(), cap);
  const auto powerset = Universe::atomic("P(" + p.universe()->name() + ")", p.entries());
  std::vector<std::pair<Element, Element>> lt;
  Mask carrier = 0;
  for (Mask a = 0; a < p.entries(); ++a) {
    if (p(a)) carrier |= bit(static_cast<Element>(a));
    for (Mask b = 0; b < p.entries(); ++b) {
      if (a != b && is_submask(a, b)) {
        lt.emplace_back(static_cast<Element>(a), static_cast<Element>(b));
      }
    }
  }
  return OrderedModel(powerset, lt, Subset(powerset, carrier));
}

std::optional<Subset> ttl_via_zorn(const ListPredicate& t, std::size_t cap) {
  const auto closed = eng(t, cap);
  const auto model = inclusion_model(closed, cap);
  const auto top = zorn_witness(model, cap);
  if (!top) return std::nullopt;
  return Subset(t.universe(), *top);
}

std::vector<RawList> chain_core(const OrderedModel& m) {
  std::vector<RawList> out;
  std::vector<Items> stack{Items{}};
  const auto carrier = m.carrier().elements();
  while (!stack.empty()) {
    Items u = std::move(stack.back());
    stack.pop_back();
    out.emplace_back(m.universe(), u);
    // Push in reverse so that the depth-first walk is lexicographic.
    for (auto it = carrier.rbegin(); it != carrier.rend(); ++it) {
      if (u.empty() || m.less(u.back(), *it)) {
        Items next = u;
        next.push_back(*it);
        stack.push_back(std::move(next));
      }
    }
  }
  return out;
}

ListPredicate subchains_as_listpred(const OrderedModel& m) {
  return ListPredicate::downward_closure(m.universe(), chain_core(m));
}

ChainGrammar::ChainGrammar(UniverseRef universe, std::vector<RawList> core)
    : universe_(std::move(universe)), core_(std::move(core)) {
  for (const auto& u : core_) require_same_universe(universe_, u.universe(), "chain grammar");
  std::sort(core_.begin(), core_.end());
  core_.erase(std::unique(core_.begin(), core_.end()), core_.end());
}

bool ChainGrammar::contains(const std::vector<Element>& items) const {
  return std::binary_search(core_.begin(), core_.end(), RawList(universe_, items));
}

bool operator==(const ChainGrammar& a, const ChainGrammar& b) {
  return same_shape(a.universe_, b.universe_) && a.core_ == b.core_;
}

ChainGrammar grammar_of(const OrderedModel& m) { return ChainGrammar(m.universe(), chain_core(m)); }

std::optional<GrammarViolation> find_grammar_violation(const ChainGrammar& g) {
  using Axiom = GrammarViolation::Axiom;
  std::set<Items> core;
  for (const auto& u : g.core()) core.insert(u.items());
  auto in = [&](const Items& w) { return core.count(w) != 0; };

  if (!in(Items{})) return GrammarViolation{Axiom::empty_list, "the empty list is missing"};

  // No two distinct elements appear in both orders anywhere in the core.
  std::set<std::pair<Element, Element>> before;
  for (const auto& w : core) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[i] != w[j]) before.emplace(w[i], w[j]);
      }
    }
  }
  for (auto [a, b] : before) {
    if (before.count({b, a}) != 0) {
      return GrammarViolation{Axiom::antisymmetry, std::to_string(a) + " occurs before " +
                                                       std::to_string(b) + " and " +
                                                       std::to_string(b) + " before " +
                                                       std::to_string(a)};
    }
  }

  for (const auto& w : core) {
    // u * [a] * v in the core forces u@a and [a] * v.
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Items prefix = slice(w, 0, i + 1);
      const Items suffix = slice(w, i, w.size());
      if (!in(prefix) || !in(suffix)) {
        return GrammarViolation{Axiom::exchange, render(w) + " is present but " +
                                                     render(in(prefix) ? suffix : prefix) +
                                                     " is not"};
      }
    }
    // Deleting any one element stays in the core.
    for (std::size_t i = 0; i < w.size(); ++i) {
      Items shorter = w;
      shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(i));
      if (!in(shorter)) {
        return GrammarViolation{Axiom::deletion,
                                render(w) + " is present but " + render(shorter) + " is not"};
      }
    }
  }

  // u@a and [a] * v in the core force u * [a] * v.
  for (const auto& x : core) {
    if (x.empty()) continue;
    for (const auto& y : core) {
      if (y.empty() || y.front() != x.back()) continue;
      Items joined = x;
      joined.insert(joined.end(), y.begin() + 1, y.end());
      if (!in(joined)) {
        return GrammarViolation{Axiom::exchange, render(x) + " and " + render(y) +
                                                     " are present but " + render(joined) +
                                                     " is not"};
      }
    }
  }

  return std::nullopt;
}

bool chain_grammar_check(const ChainGrammar& g) { return !find_grammar_violation(g); }

OrderedModel order_of_grammar(const ChainGrammar& g) {
  if (auto v = find_grammar_violation(g)) {
    throw InvalidModel("not a list of chains: " + v->detail);
  }
  std::vector<std::pair<Element, Element>> lt;
  Mask carrier = 0;
  for (const auto& u : g.core()) {
    carrier |= element_mask(u);
    if (u.length() == 2) lt.emplace_back(u.items()[0], u.items()[1]);
  }
  return OrderedModel(g.universe(), lt, Subset(g.universe(), carrier));
}

}  // namespace finchar
