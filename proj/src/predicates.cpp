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

#include "finchar/predicates.hpp"

#include <algorithm>

namespace finchar {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool is_subchain_mask(const OrderedModel& m, Mask s) {
  if (!is_submask(s, m.carrier().mask())) return false;
  for (Element a : mask_elements(s)) {
    for (Element b : mask_elements(s & ~((bit(a) << 1) - 1))) {
      if (!m.less(a, b) && !m.less(b, a)) return false;
    }
  }
  return true;
}

Mask project_first(const Universe& product, Mask m) {
  Mask out = 0;
  for (Element e : mask_elements(m)) out |= bit(product.unpair(e).first);
  return out;
}

}  // namespace

ListPredicate::ListPredicate(UniverseRef universe, Representation rep)
    : universe_(std::move(universe)), rep_(std::move(rep)) {}

ListPredicate ListPredicate::explicit_set(UniverseRef universe,
                                          const std::vector<RawList>& lists) {
  std::vector<Mask> members;
  members.reserve(lists.size());
  for (const auto& u : lists) {
    require_same_universe(universe, u.universe(), "explicit list predicate");
    members.push_back(element_mask(u));
  }
  return explicit_masks(std::move(universe), std::move(members));
}

ListPredicate ListPredicate::explicit_masks(UniverseRef universe, std::vector<Mask> members) {
  for (Mask m : members) {
    if (!is_submask(m, universe->full_mask())) {
      throw InvalidModel("list element out of range for universe '" + universe->name() + "'");
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return ListPredicate(std::move(universe), Explicit{std::move(members)});
}

ListPredicate ListPredicate::set_based(UniverseRef universe, std::vector<std::uint8_t> table) {
  check_cap(*universe, kHardCap);
  if (table.size() != (std::size_t{1} << universe->size())) {
    throw InvalidModel("set-based table has " + std::to_string(table.size()) +
                       " entries; expected 2^" + std::to_string(universe->size()));
  }
  return ListPredicate(std::move(universe), SetBased{std::move(table)});
}

ListPredicate ListPredicate::downward_closure(UniverseRef universe,
                                              std::vector<RawList> generators) {
  std::vector<Mask> masks;
  masks.reserve(generators.size());
  for (const auto& g : generators) {
    require_same_universe(universe, g.universe(), "downward closure");
    masks.push_back(element_mask(g));
  }
  return ListPredicate(std::move(universe),
                       DownwardClosure{std::move(generators), std::move(masks)});
}

ListPredicate ListPredicate::alignment(Relation relation) {
  auto universe = relation.product();
  return ListPredicate(std::move(universe), Alignment{std::move(relation)});
}

ListPredicate ListPredicate::subchains(OrderedModel model) {
  auto universe = model.universe();
  return ListPredicate(std::move(universe), Subchains{std::move(model)});
}

ListPredicate ListPredicate::complement(ListPredicate inner) {
  auto universe = inner.universe();
  return ListPredicate(std::move(universe),
                       Complement{std::make_shared<const ListPredicate>(std::move(inner))});
}

ListPredicate ListPredicate::unit_pullback(ListPredicate inner) {
  auto universe = Universe::product(inner.universe(), Universe::unit());
  return ListPredicate(std::move(universe),
                       UnitPullback{std::make_shared<const ListPredicate>(std::move(inner))});
}

ListPredicate ListPredicate::functional(ListPredicate inner) {
  if (!inner.universe()->is_product()) {
    throw UniverseMismatch("partial-function filter needs a product universe, got '" +
                           inner.universe()->name() + "'");
  }
  auto universe = inner.universe();
  return ListPredicate(std::move(universe),
                       Functional{std::make_shared<const ListPredicate>(std::move(inner))});
}

ListPredicate ListPredicate::all(UniverseRef universe) {
  return complement(none(std::move(universe)));
}

ListPredicate ListPredicate::none(UniverseRef universe) {
  return ListPredicate(std::move(universe), Explicit{});
}

bool ListPredicate::member(Mask m) const {
  return std::visit(
      overloaded{
          [&](const Explicit& e) {
            return std::binary_search(e.members.begin(), e.members.end(), m);
          },
          [&](const SetBased& s) { return s.table[m] != 0; },
          [&](const DownwardClosure& d) {
            return std::any_of(d.masks.begin(), d.masks.end(),
                               [&](Mask g) { return is_submask(m, g); });
          },
          [&](const Alignment& a) { return is_submask(m, a.relation.mask()); },
          [&](const Subchains& s) { return is_subchain_mask(s.model, m); },
          [&](const Complement& c) { return !c.inner->member(m); },
          [&](const UnitPullback& p) { return p.inner->member(project_first(*universe_, m)); },
          [&](const Functional& f) {
            return is_functional_mask(*universe_, m) && f.inner->member(m);
          },
      },
      rep_);
}

std::vector<std::uint8_t> ListPredicate::member_table(std::size_t cap) const {
  check_cap(*universe_, cap);
  const Mask count = Mask{1} << universe_->size();
  if (const auto* s = std::get_if<SetBased>(&rep_)) return s->table;
  std::vector<std::uint8_t> table(count, 0);
  if (const auto* e = std::get_if<Explicit>(&rep_)) {
    for (Mask m : e->members) table[m] = 1;
    return table;
  }
  if (const auto* c = std::get_if<Complement>(&rep_)) {
    table = c->inner->member_table(cap);
    for (auto& v : table) v = v ? 0 : 1;
    return table;
  }
  for (Mask m = 0; m < count; ++m) table[m] = member(m) ? 1 : 0;
  return table;
}

std::vector<CanonicalList> ListPredicate::members(std::size_t cap) const {
  const auto table = member_table(cap);
  std::vector<CanonicalList> out;
  for (Mask m = 0; m < table.size(); ++m) {
    if (table[m]) out.emplace_back(universe_, m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool lp_member(const ListPredicate& t, const RawList& u) {
  require_same_universe(t.universe(), u.universe(), "list predicate membership");
  return t.member(element_mask(u));
}

bool lp_member(const ListPredicate& t, const CanonicalList& u) {
  require_same_universe(t.universe(), u.universe(), "list predicate membership");
  return t.member(u.mask());
}

bool same_members(const ListPredicate& a, const ListPredicate& b, std::size_t cap) {
  require_same_universe(a.universe(), b.universe(), "list predicate comparison");
  return a.member_table(cap) == b.member_table(cap);
}

bool is_functional_mask(const Universe& product, Mask m) {
  const std::size_t width = product.right()->size();
  if (width == 0) return true;
  const Mask row = width == kMaxElements ? ~Mask{0} : bit(static_cast<Element>(width)) - 1;
  for (std::size_t a = 0; a < product.left()->size(); ++a) {
    if (std::popcount((m >> (a * width)) & row) > 1) return false;
  }
  return true;
}

SubsetPredicate::SubsetPredicate(UniverseRef universe, std::vector<std::uint8_t> table)
    : universe_(std::move(universe)), table_(std::move(table)) {
  check_cap(*universe_, kHardCap);
  if (table_.size() != (std::size_t{1} << universe_->size())) {
    throw InvalidModel("subset predicate table has " + std::to_string(table_.size()) +
                       " entries; expected 2^" + std::to_string(universe_->size()));
  }
}

SubsetPredicate SubsetPredicate::constant(UniverseRef universe, bool value, std::size_t cap) {
  check_cap(*universe, cap);
  const std::size_t count = std::size_t{1} << universe->size();
  return SubsetPredicate(std::move(universe), std::vector<std::uint8_t>(count, value ? 1 : 0));
}

SubsetPredicate SubsetPredicate::of(UniverseRef universe, const std::vector<Subset>& members,
                                    std::size_t cap) {
  auto p = constant(universe, false, cap);
  for (const auto& s : members) {
    require_same_universe(universe, s.universe(), "subset predicate");
    p.table_[s.mask()] = 1;
  }
  return p;
}

bool SubsetPredicate::operator()(const Subset& alpha) const {
  require_same_universe(universe_, alpha.universe(), "subset predicate lookup");
  return table_[alpha.mask()] != 0;
}

bool SubsetPredicate::inhabited() const {
  return std::any_of(table_.begin(), table_.end(), [](std::uint8_t v) { return v != 0; });
}

std::vector<Subset> SubsetPredicate::members() const {
  std::vector<Subset> out;
  for (Mask m = 0; m < table_.size(); ++m) {
    if (table_[m]) out.emplace_back(universe_, m);
  }
  return out;
}

SubsetPredicate SubsetPredicate::complement() const {
  auto table = table_;
  for (auto& v : table) v = v ? 0 : 1;
  return SubsetPredicate(universe_, std::move(table));
}

bool operator==(const SubsetPredicate& a, const SubsetPredicate& b) {
  return same_shape(a.universe_, b.universe_) && a.table_ == b.table_;
}

}  // namespace finchar
