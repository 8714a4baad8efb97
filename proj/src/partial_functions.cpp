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

#include "finchar/partial_functions.hpp"

#include <algorithm>

#include "finchar/maximality.hpp"

namespace finchar {

PFun::PFun(UniverseRef domain, UniverseRef codomain, std::vector<std::optional<Element>> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
  if (table_.size() != domain_->size()) {
    throw InvalidModel("partial function table has " + std::to_string(table_.size()) +
                       " entries for a domain of size " + std::to_string(domain_->size()));
  }
  for (const auto& b : table_) {
    if (b) check_element(*codomain_, *b);
  }
}

PFun PFun::nowhere_defined(UniverseRef domain, UniverseRef codomain) {
  const std::size_t n = domain->size();
  return PFun(std::move(domain), std::move(codomain), std::vector<std::optional<Element>>(n));
}

PFun PFun::from_graph(UniverseRef domain, UniverseRef codomain, const Subset& graph) {
  const auto product = Universe::product(domain, codomain);
  require_same_universe(product, graph.universe(), "partial function graph");
  std::vector<std::optional<Element>> table(domain->size());
  for (Element e : graph.elements()) {
    auto [a, b] = product->unpair(e);
    if (table[a]) {
      throw InvalidModel("graph is not functional at " + std::to_string(a));
    }
    table[a] = b;
  }
  return PFun(std::move(domain), std::move(codomain), std::move(table));
}

Subset PFun::dom() const {
  Mask m = 0;
  for (Element a = 0; a < table_.size(); ++a) {
    if (table_[a]) m |= bit(a);
  }
  return Subset(domain_, m);
}

bool PFun::total() const {
  return std::all_of(table_.begin(), table_.end(), [](const auto& b) { return b.has_value(); });
}

PFun PFun::with(Element a, Element b) const {
  auto table = table_;
  table.at(a) = b;
  return PFun(domain_, codomain_, std::move(table));
}

bool operator==(const PFun& f, const PFun& g) {
  return same_shape(f.domain_, g.domain_) && same_shape(f.codomain_, g.codomain_) &&
         f.table_ == g.table_;
}

Subset pf_graph(const PFun& f) {
  const auto product = Universe::product(f.domain_universe(), f.codomain_universe());
  Mask m = 0;
  for (Element a = 0; a < f.table().size(); ++a) {
    if (const auto b = f(a)) m |= bit(product->pair(a, *b));
  }
  return Subset(product, m);
}

std::vector<PFun> pf_updates(const PFun& f) {
  std::vector<PFun> out;
  const auto width = static_cast<Element>(f.codomain_universe()->size());
  for (Element a = 0; a < f.table().size(); ++a) {
    if (f(a)) continue;
    for (Element b = 0; b < width; ++b) out.push_back(f.with(a, b));
  }
  return out;
}

std::optional<PFun> empcf_witness(const ListPredicate& t, std::size_t cap) {
  const auto& product = t.universe();
  if (!product->is_product()) {
    throw UniverseMismatch("maximal partial choice function needs a product universe, got '" +
                           product->name() + "'");
  }
  const auto alpha = ttl_witness(pfun_filter(t), cap);
  if (!alpha) return std::nullopt;
  return PFun::from_graph(product->left(), product->right(),
                          Subset(Universe::product(product->left(), product->right()),
                                 alpha->mask()));
}

ListPredicate project_unit(const ListPredicate& t) { return ListPredicate::unit_pullback(t); }

ListPredicate pfun_filter(const ListPredicate& t) { return ListPredicate::functional(t); }

}  // namespace finchar
