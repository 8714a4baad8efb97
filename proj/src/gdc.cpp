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

#include "finchar/gdc.hpp"

#include <algorithm>

#include "finchar/closures.hpp"

namespace finchar {

namespace {

const Universe& require_product(const ListPredicate& t, const char* what) {
  if (!t.universe()->is_product()) {
    throw UniverseMismatch(std::string(what) + " needs a product universe, got '" +
                           t.universe()->name() + "'");
  }
  return *t.universe();
}

Mask row_mask(const Universe& product, Element a) {
  const std::size_t width = product.right()->size();
  const Mask row = width == kMaxElements ? ~Mask{0} : bit(static_cast<Element>(width)) - 1;
  return row << (a * width);
}

// Sorted masks <-> a membership table over all masks of the product.
class MaskSet {
 public:
  explicit MaskSet(std::size_t entries) : table_(entries, 0) {}

  void insert(Mask m) { table_[m] = 1; }
  bool contains(Mask m) const { return table_[m] != 0; }
  friend bool operator==(const MaskSet&, const MaskSet&) = default;

  std::vector<Mask> masks() const {
    std::vector<Mask> out;
    for (Mask m = 0; m < table_.size(); ++m) {
      if (table_[m]) out.push_back(m);
    }
    return out;
  }

 private:
  std::vector<std::uint8_t> table_;
};

MaskSet phi(const Universe& product, const SubsetPredicate& closed, const MaskSet& x) {
  MaskSet out(closed.entries());
  const auto n = static_cast<Element>(product.left()->size());
  const auto width = static_cast<Element>(product.right()->size());
  for (Mask u : x.masks()) {
    if (!closed(u)) continue;
    bool extends = true;
    for (Element a = 0; a < n && extends; ++a) {
      if ((u & row_mask(product, a)) != 0) continue;
      bool some = false;
      for (Element b = 0; b < width && !some; ++b) some = x.contains(u | bit(product.pair(a, b)));
      extends = some;
    }
    if (extends) out.insert(u);
  }
  return out;
}

MaskSet greatest_fixed_point(const Universe& product, const SubsetPredicate& closed) {
  MaskSet x(closed.entries());
  for (Mask m = 0; m < closed.entries(); ++m) {
    if (closed(m) && is_functional_mask(product, m)) x.insert(m);
  }
  for (;;) {
    MaskSet next = phi(product, closed, x);
    if (next == x) return x;
    x = std::move(next);
  }
}

ListSet to_list_set(const UniverseRef& u, const std::vector<Mask>& masks) {
  ListSet out;
  out.reserve(masks.size());
  for (Mask m : masks) out.emplace_back(u, m);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ListSet phi_step(const ListPredicate& t, const ListSet& x, std::size_t cap) {
  const auto& product = require_product(t, "phi_step");
  const auto closed = eng(t, cap);
  MaskSet in(closed.entries());
  for (const auto& u : x) {
    require_same_universe(t.universe(), u.universe(), "phi_step");
    if (!is_functional_mask(product, u.mask())) {
      throw InvalidModel("phi_step carrier lists must be partial-function graphs");
    }
    in.insert(u.mask());
  }
  return to_list_set(t.universe(), phi(product, closed, in).masks());
}

Approximation approximation(const ListPredicate& t, std::size_t cap) {
  const auto& product = require_product(t, "approximation");
  const auto gfp = greatest_fixed_point(product, eng(t, cap));
  Approximation out;
  out.approximable = gfp.contains(0);
  out.fixed_point = to_list_set(t.universe(), gfp.masks());
  return out;
}

std::optional<PFun> choice_witness(const ListPredicate& t, std::size_t cap) {
  const auto& product = require_product(t, "choice_witness");
  const auto gfp = greatest_fixed_point(product, eng(t, cap));
  if (!gfp.contains(0)) return std::nullopt;
  const auto n = static_cast<Element>(product.left()->size());
  const auto width = static_cast<Element>(product.right()->size());
  Mask u = 0;
  for (Element a = 0; a < n; ++a) {
    Element b = 0;
    while (b < width && !gfp.contains(u | bit(product.pair(a, b)))) ++b;
    if (b == width) {
      throw Error("fixed point lost an extension; the greatest fixed point is inconsistent");
    }
    u |= bit(product.pair(a, b));
  }
  return PFun::from_graph(product.left(), product.right(), Subset(t.universe(), u));
}

ListPredicate positive_alignment(const Relation& r) { return ListPredicate::alignment(r); }

bool is_downward_prime(const ListPredicate& t, std::size_t cap) {
  const auto table = t.member_table(cap);
  std::vector<Mask> members;
  for (Mask m = 0; m < table.size(); ++m) {
    if (table[m]) members.push_back(m);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!table[members[i] | members[j]]) return false;
    }
  }
  return true;
}

Relation relation_of(const ListPredicate& t) {
  const auto& product = require_product(t, "relation_of");
  Mask pairs = 0;
  for (Element e = 0; e < product.size(); ++e) {
    if (t.member(bit(e))) pairs |= bit(e);
  }
  return Relation(product.left(), product.right(), pairs);
}

RawList erase_bottom(const RawList& u) {
  const auto& product = *u.universe();
  if (!product.is_product() || !product.right()->is_bottom_extended()) {
    throw UniverseMismatch("erase_bottom needs a universe A x B_bot, got '" + product.name() +
                           "'");
  }
  const auto target = Universe::product(product.left(), product.right()->base());
  std::vector<Element> items;
  for (Element e : u.items()) {
    auto [a, b] = product.unpair(e);
    if (!product.right()->is_bottom(b)) items.push_back(target->pair(a, b));
  }
  return RawList(target, std::move(items));
}

PFun erase_bottom(const PFun& f) {
  const auto& codomain = f.codomain_universe();
  if (!codomain->is_bottom_extended()) {
    throw UniverseMismatch("erase_bottom needs a codomain B_bot, got '" + codomain->name() + "'");
  }
  auto table = f.table();
  for (auto& b : table) {
    if (b && codomain->is_bottom(*b)) b.reset();
  }
  return PFun(f.domain_universe(), codomain->base(), std::move(table));
}

ListPredicate lift_bottom(const ListPredicate& t, std::size_t cap) {
  const auto& product = require_product(t, "lift_bottom");
  const auto closed = eng(t, cap);
  const auto& domain = product.left();
  const auto& codomain = product.right();
  const auto lifted = Universe::product(domain, Universe::bottom(codomain));
  const auto width = static_cast<Element>(codomain->size());
  const Element bottom = width;

  struct Partial {
    std::vector<Element> items;  // over A x B_bot
    Mask erased;                 // over A x B
  };
  std::vector<Partial> stage{Partial{{}, 0}};
  std::vector<RawList> generators{RawList(lifted)};
  for (Element k = 0; k < domain->size(); ++k) {
    std::vector<Partial> next;
    for (const auto& u : stage) {
      bool extended = false;
      for (Element b = 0; b < width; ++b) {
        const Mask candidate = u.erased | bit(product.pair(k, b));
        if (!closed(candidate)) continue;
        extended = true;
        auto items = u.items;
        items.push_back(lifted->pair(k, b));
        next.push_back(Partial{std::move(items), candidate});
      }
      if (!extended) {
        auto items = u.items;
        items.push_back(lifted->pair(k, bottom));
        next.push_back(Partial{std::move(items), u.erased});
      }
    }
    stage = std::move(next);
    for (const auto& u : stage) generators.emplace_back(lifted, u.items);
  }
  return ListPredicate::downward_closure(lifted, std::move(generators));
}

}  // namespace finchar
