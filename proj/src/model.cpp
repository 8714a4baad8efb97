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

#include "finchar/model.hpp"

#include <algorithm>

namespace finchar {

std::vector<Element> mask_elements(Mask m) {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  while (m != 0) {
    out.push_back(static_cast<Element>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

Universe::Universe(std::string name, std::size_t size, Kind kind, UniverseRef a,
                   UniverseRef b)
    : name_(std::move(name)), size_(size), kind_(kind), a_(std::move(a)), b_(std::move(b)) {
  if (size_ > kMaxElements) {
    throw InvalidModel("universe '" + name_ + "' has " + std::to_string(size_) +
                       " elements; at most " + std::to_string(kMaxElements) +
                       " are supported");
  }
}

UniverseRef Universe::atomic(std::string name, std::size_t size) {
  return UniverseRef(new Universe(std::move(name), size, Kind::atomic, nullptr, nullptr));
}

UniverseRef Universe::product(std::string name, UniverseRef left, UniverseRef right) {
  const std::size_t size = left->size() * right->size();
  return UniverseRef(
      new Universe(std::move(name), size, Kind::product, std::move(left), std::move(right)));
}

UniverseRef Universe::product(UniverseRef left, UniverseRef right) {
  std::string name = left->name() + " x " + right->name();
  return product(std::move(name), std::move(left), std::move(right));
}

UniverseRef Universe::bottom(std::string name, UniverseRef base) {
  const std::size_t size = base->size() + 1;
  return UniverseRef(
      new Universe(std::move(name), size, Kind::bottom_extended, std::move(base), nullptr));
}

UniverseRef Universe::bottom(UniverseRef base) {
  std::string name = base->name() + "_bot";
  return bottom(std::move(name), std::move(base));
}

UniverseRef Universe::boolean() {
  static const UniverseRef b = atomic("Bool", 2);
  return b;
}

UniverseRef Universe::unit() {
  static const UniverseRef u = atomic("Unit", 1);
  return u;
}

const UniverseRef& Universe::left() const {
  if (kind_ != Kind::product) throw UniverseMismatch("universe '" + name_ + "' is not a product");
  return a_;
}

const UniverseRef& Universe::right() const {
  if (kind_ != Kind::product) throw UniverseMismatch("universe '" + name_ + "' is not a product");
  return b_;
}

const UniverseRef& Universe::base() const {
  if (kind_ != Kind::bottom_extended) {
    throw UniverseMismatch("universe '" + name_ + "' is not bottom-extended");
  }
  return a_;
}

Element Universe::pair(Element a, Element b) const {
  const auto& l = left();
  const auto& r = right();
  check_element(*l, a);
  check_element(*r, b);
  return static_cast<Element>(a * r->size() + b);
}

std::pair<Element, Element> Universe::unpair(Element e) const {
  const auto w = static_cast<Element>(right()->size());
  return {e / w, e % w};
}

Element Universe::bottom_element() const {
  base();
  return static_cast<Element>(size_ - 1);
}

bool Universe::same_shape(const Universe& other) const {
  if (this == &other) return true;
  if (kind_ != other.kind_ || size_ != other.size_) return false;
  switch (kind_) {
    case Kind::atomic:
      return name_ == other.name_;
    case Kind::product:
      return a_->same_shape(*other.a_) && b_->same_shape(*other.b_);
    case Kind::bottom_extended:
      return a_->same_shape(*other.a_);
  }
  return false;
}

bool same_shape(const UniverseRef& a, const UniverseRef& b) {
  return a == b || (a && b && a->same_shape(*b));
}

void require_same_universe(const UniverseRef& a, const UniverseRef& b, const char* what) {
  if (!same_shape(a, b)) {
    throw UniverseMismatch(std::string(what) + ": universe '" + a->name() +
                           "' does not match universe '" + b->name() + "'");
  }
}

void check_element(const Universe& u, Element e) {
  if (e >= u.size()) {
    throw InvalidModel("element index " + std::to_string(e) + " out of range for universe '" +
                       u.name() + "' of size " + std::to_string(u.size()));
  }
}

void check_cap(const Universe& u, std::size_t cap) {
  const std::size_t limit = std::min(cap, kHardCap);
  if (u.size() > limit) throw CapExceeded(u.size(), limit);
}

Subset::Subset(UniverseRef universe, Mask members)
    : universe_(std::move(universe)), members_(members) {
  if (!is_submask(members_, universe_->full_mask())) {
    throw InvalidModel("subset member out of range for universe '" + universe_->name() + "'");
  }
}

Subset::Subset(UniverseRef universe, std::initializer_list<Element> members)
    : Subset(of(std::move(universe), std::vector<Element>(members))) {}

Subset Subset::of(UniverseRef universe, const std::vector<Element>& members) {
  Mask m = 0;
  for (Element e : members) {
    check_element(*universe, e);
    m |= bit(e);
  }
  return Subset(std::move(universe), m);
}

Subset Subset::full(UniverseRef universe) {
  const Mask m = universe->full_mask();
  return Subset(std::move(universe), m);
}

Subset Subset::with(Element e) const {
  check_element(*universe_, e);
  return Subset(universe_, members_ | bit(e));
}

bool Subset::subset_of(const Subset& other) const {
  require_same_universe(universe_, other.universe_, "subset inclusion");
  return is_submask(members_, other.members_);
}

bool operator==(const Subset& a, const Subset& b) {
  return a.members_ == b.members_ && same_shape(a.universe_, b.universe_);
}

RawList::RawList(UniverseRef universe, std::vector<Element> items)
    : universe_(std::move(universe)), items_(std::move(items)) {
  for (Element e : items_) check_element(*universe_, e);
}

RawList RawList::snoc(Element a) const {
  auto items = items_;
  items.push_back(a);
  return RawList(universe_, std::move(items));
}

bool operator==(const RawList& a, const RawList& b) {
  return a.items_ == b.items_ && same_shape(a.universe_, b.universe_);
}

CanonicalList::CanonicalList(UniverseRef universe, Mask elements)
    : universe_(std::move(universe)), mask_(elements) {
  if (!is_submask(mask_, universe_->full_mask())) {
    throw InvalidModel("list element out of range for universe '" + universe_->name() + "'");
  }
}

bool lex_less(Mask a, Mask b) {
  // Walk both sorted sequences in lockstep; the first differing element
  // decides, and a proper prefix is smaller.
  while (a != 0 && b != 0) {
    const int x = std::countr_zero(a);
    const int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

std::strong_ordering operator<=>(const CanonicalList& a, const CanonicalList& b) {
  if (a.mask_ == b.mask_) return std::strong_ordering::equal;
  return lex_less(a.mask_, b.mask_) ? std::strong_ordering::less
                                    : std::strong_ordering::greater;
}

RawList star(const RawList& u, const RawList& v) {
  require_same_universe(u.universe(), v.universe(), "star");
  auto items = u.items();
  items.insert(items.end(), v.items().begin(), v.items().end());
  return RawList(u.universe(), std::move(items));
}

Mask element_mask(const RawList& u) {
  Mask m = 0;
  for (Element e : u.items()) m |= bit(e);
  return m;
}

bool list_subseteq(const RawList& u, const RawList& v) {
  require_same_universe(u.universe(), v.universe(), "list inclusion");
  return is_submask(element_mask(u), element_mask(v));
}

bool list_contains(const RawList& u, Element a) {
  return std::find(u.items().begin(), u.items().end(), a) != u.items().end();
}

Subset hat(const RawList& u) { return Subset(u.universe(), element_mask(u)); }

CanonicalList canonicalize(const RawList& u) {
  return CanonicalList(u.universe(), element_mask(u));
}

std::vector<Subset> enumerate_subsets(const UniverseRef& a, std::size_t cap) {
  check_cap(*a, cap);
  const Mask count = Mask{1} << a->size();
  std::vector<Subset> out;
  out.reserve(count);
  for (Mask m = 0; m < count; ++m) out.emplace_back(a, m);
  return out;
}

}  // namespace finchar
