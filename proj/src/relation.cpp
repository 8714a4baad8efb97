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

#include "finchar/relation.hpp"

#include "finchar/ordered_model.hpp"

namespace finchar {

Relation::Relation(UniverseRef left, UniverseRef right, Mask pairs)
    : left_(std::move(left)),
      right_(std::move(right)),
      product_(Universe::product(left_, right_)),
      pairs_(pairs) {
  if (!is_submask(pairs_, product_->full_mask())) {
    throw InvalidModel("relation pair out of range");
  }
}

Relation Relation::of(UniverseRef left, UniverseRef right,
                      const std::vector<std::pair<Element, Element>>& pairs) {
  Relation r(std::move(left), std::move(right));
  for (auto [a, b] : pairs) r.pairs_ |= bit(r.product_->pair(a, b));
  return r;
}

Relation Relation::full(UniverseRef left, UniverseRef right) {
  Relation r(std::move(left), std::move(right));
  r.pairs_ = r.product_->full_mask();
  return r;
}

bool Relation::contains(Element a, Element b) const {
  return (pairs_ & bit(product_->pair(a, b))) != 0;
}

std::vector<std::pair<Element, Element>> Relation::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element e : mask_elements(pairs_)) out.push_back(product_->unpair(e));
  return out;
}

bool operator==(const Relation& a, const Relation& b) {
  return a.pairs_ == b.pairs_ && same_shape(a.left_, b.left_) && same_shape(a.right_, b.right_);
}

OrderedModel::OrderedModel(UniverseRef universe,
                           const std::vector<std::pair<Element, Element>>& lt,
                           Subset carrier)
    : universe_(std::move(universe)), above_(universe_->size(), 0), carrier_(std::move(carrier)) {
  require_same_universe(universe_, carrier_.universe(), "ordered model carrier");
  for (auto [a, b] : lt) {
    check_element(*universe_, a);
    check_element(*universe_, b);
    if (a == b) {
      throw InvalidModel("order is not irreflexive: " + std::to_string(a) + " < " +
                         std::to_string(a));
    }
    above_[a] |= bit(b);
  }
  const auto n = static_cast<Element>(universe_->size());
  for (Element a = 0; a < n; ++a) {
    for (Element b : mask_elements(above_[a])) {
      const Mask missing = above_[b] & ~above_[a];
      if (missing != 0) {
        const auto c = static_cast<Element>(std::countr_zero(missing));
        throw InvalidModel("order is not transitive: " + std::to_string(a) + " < " +
                           std::to_string(b) + " < " + std::to_string(c) + " but not " +
                           std::to_string(a) + " < " + std::to_string(c));
      }
    }
  }
}

std::vector<std::pair<Element, Element>> OrderedModel::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < above_.size(); ++a) {
    for (Element b : mask_elements(above_[a])) out.emplace_back(a, b);
  }
  return out;
}

bool operator==(const OrderedModel& a, const OrderedModel& b) {
  return same_shape(a.universe_, b.universe_) && a.above_ == b.above_ &&
         a.carrier_ == b.carrier_;
}

}  // namespace finchar
