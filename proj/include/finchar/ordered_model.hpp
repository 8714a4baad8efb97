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

#include <utility>
#include <vector>

#include "finchar/model.hpp"

namespace finchar {

/// A universe with a strict order and a carrier subset E.
///
/// The order is validated on construction: irreflexive and transitive.
class OrderedModel {
 public:
  OrderedModel(UniverseRef universe,
               const std::vector<std::pair<Element, Element>>& lt,
               Subset carrier);

  const UniverseRef& universe() const { return universe_; }
  const Subset& carrier() const { return carrier_; }

  bool less(Element a, Element b) const { return (above_[a] & bit(b)) != 0; }
  bool less_eq(Element a, Element b) const { return a == b || less(a, b); }
  /// Elements strictly above `a`.
  Mask above(Element a) const { return above_[a]; }
  std::vector<std::pair<Element, Element>> pairs() const;

  friend bool operator==(const OrderedModel& a, const OrderedModel& b);

 private:
  UniverseRef universe_;
  std::vector<Mask> above_;
  Subset carrier_;
};

}  // namespace finchar
