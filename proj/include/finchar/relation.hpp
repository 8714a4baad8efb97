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

/// A binary relation between two universes, stored as a mask over the
/// row-major product.
class Relation {
 public:
  Relation(UniverseRef left, UniverseRef right, Mask pairs = 0);
  static Relation of(UniverseRef left, UniverseRef right,
                     const std::vector<std::pair<Element, Element>>& pairs);
  static Relation full(UniverseRef left, UniverseRef right);

  const UniverseRef& left() const { return left_; }
  const UniverseRef& right() const { return right_; }
  /// The product universe left x right that `mask()` indexes.
  const UniverseRef& product() const { return product_; }
  Mask mask() const { return pairs_; }

  bool contains(Element a, Element b) const;
  std::vector<std::pair<Element, Element>> pairs() const;

  friend bool operator==(const Relation& a, const Relation& b);

 private:
  UniverseRef left_;
  UniverseRef right_;
  UniverseRef product_;
  Mask pairs_;
};

}  // namespace finchar
