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

#include "finchar/predicates.hpp"

namespace finchar {

/// Universal lifting: alpha is in eng(T) iff every list over alpha's elements
/// is in T.
SubsetPredicate eng(const ListPredicate& t, std::size_t cap = kDefaultCap);

/// Existential lifting: alpha is in eng_exists(T) iff some list over alpha's
/// elements is in T.
SubsetPredicate eng_exists(const ListPredicate& t, std::size_t cap = kDefaultCap);

/// u is in restrict(P) iff hat(u) is in P.
ListPredicate restrict(const SubsetPredicate& p);

struct ClosureVerdict {
  bool holds = false;
  /// restrict(P), present when `holds`.
  std::optional<ListPredicate> witness;
  /// First subset (binary order) on which P and its reconstruction differ.
  std::optional<Subset> counterexample;
};

/// P = eng(restrict(P)).
ClosureVerdict is_finite_character(const SubsetPredicate& p, std::size_t cap = kDefaultCap);

/// P = eng_exists(restrict(P)).
ClosureVerdict is_open(const SubsetPredicate& p, std::size_t cap = kDefaultCap);

/// complement(eng(T)) = eng_exists(complement(T)). Always true on a correct
/// implementation.
bool complement_duality_check(const ListPredicate& t, std::size_t cap = kDefaultCap);

}  // namespace finchar
