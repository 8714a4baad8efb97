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

// Approximability, total choice functions and positive alignments for list
// predicates over a product A x B.
//
// The fixed-point carrier is the set of canonical lists that are graphs of
// partial functions: each a occurs with at most one b.

#include <optional>
#include <vector>

#include "finchar/partial_functions.hpp"
#include "finchar/predicates.hpp"
#include "finchar/relation.hpp"

namespace finchar {

using ListSet = std::vector<CanonicalList>;

/// One application of the extension operator, intersected with X: keeps the
/// u in X that lie in restrict(eng(T)) and extend, at every a not yet in
/// their domain, by some (a, b) into X. Result is in lexicographic order.
ListSet phi_step(const ListPredicate& t, const ListSet& x, std::size_t cap = kDefaultCap);

struct Approximation {
  ListSet fixed_point;
  bool approximable = false;
};

/// Greatest fixed point of phi_step, iterated down from every functional list
/// in restrict(eng(T)).
Approximation approximation(const ListPredicate& t, std::size_t cap = kDefaultCap);

/// A total f with graph in eng(T), extending the empty list inside the
/// greatest fixed point (smallest a, then smallest b). nullopt when T is not
/// approximable.
std::optional<PFun> choice_witness(const ListPredicate& t, std::size_t cap = kDefaultCap);

ListPredicate positive_alignment(const Relation& r);

/// u, v in T implies u * v in T, over canonical members.
bool is_downward_prime(const ListPredicate& t, std::size_t cap = kDefaultCap);

/// {(a, b) : [(a, b)] in T}.
Relation relation_of(const ListPredicate& t);

/// Deletes every (a, bottom) pair of a list over A x B_bot, yielding a list
/// over A x B.
RawList erase_bottom(const RawList& u);

/// Reads f : A -> B_bot as a partial function A -> B (bottom values become
/// undefined).
PFun erase_bottom(const PFun& f);

/// The stage-wise bottom lifting of T over A x B to a predicate over
/// A x B_bot. Stage k extends each stage-(k-1) list u by every (k, b) with
/// erase_bottom(u)@(k, b) in restrict(eng(T)), or by (k, bottom) when there is
/// none; the result is the downward closure of all stages.
ListPredicate lift_bottom(const ListPredicate& t, std::size_t cap = kDefaultCap);

}  // namespace finchar
