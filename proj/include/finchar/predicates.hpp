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

// Predicates over lists (T : P(A*)) and over subsets (P : P(P(A))).
//
// List predicates use set semantics: membership of a list depends only on the
// set of elements occurring in it, so every representation is queried through
// the canonical list (equivalently, the element mask).

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "finchar/model.hpp"
#include "finchar/ordered_model.hpp"
#include "finchar/relation.hpp"

namespace finchar {

class ListPredicate {
 public:
  /// A finite set of canonical lists.
  struct Explicit {
    std::vector<Mask> members;  // sorted, unique
  };
  /// A truth table over all canonical lists, indexed by element mask.
  struct SetBased {
    std::vector<std::uint8_t> table;
  };
  /// u is a member iff u is included, element-wise, in one of the generators.
  struct DownwardClosure {
    std::vector<RawList> generators;
    std::vector<Mask> masks;
  };
  /// u is a member iff every pair of u belongs to the relation.
  struct Alignment {
    Relation relation;
  };
  /// u is a member iff its element set is a subchain of the carrier.
  struct Subchains {
    OrderedModel model;
  };
  struct Complement {
    std::shared_ptr<const ListPredicate> inner;
  };
  /// Over A x Unit: u is a member iff its first projection is in `inner`.
  struct UnitPullback {
    std::shared_ptr<const ListPredicate> inner;
  };
  /// Over A x B: u is a member iff u is the graph of a partial function and
  /// u is in `inner`.
  struct Functional {
    std::shared_ptr<const ListPredicate> inner;
  };

  using Representation = std::variant<Explicit, SetBased, DownwardClosure, Alignment,
                                      Subchains, Complement, UnitPullback, Functional>;

  static ListPredicate explicit_set(UniverseRef universe, const std::vector<RawList>& lists);
  static ListPredicate explicit_masks(UniverseRef universe, std::vector<Mask> members);
  static ListPredicate set_based(UniverseRef universe, std::vector<std::uint8_t> table);
  static ListPredicate downward_closure(UniverseRef universe, std::vector<RawList> generators);
  static ListPredicate alignment(Relation relation);
  static ListPredicate subchains(OrderedModel model);
  static ListPredicate complement(ListPredicate inner);
  static ListPredicate unit_pullback(ListPredicate inner);
  static ListPredicate functional(ListPredicate inner);
  /// Every list is a member.
  static ListPredicate all(UniverseRef universe);
  /// No list is a member.
  static ListPredicate none(UniverseRef universe);

  const UniverseRef& universe() const { return universe_; }
  const Representation& representation() const { return rep_; }

  /// Membership of the canonical list with element set `m`.
  bool member(Mask m) const;
  /// Membership of every canonical list, indexed by mask; requires the
  /// universe to be within `cap`.
  std::vector<std::uint8_t> member_table(std::size_t cap = kDefaultCap) const;
  /// Canonical members in lexicographic order.
  std::vector<CanonicalList> members(std::size_t cap = kDefaultCap) const;

 private:
  ListPredicate(UniverseRef universe, Representation rep);

  UniverseRef universe_;
  Representation rep_;
};

bool lp_member(const ListPredicate& t, const RawList& u);
bool lp_member(const ListPredicate& t, const CanonicalList& u);

/// True iff the two predicates have the same canonical members.
bool same_members(const ListPredicate& a, const ListPredicate& b, std::size_t cap = kDefaultCap);

/// Mask over A x B is the graph of a partial function.
bool is_functional_mask(const Universe& product, Mask m);

/// An explicit truth table over every subset of a universe.
class SubsetPredicate {
 public:
  SubsetPredicate(UniverseRef universe, std::vector<std::uint8_t> table);
  static SubsetPredicate constant(UniverseRef universe, bool value,
                                  std::size_t cap = kDefaultCap);
  static SubsetPredicate of(UniverseRef universe, const std::vector<Subset>& members,
                            std::size_t cap = kDefaultCap);

  const UniverseRef& universe() const { return universe_; }
  const std::vector<std::uint8_t>& table() const { return table_; }
  std::size_t entries() const { return table_.size(); }

  bool operator()(Mask alpha) const { return table_[alpha] != 0; }
  bool operator()(const Subset& alpha) const;

  bool inhabited() const;
  std::vector<Subset> members() const;
  SubsetPredicate complement() const;

  friend bool operator==(const SubsetPredicate& a, const SubsetPredicate& b);

 private:
  UniverseRef universe_;
  std::vector<std::uint8_t> table_;
};

}  // namespace finchar
