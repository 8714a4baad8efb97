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
#include <vector>

#include "finchar/predicates.hpp"

namespace finchar {

/// A partial function A -> B, stored as a total table into B + bottom.
///
/// On finite universes relational and decidable partial functions coincide,
/// so this one type serves both.
class PFun {
 public:
  PFun(UniverseRef domain, UniverseRef codomain, std::vector<std::optional<Element>> table);
  static PFun nowhere_defined(UniverseRef domain, UniverseRef codomain);
  /// Reads a functional subset of domain x codomain back as a function.
  static PFun from_graph(UniverseRef domain, UniverseRef codomain, const Subset& graph);

  const UniverseRef& domain_universe() const { return domain_; }
  const UniverseRef& codomain_universe() const { return codomain_; }
  const std::vector<std::optional<Element>>& table() const { return table_; }
  std::optional<Element> operator()(Element a) const { return table_.at(a); }

  Subset dom() const;
  bool total() const;
  PFun with(Element a, Element b) const;

  friend bool operator==(const PFun& f, const PFun& g);

 private:
  UniverseRef domain_;
  UniverseRef codomain_;
  std::vector<std::optional<Element>> table_;
};

/// The non-bottom pairs of f, as a subset of A x B.
Subset pf_graph(const PFun& f);

/// Every one-point extension of f, ordered by (a, b).
std::vector<PFun> pf_updates(const PFun& f);

/// f with graph in eng(T) and no one-point extension in eng(T), or nullopt
/// when the empty list is not in T. T must live over a product A x B.
std::optional<PFun> empcf_witness(const ListPredicate& t, std::size_t cap = kDefaultCap);

/// The pullback of T over A along the projection A x Unit -> A.
ListPredicate project_unit(const ListPredicate& t);

/// T restricted to lists that are graphs of partial functions.
ListPredicate pfun_filter(const ListPredicate& t);

}  // namespace finchar
