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

// The .fch model specification format.
//
//   universe N = k
//   product N = A x B
//   bottom N = A
//   subset N of A = { i, ... }
//   listpred N over U = { [i ...], ... }
//   alignpred N over U = align R
//   downclose N over U = { [i ...], ... }
//   chaingrammar N over U = { [i ...], ... }
//   relation N over U = { (i,j), ... }
//   order N on A = { (i,j), ... }
//
// U is a universe name or `A x B`. Elements of a product are written (i,j),
// the bottom element of a bottom-extended universe is `bot`. `#` starts a
// comment. `downclose` without `over` refers to the latest declared universe.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "finchar/error.hpp"
#include "finchar/ordered_model.hpp"
#include "finchar/predicates.hpp"
#include "finchar/relation.hpp"
#include "finchar/zorn.hpp"

namespace finchar::dsl {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// A universe name or an anonymous product `left x right`.
struct UniverseExpr {
  std::string left;
  std::optional<std::string> right;
  friend bool operator==(const UniverseExpr&, const UniverseExpr&) = default;
};

using Items = std::vector<Element>;
using Pair = std::pair<Element, Element>;

struct UniverseDecl {
  enum class Form { atomic, product, bottom };
  Form form = Form::atomic;
  std::size_t size = 0;  // atomic
  std::string left;      // product left, or bottom base
  std::string right;     // product right
  friend bool operator==(const UniverseDecl&, const UniverseDecl&) = default;
};

struct SubsetDecl {
  std::string universe;
  Items members;  // sorted, unique
  friend bool operator==(const SubsetDecl&, const SubsetDecl&) = default;
};

struct ListPredDecl {
  UniverseExpr over;
  std::vector<Items> lists;  // canonical lists, lexicographic, unique
  friend bool operator==(const ListPredDecl&, const ListPredDecl&) = default;
};

struct AlignPredDecl {
  UniverseExpr over;
  std::string relation;
  friend bool operator==(const AlignPredDecl&, const AlignPredDecl&) = default;
};

struct DownCloseDecl {
  UniverseExpr over;
  std::vector<Items> lists;  // canonical lists, lexicographic, unique
  friend bool operator==(const DownCloseDecl&, const DownCloseDecl&) = default;
};

struct ChainGrammarDecl {
  UniverseExpr over;
  std::vector<Items> lists;  // raw lists, lexicographic, unique
  friend bool operator==(const ChainGrammarDecl&, const ChainGrammarDecl&) = default;
};

struct RelationDecl {
  UniverseExpr over;
  Items pairs;  // product element indices, sorted, unique
  friend bool operator==(const RelationDecl&, const RelationDecl&) = default;
};

struct OrderDecl {
  std::string universe;
  std::vector<Pair> pairs;  // sorted, unique
  friend bool operator==(const OrderDecl&, const OrderDecl&) = default;
};

using Body = std::variant<UniverseDecl, SubsetDecl, ListPredDecl, AlignPredDecl, DownCloseDecl,
                          ChainGrammarDecl, RelationDecl, OrderDecl>;

struct Declaration {
  std::string name;
  Body body;
  friend bool operator==(const Declaration&, const Declaration&) = default;
};

/// Ordered declarations with unique names; references point backwards.
class ModelSpec {
 public:
  /// Validates and appends; contents are normalized to canonical order.
  /// Throws InvalidModel on a duplicate name, an unresolved reference or an
  /// out-of-range literal.
  void add(std::string name, Body body);

  const std::vector<Declaration>& declarations() const { return decls_; }
  bool empty() const { return decls_.empty(); }
  const Declaration* find(std::string_view name) const;

  UniverseRef universe(std::string_view name) const;
  UniverseRef universe(const UniverseExpr& e) const;
  Subset subset(std::string_view name) const;
  /// listpred, alignpred or downclose.
  ListPredicate list_predicate(std::string_view name) const;
  Relation relation(std::string_view name) const;
  ChainGrammar chain_grammar(std::string_view name) const;
  /// The order named `order` with the subset named `carrier` as carrier.
  OrderedModel ordered_model(std::string_view order, std::string_view carrier) const;
  /// Universe a declaration lives over.
  UniverseRef universe_of(std::string_view name) const;

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;

 private:
  const Declaration& get(std::string_view name) const;

  std::vector<Declaration> decls_;
};

ModelSpec parse(std::string_view text);
std::string serialize(const ModelSpec& spec);

/// Renders an element of `u` in literal syntax, e.g. `3`, `(0,1)`, `bot`.
std::string render_element(const Universe& u, Element e);
std::string render_list(const Universe& u, const std::vector<Element>& items);
std::string render_universe(const UniverseExpr& e);

}  // namespace finchar::dsl
