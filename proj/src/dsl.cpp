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

#include "finchar/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace finchar::dsl {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void normalize(std::vector<Items>& lists, bool canonical) {
  if (canonical) {
    for (auto& l : lists) {
      std::sort(l.begin(), l.end());
      l.erase(std::unique(l.begin(), l.end()), l.end());
    }
  }
  std::sort(lists.begin(), lists.end());
  lists.erase(std::unique(lists.begin(), lists.end()), lists.end());
}

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_items(const Universe& u, const std::vector<Items>& lists) {
  for (const auto& l : lists) {
    for (Element e : l) check_element(u, e);
  }
}

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { ident, number, punct, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t column = 0;
};

std::vector<Token> lex(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    const std::size_t col = i + 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::ident, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Tok::number, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (std::string_view("{}[](),=").find(c) != std::string_view::npos) {
      out.push_back({Tok::punct, std::string(1, c), col});
      ++i;
    } else {
      throw ParseError(line_no, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::end, "", line.size() + 1});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

class LineParser {
 public:
  LineParser(const ModelSpec& spec, std::vector<Token> tokens, std::size_t line,
             const std::string* latest_universe)
      : spec_(spec), toks_(std::move(tokens)), line_(line), latest_universe_(latest_universe) {}

  Declaration declaration() {
    const Token& kw = expect_ident("a declaration keyword");
    const std::string& k = kw.text;
    if (k == "universe") return universe();
    if (k == "product") return product();
    if (k == "bottom") return bottom();
    if (k == "subset") return subset();
    if (k == "listpred") return list_pred<ListPredDecl>(true);
    if (k == "alignpred") return align_pred();
    if (k == "downclose") return list_pred<DownCloseDecl>(true);
    if (k == "chaingrammar") return list_pred<ChainGrammarDecl>(false);
    if (k == "relation") return relation();
    if (k == "order") return order();
    fail(kw, "unknown declaration '" + k + "'");
  }

  std::size_t name_column() const { return name_column_; }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(line_, t.column, msg);
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  std::string describe(const Token& t) const {
    return t.kind == Tok::end ? "end of line" : "'" + t.text + "'";
  }

  const Token& expect_ident(const char* what) {
    const Token& t = next();
    if (t.kind != Tok::ident) fail(t, std::string("expected ") + what + ", found " + describe(t));
    return t;
  }

  void expect_word(const char* word) {
    const Token& t = next();
    if (t.kind != Tok::ident || t.text != word) {
      fail(t, std::string("expected '") + word + "', found " + describe(t));
    }
  }

  void expect_punct(char c) {
    const Token& t = next();
    if (t.kind != Tok::punct || t.text[0] != c) {
      fail(t, std::string("expected '") + c + "', found " + describe(t));
    }
  }

  bool accept_punct(char c) {
    if (peek().kind == Tok::punct && peek().text[0] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_end() {
    if (peek().kind != Tok::end) fail(peek(), "unexpected " + describe(peek()));
  }

  std::size_t number() {
    const Token& t = next();
    if (t.kind != Tok::number) fail(t, "expected a number, found " + describe(t));
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{}) fail(t, "number out of range");
    return v;
  }

  std::string new_name() {
    const Token& t = expect_ident("a name");
    name_column_ = t.column;
    if (spec_.find(t.text)) fail(t, "duplicate name '" + t.text + "'");
    return t.text;
  }

  const Declaration& reference(const Token& t) {
    const Declaration* d = spec_.find(t.text);
    if (!d) fail(t, "unknown reference '" + t.text + "'");
    return *d;
  }

  std::string universe_name() {
    const Token& t = expect_ident("a universe name");
    if (!std::holds_alternative<UniverseDecl>(reference(t).body)) {
      fail(t, "'" + t.text + "' is not a universe");
    }
    return t.text;
  }

  UniverseExpr universe_expr() {
    UniverseExpr e{universe_name(), std::nullopt};
    if (peek().kind == Tok::ident && peek().text == "x") {
      ++pos_;
      e.right = universe_name();
    }
    return e;
  }

  Element element(const Universe& u) {
    const Token& start = peek();
    if (u.is_product()) {
      expect_punct('(');
      const Element a = element(*u.left());
      expect_punct(',');
      const Element b = element(*u.right());
      expect_punct(')');
      return u.pair(a, b);
    }
    if (u.is_bottom_extended() && start.kind == Tok::ident && start.text == "bot") {
      ++pos_;
      return u.bottom_element();
    }
    const std::size_t v = number();
    const std::size_t limit = u.is_bottom_extended() ? u.size() - 1 : u.size();
    if (v >= limit) {
      fail(start, "index " + std::to_string(v) + " out of range for universe '" + u.name() +
                      "' of size " + std::to_string(u.size()) +
                      (u.is_bottom_extended() ? " (write its last element as bot)" : ""));
    }
    return static_cast<Element>(v);
  }

  Items element_set(const Universe& u) {
    Items out;
    expect_punct('{');
    if (accept_punct('}')) return out;
    do {
      out.push_back(element(u));
    } while (accept_punct(','));
    expect_punct('}');
    return out;
  }

  Items list(const Universe& u) {
    Items out;
    expect_punct('[');
    while (!accept_punct(']')) {
      if (peek().kind == Tok::end) fail(peek(), "unterminated list");
      out.push_back(element(u));
    }
    return out;
  }

  std::vector<Items> list_set(const Universe& u) {
    std::vector<Items> out;
    expect_punct('{');
    if (accept_punct('}')) return out;
    do {
      out.push_back(list(u));
    } while (accept_punct(','));
    expect_punct('}');
    return out;
  }

  Declaration universe() {
    auto name = new_name();
    expect_punct('=');
    UniverseDecl d;
    const Token& size_tok = peek();
    d.size = number();
    if (d.size > kMaxElements) {
      fail(size_tok, "universe size " + std::to_string(d.size) + " exceeds the limit of " +
                         std::to_string(kMaxElements));
    }
    expect_end();
    return {std::move(name), d};
  }

  Declaration product() {
    auto name = new_name();
    expect_punct('=');
    UniverseDecl d;
    d.form = UniverseDecl::Form::product;
    const Token& at = peek();
    d.left = universe_name();
    expect_word("x");
    d.right = universe_name();
    if (spec_.universe(d.left)->size() * spec_.universe(d.right)->size() > kMaxElements) {
      fail(at, "product has more than " + std::to_string(kMaxElements) + " elements");
    }
    expect_end();
    return {std::move(name), d};
  }

  Declaration bottom() {
    auto name = new_name();
    expect_punct('=');
    UniverseDecl d;
    d.form = UniverseDecl::Form::bottom;
    const Token& at = peek();
    d.left = universe_name();
    if (spec_.universe(d.left)->size() + 1 > kMaxElements) {
      fail(at, "bottom extension has more than " + std::to_string(kMaxElements) + " elements");
    }
    expect_end();
    return {std::move(name), d};
  }

  Declaration subset() {
    auto name = new_name();
    expect_word("of");
    SubsetDecl d;
    d.universe = universe_name();
    expect_punct('=');
    d.members = element_set(*spec_.universe(d.universe));
    expect_end();
    return {std::move(name), std::move(d)};
  }

  template <class D>
  Declaration list_pred(bool over_optional) {
    auto name = new_name();
    D d;
    if (peek().kind == Tok::ident && peek().text == "over") {
      ++pos_;
      d.over = universe_expr();
    } else if (over_optional && std::is_same_v<D, DownCloseDecl> && latest_universe_) {
      d.over = UniverseExpr{*latest_universe_, std::nullopt};
    } else if (over_optional && std::is_same_v<D, DownCloseDecl>) {
      fail(peek(), "downclose without 'over' needs an earlier universe declaration");
    } else {
      expect_word("over");
    }
    expect_punct('=');
    d.lists = list_set(*spec_.universe(d.over));
    expect_end();
    return {std::move(name), std::move(d)};
  }

  Declaration align_pred() {
    auto name = new_name();
    expect_word("over");
    AlignPredDecl d;
    const Token& at = peek();
    d.over = universe_expr();
    expect_punct('=');
    expect_word("align");
    const Token& rel = expect_ident("a relation name");
    if (!std::holds_alternative<RelationDecl>(reference(rel).body)) {
      fail(rel, "'" + rel.text + "' is not a relation");
    }
    d.relation = rel.text;
    if (!same_shape(spec_.universe(d.over), spec_.relation(d.relation).product())) {
      fail(at, "universe does not match the universe of relation '" + d.relation + "'");
    }
    expect_end();
    return {std::move(name), std::move(d)};
  }

  Declaration relation() {
    auto name = new_name();
    expect_word("over");
    RelationDecl d;
    const Token& at = peek();
    d.over = universe_expr();
    const auto u = spec_.universe(d.over);
    if (!u->is_product()) fail(at, "a relation needs a product universe");
    expect_punct('=');
    d.pairs = element_set(*u);
    expect_end();
    return {std::move(name), std::move(d)};
  }

  Declaration order() {
    auto name = new_name();
    expect_word("on");
    OrderDecl d;
    d.universe = universe_name();
    const auto u = spec_.universe(d.universe);
    expect_punct('=');
    expect_punct('{');
    if (!accept_punct('}')) {
      do {
        expect_punct('(');
        const Element a = element(*u);
        expect_punct(',');
        const Element b = element(*u);
        expect_punct(')');
        d.pairs.emplace_back(a, b);
      } while (accept_punct(','));
      expect_punct('}');
    }
    expect_end();
    return {std::move(name), std::move(d)};
  }

  const ModelSpec& spec_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t name_column_ = 1;
  const std::string* latest_universe_;
};

}  // namespace

// ---------------------------------------------------------------------------
// ModelSpec

const Declaration* ModelSpec::find(std::string_view name) const {
  for (const auto& d : decls_) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

const Declaration& ModelSpec::get(std::string_view name) const {
  const Declaration* d = find(name);
  if (!d) throw InvalidModel("no declaration named '" + std::string(name) + "'");
  return *d;
}

UniverseRef ModelSpec::universe(std::string_view name) const {
  const auto& d = get(name);
  const auto* u = std::get_if<UniverseDecl>(&d.body);
  if (!u) throw InvalidModel("'" + d.name + "' is not a universe");
  switch (u->form) {
    case UniverseDecl::Form::atomic:
      return Universe::atomic(d.name, u->size);
    case UniverseDecl::Form::product:
      return Universe::product(d.name, universe(u->left), universe(u->right));
    case UniverseDecl::Form::bottom:
      return Universe::bottom(d.name, universe(u->left));
  }
  throw InvalidModel("bad universe declaration");
}

UniverseRef ModelSpec::universe(const UniverseExpr& e) const {
  if (!e.right) return universe(e.left);
  return Universe::product(universe(e.left), universe(*e.right));
}

Subset ModelSpec::subset(std::string_view name) const {
  const auto& d = get(name);
  const auto* s = std::get_if<SubsetDecl>(&d.body);
  if (!s) throw InvalidModel("'" + d.name + "' is not a subset");
  return Subset::of(universe(s->universe), s->members);
}

ListPredicate ModelSpec::list_predicate(std::string_view name) const {
  const auto& d = get(name);
  auto raw = [](const UniverseRef& u, const std::vector<Items>& lists) {
    std::vector<RawList> out;
    for (const auto& l : lists) out.emplace_back(u, l);
    return out;
  };
  return std::visit(
      overloaded{
          [&](const ListPredDecl& p) {
            const auto u = universe(p.over);
            return ListPredicate::explicit_set(u, raw(u, p.lists));
          },
          [&](const AlignPredDecl& p) { return ListPredicate::alignment(relation(p.relation)); },
          [&](const DownCloseDecl& p) {
            const auto u = universe(p.over);
            return ListPredicate::downward_closure(u, raw(u, p.lists));
          },
          [&](const auto&) -> ListPredicate {
            throw InvalidModel("'" + d.name + "' is not a list predicate");
          },
      },
      d.body);
}

Relation ModelSpec::relation(std::string_view name) const {
  const auto& d = get(name);
  const auto* r = std::get_if<RelationDecl>(&d.body);
  if (!r) throw InvalidModel("'" + d.name + "' is not a relation");
  const auto u = universe(r->over);
  Mask m = 0;
  for (Element e : r->pairs) m |= bit(e);
  return Relation(u->left(), u->right(), m);
}

ChainGrammar ModelSpec::chain_grammar(std::string_view name) const {
  const auto& d = get(name);
  const auto* g = std::get_if<ChainGrammarDecl>(&d.body);
  if (!g) throw InvalidModel("'" + d.name + "' is not a chain grammar");
  const auto u = universe(g->over);
  std::vector<RawList> core;
  for (const auto& l : g->lists) core.emplace_back(u, l);
  return ChainGrammar(u, std::move(core));
}

OrderedModel ModelSpec::ordered_model(std::string_view order, std::string_view carrier) const {
  const auto& d = get(order);
  const auto* o = std::get_if<OrderDecl>(&d.body);
  if (!o) throw InvalidModel("'" + d.name + "' is not an order");
  return OrderedModel(universe(o->universe), o->pairs, subset(carrier));
}

UniverseRef ModelSpec::universe_of(std::string_view name) const {
  const auto& d = get(name);
  return std::visit(
      overloaded{
          [&](const UniverseDecl&) { return universe(d.name); },
          [&](const SubsetDecl& s) { return universe(s.universe); },
          [&](const ListPredDecl& p) { return universe(p.over); },
          [&](const AlignPredDecl& p) { return universe(p.over); },
          [&](const DownCloseDecl& p) { return universe(p.over); },
          [&](const ChainGrammarDecl& p) { return universe(p.over); },
          [&](const RelationDecl& p) { return universe(p.over); },
          [&](const OrderDecl& p) { return universe(p.universe); },
      },
      d.body);
}

void ModelSpec::add(std::string name, Body body) {
  if (find(name)) throw InvalidModel("duplicate name '" + name + "'");
  std::visit(
      overloaded{
          [&](UniverseDecl& u) {
            if (u.form == UniverseDecl::Form::atomic) {
              if (u.size > kMaxElements) throw InvalidModel("universe too large");
            } else {
              const auto l = universe(u.left);
              if (u.form == UniverseDecl::Form::product) {
                const auto r = universe(u.right);
                if (l->size() * r->size() > kMaxElements) {
                  throw InvalidModel("product universe too large");
                }
              } else if (l->size() + 1 > kMaxElements) {
                throw InvalidModel("bottom extension too large");
              }
              u.size = 0;
            }
          },
          [&](SubsetDecl& s) {
            const auto u = universe(s.universe);
            for (Element e : s.members) check_element(*u, e);
            sort_unique(s.members);
          },
          [&](ListPredDecl& p) {
            check_items(*universe(p.over), p.lists);
            normalize(p.lists, true);
          },
          [&](AlignPredDecl& p) {
            if (!same_shape(universe(p.over), relation(p.relation).product())) {
              throw UniverseMismatch("alignment universe does not match relation '" +
                                     p.relation + "'");
            }
          },
          [&](DownCloseDecl& p) {
            check_items(*universe(p.over), p.lists);
            normalize(p.lists, true);
          },
          [&](ChainGrammarDecl& p) {
            check_items(*universe(p.over), p.lists);
            normalize(p.lists, false);
          },
          [&](RelationDecl& r) {
            const auto u = universe(r.over);
            if (!u->is_product()) throw UniverseMismatch("a relation needs a product universe");
            for (Element e : r.pairs) check_element(*u, e);
            sort_unique(r.pairs);
          },
          [&](OrderDecl& o) {
            const auto u = universe(o.universe);
            sort_unique(o.pairs);
            // Validates range, irreflexivity and transitivity.
            OrderedModel(u, o.pairs, Subset(u));
          },
      },
      body);
  decls_.push_back(Declaration{std::move(name), std::move(body)});
}

// ---------------------------------------------------------------------------
// parse / serialize

ModelSpec parse(std::string_view text) {
  ModelSpec spec;
  std::optional<std::string> latest_universe;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    auto tokens = lex(line, line_no);
    if (tokens.size() > 1) {
      LineParser p(spec, std::move(tokens), line_no,
                   latest_universe ? &*latest_universe : nullptr);
      Declaration d = p.declaration();
      const bool is_universe = std::holds_alternative<UniverseDecl>(d.body);
      try {
        spec.add(d.name, std::move(d.body));
      } catch (const Error& e) {
        throw ParseError(line_no, p.name_column(), e.what());
      }
      if (is_universe) latest_universe = d.name;
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return spec;
}

std::string render_element(const Universe& u, Element e) {
  if (u.is_product()) {
    auto [a, b] = u.unpair(e);
    return "(" + render_element(*u.left(), a) + "," + render_element(*u.right(), b) + ")";
  }
  if (u.is_bottom(e)) return "bot";
  return std::to_string(e);
}

std::string render_list(const Universe& u, const std::vector<Element>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ' ';
    out += render_element(u, items[i]);
  }
  return out + "]";
}

std::string render_universe(const UniverseExpr& e) {
  return e.right ? e.left + " x " + *e.right : e.left;
}

namespace {

template <class T, class F>
std::string braces(const std::vector<T>& xs, F render) {
  if (xs.empty()) return "{ }";
  std::string out = "{ ";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += render(xs[i]);
  }
  return out + " }";
}

}  // namespace

std::string serialize(const ModelSpec& spec) {
  std::ostringstream out;
  for (const auto& d : spec.declarations()) {
    std::visit(
        overloaded{
            [&](const UniverseDecl& u) {
              switch (u.form) {
                case UniverseDecl::Form::atomic:
                  out << "universe " << d.name << " = " << u.size;
                  break;
                case UniverseDecl::Form::product:
                  out << "product " << d.name << " = " << u.left << " x " << u.right;
                  break;
                case UniverseDecl::Form::bottom:
                  out << "bottom " << d.name << " = " << u.left;
                  break;
              }
            },
            [&](const SubsetDecl& s) {
              const auto u = spec.universe(s.universe);
              out << "subset " << d.name << " of " << s.universe << " = "
                  << braces(s.members, [&](Element e) { return render_element(*u, e); });
            },
            [&](const ListPredDecl& p) {
              const auto u = spec.universe(p.over);
              out << "listpred " << d.name << " over " << render_universe(p.over) << " = "
                  << braces(p.lists, [&](const Items& l) { return render_list(*u, l); });
            },
            [&](const AlignPredDecl& p) {
              out << "alignpred " << d.name << " over " << render_universe(p.over)
                  << " = align " << p.relation;
            },
            [&](const DownCloseDecl& p) {
              const auto u = spec.universe(p.over);
              out << "downclose " << d.name << " over " << render_universe(p.over) << " = "
                  << braces(p.lists, [&](const Items& l) { return render_list(*u, l); });
            },
            [&](const ChainGrammarDecl& p) {
              const auto u = spec.universe(p.over);
              out << "chaingrammar " << d.name << " over " << render_universe(p.over) << " = "
                  << braces(p.lists, [&](const Items& l) { return render_list(*u, l); });
            },
            [&](const RelationDecl& r) {
              const auto u = spec.universe(r.over);
              out << "relation " << d.name << " over " << render_universe(r.over) << " = "
                  << braces(r.pairs, [&](Element e) { return render_element(*u, e); });
            },
            [&](const OrderDecl& o) {
              const auto u = spec.universe(o.universe);
              out << "order " << d.name << " on " << o.universe << " = "
                  << braces(o.pairs, [&](const Pair& p) {
                       return "(" + render_element(*u, p.first) + "," +
                              render_element(*u, p.second) + ")";
                     });
            },
        },
        d.body);
    out << '\n';
  }
  return out.str();
}

}  // namespace finchar::dsl
