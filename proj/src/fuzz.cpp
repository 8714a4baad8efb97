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

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "finchar/cli.hpp"
#include "finchar/closures.hpp"
#include "finchar/dsl.hpp"
#include "finchar/gdc.hpp"
#include "finchar/maximality.hpp"
#include "finchar/partial_functions.hpp"
#include "finchar/zorn.hpp"

namespace finchar::cli {

namespace {

using dsl::Items;

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

std::size_t below(std::mt19937_64& rng, std::size_t n) {
  return n == 0 ? 0 : static_cast<std::size_t>(rng() % n);
}

bool coin(std::mt19937_64& rng) { return (rng() & 1) != 0; }

Items random_list(std::mt19937_64& rng, std::size_t n, std::size_t max_len) {
  Items out;
  if (n == 0) return out;
  const std::size_t len = below(rng, max_len + 1);
  for (std::size_t i = 0; i < len; ++i) out.push_back(static_cast<Element>(below(rng, n)));
  return out;
}

std::vector<Items> random_lists(std::mt19937_64& rng, std::size_t n, bool with_empty) {
  std::vector<Items> out;
  const std::size_t count = below(rng, 2 * n + 3);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_list(rng, n, n + 1));
  if (with_empty) out.push_back({});
  return out;
}

std::vector<dsl::Pair> random_order(std::mt19937_64& rng, std::size_t n) {
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[below(rng, i)]);
  // Random edges along the permutation, closed transitively.
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) lt[i][j] = coin(rng);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) lt[i][j] = lt[i][j] || (lt[i][k] && lt[k][j]);
    }
  }
  std::vector<dsl::Pair> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (lt[i][j]) out.emplace_back(perm[i], perm[j]);
    }
  }
  return out;
}

bool downward_closed(const SubsetPredicate& p) {
  for (Mask m = 0; m < p.entries(); ++m) {
    if (!p(m)) continue;
    for (Mask s = m; s != 0; s = (s - 1) & m) {
      if (!p(m & ~(s & (~s + 1)))) return false;
    }
  }
  return true;
}

bool upward_closed(const SubsetPredicate& p) {
  const Mask full = p.universe()->full_mask();
  for (Mask m = 0; m < p.entries(); ++m) {
    if (!p(m)) continue;
    for (Mask add = full & ~m; add != 0; add &= add - 1) {
      if (!p(m | (add & (~add + 1)))) return false;
    }
  }
  return true;
}

bool in_max(const std::vector<Subset>& maxima, const Subset& s) {
  return std::find(maxima.begin(), maxima.end(), s) != maxima.end();
}

// No one-point extension of f stays inside eng(T).
bool pf_maximal(const SubsetPredicate& closed, const PFun& f) {
  if (!closed(pf_graph(f))) return false;
  for (const auto& g : pf_updates(f)) {
    if (closed(pf_graph(g))) return false;
  }
  return true;
}

bool some_total_choice(const Universe& product, const SubsetPredicate& closed) {
  const std::size_t n = product.left()->size();
  const std::size_t width = product.right()->size();
  if (n > 0 && width == 0) return false;
  std::vector<Element> f(n, 0);
  for (;;) {
    Mask graph = 0;
    for (Element a = 0; a < n; ++a) graph |= bit(product.pair(a, f[a]));
    if (closed(graph)) return true;
    std::size_t i = 0;
    while (i < n && ++f[i] == width) f[i++] = 0;
    if (i == n) return false;
  }
}

class Run {
 public:
  Run(const FuzzOptions& o, std::uint64_t& states) : o_(o), states_(states) {}

  // Returns the name of the first violated invariant.
  std::optional<std::string> check(const dsl::ModelSpec& spec);

 private:
  bool expect(const char* name, bool ok) {
    ++states_;
    if (!ok && !failed_) failed_ = name;
    return ok;
  }

  SubsetPredicate eng(const ListPredicate& t) const { return o_.hooks.eng(t, o_.cap); }

  void closures(const ListPredicate& t);
  void maximality(const ListPredicate& t);
  void zorn(const dsl::ModelSpec& spec);
  void partial(const ListPredicate& t, const ListPredicate& q);
  void gdc(const dsl::ModelSpec& spec);
  void downward_prime_laws(const ListPredicate& x);

  const FuzzOptions& o_;
  std::uint64_t& states_;
  std::optional<std::string> failed_;
};

void Run::closures(const ListPredicate& t) {
  const auto table = t.member_table(o_.cap);
  const auto closed = eng(t);
  bool oracle = true;
  bool exists_oracle = true;
  const auto open = eng_exists(t, o_.cap);
  for (Mask a = 0; a < table.size(); ++a) {
    bool all = true;
    bool some = false;
    for (Mask b = a;; b = (b - 1) & a) {
      all = all && table[b];
      some = some || table[b];
      if (b == 0) break;
    }
    oracle = oracle && closed(a) == all;
    exists_oracle = exists_oracle && open(a) == some;
  }
  expect("closures.eng_oracle", oracle);
  expect("closures.eng_exists_oracle", exists_oracle);
  expect("closures.restrict_round_trip", closed == eng(restrict(closed)));

  const SubsetPredicate p(t.universe(), table);
  const auto r = restrict(p);
  bool restricted = true;
  for (Mask a = 0; a < table.size(); ++a) restricted = restricted && r.member(a) == p(a);
  expect("closures.restrict", restricted);

  const auto fc = is_finite_character(p, o_.cap);
  expect("closures.fc_iff_downward_closed", fc.holds == downward_closed(p));
  if (fc.holds) {
    expect("closures.fc_witness", fc.witness && eng(*fc.witness) == p);
  } else {
    expect("closures.fc_counterexample",
           fc.counterexample && p(*fc.counterexample) != eng(restrict(p))(*fc.counterexample));
  }
  const auto op = is_open(p, o_.cap);
  expect("closures.open_iff_upward_closed", op.holds == upward_closed(p));
  if (op.holds) {
    expect("closures.open_witness", op.witness && eng_exists(*op.witness, o_.cap) == p);
  } else {
    expect("closures.open_counterexample",
           op.counterexample &&
               p(*op.counterexample) != eng_exists(restrict(p), o_.cap)(*op.counterexample));
  }
  expect("closures.complement_duality", complement_duality_check(t, o_.cap));
}

void Run::maximality(const ListPredicate& t) {
  const auto closed = eng(t);
  const auto maxima = max_elements(closed, o_.cap);
  bool oracle = true;
  std::size_t count = 0;
  const Mask full = t.universe()->full_mask();
  for (Mask a = 0; a < closed.entries(); ++a) {
    if (!closed(a)) continue;
    bool top = true;
    for (Mask add = full & ~a; add != 0 && top; add &= add - 1) {
      top = !closed(a | (add & (~add + 1)));
    }
    if (top) {
      ++count;
      oracle = oracle && in_max(maxima, Subset(t.universe(), a));
    }
  }
  expect("maximality.max_oracle", oracle && count == maxima.size());

  const bool has_empty = t.member(0);
  const auto w = ttl_witness(t, o_.cap);
  if (has_empty) {
    expect("maximality.ttl_witness", w && in_max(maxima, *w) && is_maximal(closed, *w));
  } else {
    expect("maximality.ttl_no_witness", !w);
  }
  for (auto k : {Principle::ttl, Principle::ttl_co, Principle::gui}) {
    expect("maximality.principle", evaluate_principle(t, k, o_.cap));
  }
  if (has_empty && t.universe()->size() <= 4) {
    const auto z = ttl_via_zorn(t, o_.cap);
    expect("zorn.ttl_via_inclusion", z && in_max(maxima, *z));
  }
}

void Run::zorn(const dsl::ModelSpec& spec) {
  const auto m = spec.ordered_model("LT", "E");
  // On a finite strict order every nonempty chain has a top element, so the
  // only obstruction is the empty chain.
  const bool inductive = !m.carrier().empty();
  expect("zorn.inductive", is_inductive(m, o_.cap) == inductive);
  const auto w = zorn_witness(m, o_.cap);
  if (inductive) {
    bool top = w.has_value() && m.carrier().contains(*w);
    for (Element b : m.carrier().elements()) top = top && !m.less(*w, b);
    expect("zorn.witness_maximal", top);
  } else {
    expect("zorn.no_witness", !w);
  }
  expect("zorn.subchains", eng(subchains_as_listpred(m)) == subchain_table(m, o_.cap));

  const auto g = spec.chain_grammar("G");
  expect("zorn.grammar_check", chain_grammar_check(g));
  std::vector<std::pair<Element, Element>> restricted;
  for (auto [a, b] : m.pairs()) {
    if (m.carrier().contains(a) && m.carrier().contains(b)) restricted.emplace_back(a, b);
  }
  expect("zorn.grammar_round_trip",
         chain_grammar_check(g) &&
             order_of_grammar(g) == OrderedModel(m.universe(), restricted, m.carrier()));
}

void Run::partial(const ListPredicate& t, const ListPredicate& q) {
  if (t.member(0)) {
    const auto f = empcf_witness(project_unit(t), o_.cap);
    expect("partial.empcf_unit", f && in_max(max_elements(eng(t), o_.cap), f->dom()));
  }
  if (q.member(0)) {
    const auto f = empcf_witness(q, o_.cap);
    expect("partial.empcf_maximal", f && pf_maximal(eng(q), *f));
  }
}

void Run::downward_prime_laws(const ListPredicate& x) {
  if (!x.member(0) || !is_downward_prime(x, o_.cap)) return;
  const auto& product = *x.universe();
  const auto f = empcf_witness(x, o_.cap);
  Mask domain = 0;
  for (Element e = 0; e < product.size(); ++e) {
    if (x.member(bit(e))) domain |= bit(product.unpair(e).first);
  }
  expect("gdc.dom_law", f && f->dom().mask() == domain);
  if (product.right()->size() == 2 && approximation(x, o_.cap).approximable) {
    expect("gdc.bool_total", f && f->total() && eng(x)(pf_graph(*f)));
  }
  const auto closed = eng(x);
  if (SubsetPredicate(x.universe(), x.member_table(o_.cap)) == closed) {
    expect("gdc.alignment_of_relation",
           same_members(positive_alignment(relation_of(x)), x, o_.cap));
  }
}

void Run::gdc(const dsl::ModelSpec& spec) {
  const auto q = spec.list_predicate("Q");
  const auto& product = *q.universe();
  const auto closed = eng(q);
  const auto approx = approximation(q, o_.cap);
  expect("gdc.fixed_point", phi_step(q, approx.fixed_point, o_.cap) == approx.fixed_point);
  const auto choice = choice_witness(q, o_.cap);
  expect("gdc.approximable_iff_choice", approx.approximable == choice.has_value());
  expect("gdc.approximable_iff_solvable",
         approx.approximable == some_total_choice(product, closed));
  if (choice) expect("gdc.choice_graph", choice->total() && closed(pf_graph(*choice)));

  const auto r = spec.relation("R");
  const auto al = spec.list_predicate("AL");
  expect("gdc.alignment_prime", is_downward_prime(al, o_.cap));
  expect("gdc.alignment_relation", relation_of(al) == r);

  for (const char* name : {"Q", "AL", "D"}) downward_prime_laws(spec.list_predicate(name));

  const std::size_t lifted = product.left()->size() * (product.right()->size() + 1);
  if (q.member(0) && lifted <= std::min(o_.cap, kHardCap)) {
    const auto l = lift_bottom(q, o_.cap);
    const auto c = choice_witness(l, o_.cap);
    expect("gdc.lift_approximable", c.has_value());
    if (c) expect("gdc.lift_maximal", pf_maximal(closed, erase_bottom(*c)));
  }
}

std::optional<std::string> Run::check(const dsl::ModelSpec& spec) {
  const auto text = dsl::serialize(spec);
  const auto again = dsl::parse(text);
  expect("dsl.round_trip", again == spec && dsl::serialize(again) == text);

  const auto t = spec.list_predicate("T");
  const auto d = spec.list_predicate("D");
  bool down = true;
  for (Mask m = 0; m < (Mask{1} << d.universe()->size()); ++m) {
    bool covered = false;
    for (const auto& g : std::get<ListPredicate::DownwardClosure>(d.representation()).generators) {
      covered = covered || is_submask(m, element_mask(g));
    }
    down = down && d.member(m) == covered;
  }
  expect("dsl.downclose", down);

  closures(t);
  maximality(t);
  zorn(spec);
  partial(t, spec.list_predicate("Q"));
  gdc(spec);
  return failed_;
}

}  // namespace

FuzzHooks default_hooks() {
  return FuzzHooks{[](const ListPredicate& t, std::size_t cap) { return finchar::eng(t, cap); }};
}

dsl::ModelSpec random_spec(std::uint64_t seed, std::uint64_t index, std::size_t size) {
  using dsl::UniverseDecl;
  auto rng = stream(seed, index);
  dsl::ModelSpec spec;
  const std::size_t n = below(rng, size + 1);
  spec.add("A", UniverseDecl{UniverseDecl::Form::atomic, n, {}, {}});
  spec.add("T", dsl::ListPredDecl{{"A", {}}, random_lists(rng, n, coin(rng))});

  Items e;
  for (Element a = 0; a < n; ++a) {
    if (coin(rng)) e.push_back(a);
  }
  spec.add("E", dsl::SubsetDecl{"A", e});
  spec.add("LT", dsl::OrderDecl{"A", random_order(rng, n)});
  std::vector<Items> core;
  const auto grammar = grammar_of(spec.ordered_model("LT", "E"));
  for (const auto& u : grammar.core()) core.push_back(u.items());
  spec.add("G", dsl::ChainGrammarDecl{{"A", {}}, core});

  const std::size_t left = below(rng, size + 1);
  const std::size_t right = 1 + below(rng, left == 0 ? size : size / left);
  spec.add("A2", UniverseDecl{UniverseDecl::Form::atomic, left, {}, {}});
  spec.add("B", UniverseDecl{UniverseDecl::Form::atomic, right, {}, {}});
  spec.add("P", UniverseDecl{UniverseDecl::Form::product, 0, "A2", "B"});
  const std::size_t pairs = left * right;
  spec.add("Q", dsl::ListPredDecl{{"P", {}}, random_lists(rng, pairs, coin(rng))});

  Items rel;
  for (Element p = 0; p < pairs; ++p) {
    if (coin(rng)) rel.push_back(p);
  }
  spec.add("R", dsl::RelationDecl{{"A2", "B"}, rel});
  spec.add("AL", dsl::AlignPredDecl{{"A2", "B"}, "R"});
  spec.add("D", dsl::DownCloseDecl{{"P", {}}, random_lists(rng, pairs, false)});
  return spec;
}

Report fuzz(const FuzzOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.command = "fuzz";
  report.flags = {{"iters", std::to_string(options.iters)},
                  {"seed", std::to_string(options.seed)},
                  {"size", std::to_string(options.size)}};
  report.seed = options.seed;
  if (options.size > std::min(options.cap, kHardCap)) {
    throw CapExceeded(options.size, std::min(options.cap, kHardCap));
  }
  report.status = Status::holds;
  for (std::uint64_t i = 0; i < options.iters; ++i) {
    const auto spec = random_spec(options.seed, i, options.size);
    std::optional<std::string> failed;
    try {
      failed = Run(options, report.states).check(spec);
    } catch (const std::exception& e) {
      failed = std::string("exception: ") + e.what();
    }
    if (failed) {
      report.status = Status::fails;
      report.counterexample = dsl::serialize(spec) + "# iteration " + std::to_string(i) +
                              ", violated: " + *failed + "\n";
      break;
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace finchar::cli
