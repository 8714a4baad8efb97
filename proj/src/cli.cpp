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

#include "finchar/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "finchar/closures.hpp"
#include "finchar/gdc.hpp"
#include "finchar/maximality.hpp"
#include "finchar/partial_functions.hpp"
#include "finchar/zorn.hpp"

namespace finchar::cli {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::witness: return "witness";
    case Status::no_witness: return "no-witness";
    case Status::error: return "error";
  }
  return "error";
}

int exit_code(Status s) {
  switch (s) {
    case Status::holds:
    case Status::witness: return 0;
    case Status::fails:
    case Status::no_witness: return 1;
    case Status::error: return 2;
  }
  return 2;
}

std::string to_json(const Report& r, bool include_elapsed) {
  using nlohmann::json;
  auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
  json flags = json::object();
  for (const auto& [k, v] : r.flags) flags[k] = v;
  json j;
  j["command"] = r.command;
  j["inputs"] = {{"file", r.file.empty() ? json(nullptr) : json(r.file)}, {"flags", flags}};
  j["status"] = std::string(to_string(r.status));
  j["witness"] = opt(r.witness);
  j["counterexample"] = opt(r.counterexample);
  j["stats"] = {{"elapsed_ms", include_elapsed ? r.elapsed_ms : 0.0}, {"states", r.states}};
  j["seed"] = opt(r.seed);
  return j.dump(2) + "\n";
}

namespace {

void block(std::ostringstream& out, const char* key, const std::optional<std::string>& text) {
  if (!text) return;
  out << key << ":\n";
  std::istringstream lines(*text);
  for (std::string line; std::getline(lines, line);) out << "  " << line << '\n';
}

}  // namespace

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << '\n';
  if (!r.file.empty()) out << "file: " << r.file << '\n';
  for (const auto& [k, v] : r.flags) out << "--" << k << (v.empty() ? "" : " " + v) << '\n';
  out << "status: " << to_string(r.status) << '\n';
  block(out, "witness", r.witness);
  block(out, "counterexample", r.counterexample);
  if (r.seed) out << "seed: " << *r.seed << '\n';
  out << "states: " << r.states << '\n';
  out << "elapsed_ms: " << std::fixed << std::setprecision(3) << r.elapsed_ms << '\n';
  return out.str();
}

namespace {

// Rendering in .fch literal syntax.

std::string braces(const std::vector<std::string>& parts) {
  if (parts.empty()) return "{ }";
  std::string out = "{ ";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out + " }";
}

std::string render_subset(const std::string& name, const Subset& s) {
  std::vector<std::string> parts;
  for (Element e : s.elements()) parts.push_back(dsl::render_element(*s.universe(), e));
  return "subset " + name + " of " + s.universe()->name() + " = " + braces(parts);
}

std::string render_lists(const std::string& name, const UniverseRef& u,
                         const std::vector<CanonicalList>& lists) {
  std::vector<std::string> parts;
  for (const auto& l : lists) parts.push_back(dsl::render_list(*u, l.items()));
  return "listpred " + name + " over " + u->name() + " = " + braces(parts);
}

std::string render_pfun(const std::string& name, const UniverseRef& product, const PFun& f) {
  std::vector<std::string> parts;
  for (Element a = 0; a < f.table().size(); ++a) {
    if (f(a)) parts.push_back(dsl::render_element(*product, product->pair(a, *f(a))));
  }
  return "relation " + name + " over " + product->name() + " = " + braces(parts);
}

std::string render_order(const std::string& name, const OrderedModel& m) {
  std::vector<std::string> parts;
  for (auto [a, b] : m.pairs()) {
    parts.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  return "order " + name + " on " + m.universe()->name() + " = " + braces(parts);
}

std::string_view axiom_name(GrammarViolation::Axiom a) {
  switch (a) {
    case GrammarViolation::Axiom::empty_list: return "empty-list";
    case GrammarViolation::Axiom::exchange: return "exchange";
    case GrammarViolation::Axiom::deletion: return "deletion";
    case GrammarViolation::Axiom::antisymmetry: return "antisymmetry";
  }
  return "unknown";
}

std::uint64_t entries(const Universe& u) { return std::uint64_t{1} << u.size(); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Options {
  std::string file;
  std::string pred;
  std::string kind;
  std::string order;
  std::string set;
  std::string grammar;
  std::string rel;
  bool enumerate = false;
  bool to_order = false;
  bool check = false;
  bool approx_only = false;
  bool prime_check = false;
  std::uint64_t seed = 0;
  std::size_t size = 3;
  std::size_t iters = 100;
};

void check_fc(const dsl::ModelSpec& spec, const Options& o, std::size_t cap, Report& r,
              bool open) {
  const auto t = spec.list_predicate(o.pred);
  const SubsetPredicate p(t.universe(), t.member_table(cap));
  const auto v = open ? is_open(p, cap) : is_finite_character(p, cap);
  r.states = p.entries();
  r.status = v.holds ? Status::holds : Status::fails;
  if (v.witness) r.witness = render_lists("W", t.universe(), v.witness->members(cap));
  if (v.counterexample) r.counterexample = render_subset("C", *v.counterexample);
}

void ttl(const dsl::ModelSpec& spec, const Options& o, std::size_t cap, Report& r) {
  const auto t = spec.list_predicate(o.pred);
  r.states = entries(*t.universe());
  if (o.enumerate) {
    const auto all = max_elements(eng(t, cap), cap);
    std::string text;
    for (std::size_t i = 0; i < all.size(); ++i) {
      text += (i ? "\n" : "") + render_subset("M" + std::to_string(i), all[i]);
    }
    r.status = all.empty() ? Status::no_witness : Status::witness;
    if (!all.empty()) r.witness = text;
    return;
  }
  const auto w = ttl_witness(t, cap);
  r.status = w ? Status::witness : Status::no_witness;
  if (w) r.witness = render_subset("W", *w);
}

void principle(const dsl::ModelSpec& spec, const Options& o, std::size_t cap, Report& r) {
  const auto kind = parse_principle(o.kind);
  if (!kind) throw CLI::ValidationError("--kind", "expected ttl, ttlco or gui");
  const auto t = spec.list_predicate(o.pred);
  r.states = entries(*t.universe());
  r.status = evaluate_principle(t, *kind, cap) ? Status::holds : Status::fails;
}

void zorn(const dsl::ModelSpec& spec, const Options& o, std::size_t cap, Report& r) {
  const auto m = spec.ordered_model(o.order, o.set);
  r.states = entries(*m.universe());
  const auto w = zorn_witness(m, cap);
  if (w) {
    r.status = Status::witness;
    r.witness = render_subset("Max", Subset(m.universe(), bit(*w)));
    return;
  }
  r.status = Status::no_witness;
  // Smallest subchain without an upper bound in the carrier.
  const auto chains = subchain_table(m, cap);
  for (Mask f = 0; f < chains.entries(); ++f) {
    if (!chains(f)) continue;
    bool bounded = false;
    for (Element a : m.carrier().elements()) {
      bool bound = true;
      for (Element b : mask_elements(f)) bound = bound && m.less_eq(b, a);
      bounded = bounded || bound;
    }
    if (!bounded) {
      r.counterexample = render_subset("Chain", Subset(m.universe(), f));
      return;
    }
  }
}

void chains(const dsl::ModelSpec& spec, const Options& o, Report& r) {
  const auto g = spec.chain_grammar(o.grammar);
  r.states = g.core().size();
  const auto v = find_grammar_violation(g);
  if (v) {
    r.status = Status::fails;
    r.counterexample = "# " + std::string(axiom_name(v->axiom)) + ": " + v->detail;
    return;
  }
  if (!o.to_order) {
    r.status = Status::holds;
    return;
  }
  const auto m = order_of_grammar(g);
  r.status = Status::witness;
  r.witness = render_order("LT", m) + "\n" + render_subset("E", m.carrier());
}

void empcf(const dsl::ModelSpec& spec, const Options& o, std::size_t cap, Report& r) {
  const auto t = spec.list_predicate(o.pred);
  r.states = entries(*t.universe());
  if (!t.universe()->is_product()) {
    const auto f = empcf_witness(project_unit(t), cap);
    r.status = f ? Status::witness : Status::no_witness;
    if (f) r.witness = render_subset("F", f->dom());
    return;
  }
  const auto f = empcf_witness(t, cap);
  r.status = f ? Status::witness : Status::no_witness;
  if (f) r.witness = render_pfun("F", t.universe(), *f);
}

void gdc(const dsl::ModelSpec& spec, const Options& o, std::size_t cap, Report& r) {
  const auto t = spec.list_predicate(o.pred);
  r.states = entries(*t.universe());
  if (o.approx_only) {
    const auto a = approximation(t, cap);
    r.status = a.approximable ? Status::witness : Status::no_witness;
    r.witness = render_lists("Approx", t.universe(), a.fixed_point);
    return;
  }
  const auto f = choice_witness(t, cap);
  r.status = f ? Status::witness : Status::no_witness;
  if (f) r.witness = render_pfun("F", t.universe(), *f);
}

void align(const dsl::ModelSpec& spec, const Options& o, std::size_t cap, Report& r) {
  const auto rel = spec.relation(o.rel);
  const auto a = positive_alignment(rel);
  r.states = entries(*rel.product());
  if (o.prime_check) {
    const bool ok = is_downward_prime(a, cap) && relation_of(a) == rel;
    r.status = ok ? Status::holds : Status::fails;
    return;
  }
  r.status = Status::witness;
  r.witness = render_lists("Align", rel.product(), a.members(cap));
}

void lift(const dsl::ModelSpec& spec, const Options& o, std::size_t cap, Report& r) {
  const auto t = spec.list_predicate(o.pred);
  const auto l = lift_bottom(t, cap);
  r.states = entries(*l.universe());
  const auto c = choice_witness(l, cap);
  r.status = c ? Status::witness : Status::no_witness;
  if (!c) return;
  std::string lifted;
  for (Element a = 0; a < c->table().size(); ++a) {
    lifted += " " + dsl::render_element(*l.universe(), l.universe()->pair(a, *(*c)(a)));
  }
  r.witness = render_pfun("F", t.universe(), erase_bottom(*c)) + "\n# lifted:" + lifted;
}

std::optional<std::size_t> env_cap() {
  const char* v = std::getenv("FINCHAR_MAX_UNIVERSE");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const auto n = std::strtoull(v, &end, 10);
  if (*end != '\0') throw CLI::ValidationError("FINCHAR_MAX_UNIVERSE", "not a number");
  return static_cast<std::size_t>(n);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exhaustive finite-model checks for finite character and choice principles",
               "finchar"};
  app.require_subcommand(1);
  std::string format = "text";
  std::optional<std::size_t> max_universe;
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--max-universe", max_universe, "Exhaustive universe cap");

  Options o;
  std::map<std::string, CLI::App*> subs;
  auto sub = [&](const char* name, const char* help, bool file = true) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    if (file) s->add_option("file", o.file, "Model specification (.fch)")->required();
    subs[name] = s;
    return s;
  };
  for (const char* name : {"check-fc", "check-open"}) {
    sub(name, "Decide a closure property of a predicate")->add_option("--pred", o.pred)->required();
  }
  {
    auto* s = sub("ttl", "Maximal element of eng(T)");
    s->add_option("--pred", o.pred)->required();
    s->add_flag("--enumerate", o.enumerate, "List every maximal element");
  }
  {
    auto* s = sub("principle", "Evaluate TTL, TTLco or GUI");
    s->add_option("--pred", o.pred)->required();
    s->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"ttl", "ttlco", "gui"}));
  }
  {
    auto* s = sub("zorn", "Maximal element of an inductive order");
    s->add_option("--order", o.order)->required();
    s->add_option("--set", o.set)->required();
  }
  {
    auto* s = sub("chains", "Check a list-of-chains grammar");
    s->add_option("--grammar", o.grammar)->required();
    auto* to_order = s->add_flag("--to-order", o.to_order, "Recover the order");
    auto* check = s->add_flag("--check", o.check, "Check the axioms only (default)");
    to_order->excludes(check);
  }
  sub("empcf", "Maximal partial choice function")->add_option("--pred", o.pred)->required();
  {
    auto* s = sub("gdc", "Approximability and total choice function");
    s->add_option("--pred", o.pred)->required();
    s->add_flag("--approx-only", o.approx_only, "Report the approximation only");
  }
  {
    auto* s = sub("align", "Positive alignment of a relation");
    s->add_option("--rel", o.rel)->required();
    s->add_flag("--prime-check", o.prime_check, "Check downward primality and |R_T| = R");
  }
  sub("lift", "Bottom-lifted choice function")->add_option("--pred", o.pred)->required();
  {
    auto* s = sub("fuzz", "Seeded invariant fuzzing", false);
    s->add_option("--seed", o.seed)->required();
    s->add_option("--size", o.size)->required();
    s->add_option("--iters", o.iters)->required();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  std::size_t cap = kDefaultCap;
  try {
    app.parse(reversed);
    if (auto e = env_cap()) cap = *e;
    if (max_universe) cap = *max_universe;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "finchar: " << e.what() << '\n' << "Run with --help for usage.\n";
    return 2;
  }

  Report r;
  r.command = app.get_subcommands().front()->get_name();
  r.file = o.file;
  auto flag = [&](const char* name, const std::string& value) {
    const auto* opt = subs[r.command]->get_option_no_throw(std::string("--") + name);
    if (opt && opt->count() > 0) r.flags.emplace_back(name, value);
  };
  flag("pred", o.pred);
  flag("kind", o.kind);
  flag("order", o.order);
  flag("set", o.set);
  flag("grammar", o.grammar);
  flag("rel", o.rel);
  flag("enumerate", "");
  flag("to-order", "");
  flag("check", "");
  flag("approx-only", "");
  flag("prime-check", "");

  const auto start = std::chrono::steady_clock::now();
  try {
    if (r.command == "fuzz") {
      FuzzOptions fo;
      fo.seed = o.seed;
      fo.size = o.size;
      fo.iters = o.iters;
      fo.cap = cap;
      r.flags = {{"iters", std::to_string(o.iters)},
                 {"seed", std::to_string(o.seed)},
                 {"size", std::to_string(o.size)}};
      r.seed = o.seed;
      r = fuzz(fo);
    } else {
      const auto spec = dsl::parse(read_file(o.file));
      const auto& c = r.command;
      if (c == "check-fc") check_fc(spec, o, cap, r, false);
      else if (c == "check-open") check_fc(spec, o, cap, r, true);
      else if (c == "ttl") ttl(spec, o, cap, r);
      else if (c == "principle") principle(spec, o, cap, r);
      else if (c == "zorn") zorn(spec, o, cap, r);
      else if (c == "chains") chains(spec, o, r);
      else if (c == "empcf") empcf(spec, o, cap, r);
      else if (c == "gdc") gdc(spec, o, cap, r);
      else if (c == "align") align(spec, o, cap, r);
      else if (c == "lift") lift(spec, o, cap, r);
      r.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    }
  } catch (const std::exception& e) {
    r.status = Status::error;
    r.witness.reset();
    r.counterexample.reset();
    err << "finchar: " << (r.file.empty() ? "" : r.file + ":") << e.what() << '\n';
  }
  out << (format == "json" ? to_json(r) : to_text(r));
  return exit_code(r.status);
}

}  // namespace finchar::cli
