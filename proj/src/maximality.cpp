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

#include "finchar/maximality.hpp"

#include "finchar/closures.hpp"

namespace finchar {

namespace {

bool maximal_in(const SubsetPredicate& p, Mask alpha, std::size_t n) {
  if (!p(alpha)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Mask b = bit(static_cast<Element>(i));
    if ((alpha & b) == 0 && p(alpha | b)) return false;
  }
  return true;
}

// Every alpha whose updates all satisfy p must satisfy p as well.
bool progressive(const SubsetPredicate& p, std::size_t n) {
  for (Mask alpha = 0; alpha < p.entries(); ++alpha) {
    bool all_updates = true;
    for (std::size_t i = 0; i < n && all_updates; ++i) {
      const Mask b = bit(static_cast<Element>(i));
      if ((alpha & b) == 0 && !p(alpha | b)) all_updates = false;
    }
    if (all_updates && !p(alpha)) return false;
  }
  return true;
}

}  // namespace

std::vector<Subset> updates(const Subset& alpha) {
  std::vector<Subset> out;
  const auto n = static_cast<Element>(alpha.universe()->size());
  for (Element a = 0; a < n; ++a) {
    if (!alpha.contains(a)) out.push_back(alpha.with(a));
  }
  return out;
}

bool is_maximal(const SubsetPredicate& p, const Subset& alpha) {
  require_same_universe(p.universe(), alpha.universe(), "is_maximal");
  return maximal_in(p, alpha.mask(), p.universe()->size());
}

std::optional<Subset> ttl_witness(const ListPredicate& t, std::size_t cap) {
  const auto p = eng(t, cap);
  if (!p(Mask{0})) return std::nullopt;
  const std::size_t n = t.universe()->size();
  Mask alpha = 0;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < n; ++i) {
      const Mask b = bit(static_cast<Element>(i));
      if ((alpha & b) == 0 && p(alpha | b)) {
        alpha |= b;
        grew = true;
        break;
      }
    }
  }
  return Subset(t.universe(), alpha);
}

std::vector<Subset> max_elements(const SubsetPredicate& p, std::size_t cap) {
  check_cap(*p.universe(), cap);
  std::vector<Subset> out;
  const std::size_t n = p.universe()->size();
  for (Mask alpha = 0; alpha < p.entries(); ++alpha) {
    if (maximal_in(p, alpha, n)) out.emplace_back(p.universe(), alpha);
  }
  return out;
}

std::string_view to_string(Principle k) {
  switch (k) {
    case Principle::ttl:
      return "ttl";
    case Principle::ttl_co:
      return "ttlco";
    case Principle::gui:
      return "gui";
  }
  return "?";
}

std::optional<Principle> parse_principle(std::string_view s) {
  if (s == "ttl") return Principle::ttl;
  if (s == "ttlco") return Principle::ttl_co;
  if (s == "gui") return Principle::gui;
  return std::nullopt;
}

bool evaluate_principle(const ListPredicate& t, Principle kind, std::size_t cap) {
  const std::size_t n = t.universe()->size();
  switch (kind) {
    case Principle::ttl: {
      const auto p = eng(t, cap);
      if (!p.inhabited()) return true;
      for (Mask alpha = 0; alpha < p.entries(); ++alpha) {
        if (maximal_in(p, alpha, n)) return true;
      }
      return false;
    }
    case Principle::ttl_co: {
      const auto p = eng(t, cap);
      bool premise = true;
      for (Mask alpha = 0; alpha < p.entries() && premise; ++alpha) {
        if (p(alpha) && maximal_in(p, alpha, n)) premise = false;
      }
      return !premise || !p.inhabited();
    }
    case Principle::gui: {
      const auto p = eng_exists(t, cap);
      const bool everything = !p.complement().inhabited();
      return !progressive(p, n) || everything;
    }
  }
  return false;
}

}  // namespace finchar
