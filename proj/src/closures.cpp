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

#include "finchar/closures.hpp"

namespace finchar {

namespace {

// Both liftings are computed by one pass over masks in increasing order:
// every list over alpha is either the full element set of alpha or a list
// over alpha minus one element.

SubsetPredicate lift(const ListPredicate& t, std::size_t cap, bool universal) {
  auto table = t.member_table(cap);
  const std::size_t n = t.universe()->size();
  for (Mask alpha = 1; alpha < table.size(); ++alpha) {
    for (std::size_t i = 0; i < n; ++i) {
      const Mask b = bit(static_cast<Element>(i));
      if ((alpha & b) == 0) continue;
      if (universal) {
        table[alpha] &= table[alpha & ~b];
      } else {
        table[alpha] |= table[alpha & ~b];
      }
    }
  }
  return SubsetPredicate(t.universe(), std::move(table));
}

ClosureVerdict compare(const SubsetPredicate& p, const SubsetPredicate& rebuilt) {
  ClosureVerdict v;
  for (Mask m = 0; m < p.entries(); ++m) {
    if (p(m) != rebuilt(m)) {
      v.counterexample = Subset(p.universe(), m);
      return v;
    }
  }
  v.holds = true;
  v.witness = restrict(p);
  return v;
}

}  // namespace

SubsetPredicate eng(const ListPredicate& t, std::size_t cap) { return lift(t, cap, true); }

SubsetPredicate eng_exists(const ListPredicate& t, std::size_t cap) {
  return lift(t, cap, false);
}

ListPredicate restrict(const SubsetPredicate& p) {
  return ListPredicate::set_based(p.universe(), p.table());
}

ClosureVerdict is_finite_character(const SubsetPredicate& p, std::size_t cap) {
  check_cap(*p.universe(), cap);
  return compare(p, eng(restrict(p), cap));
}

ClosureVerdict is_open(const SubsetPredicate& p, std::size_t cap) {
  check_cap(*p.universe(), cap);
  return compare(p, eng_exists(restrict(p), cap));
}

bool complement_duality_check(const ListPredicate& t, std::size_t cap) {
  return eng(t, cap).complement() == eng_exists(ListPredicate::complement(t), cap);
}

}  // namespace finchar
