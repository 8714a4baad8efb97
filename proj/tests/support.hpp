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

#include <initializer_list>
#include <vector>

#include "finchar/predicates.hpp"
#include "oracle.hpp"

namespace finchar::test {

inline ListPredicate lists(const UniverseRef& u,
                           std::initializer_list<std::vector<Element>> items) {
  std::vector<RawList> raw;
  for (const auto& l : items) raw.emplace_back(u, l);
  return ListPredicate::explicit_set(u, raw);
}

inline oracle::Table table(const SubsetPredicate& p) { return p.table(); }

inline oracle::Table table(const ListPredicate& t) { return t.member_table(); }

// The Explicit predicate whose canonical members are the set bits of `code`.
inline ListPredicate from_code(const UniverseRef& u, std::uint64_t code) {
  std::vector<Mask> members;
  for (Mask m = 0; m < (Mask{1} << u->size()); ++m) {
    if (code >> m & 1) members.push_back(m);
  }
  return ListPredicate::explicit_masks(u, members);
}

inline std::vector<Mask> masks(const std::vector<Subset>& subsets) {
  std::vector<Mask> out;
  for (const auto& s : subsets) out.push_back(s.mask());
  return out;
}

}  // namespace finchar::test
