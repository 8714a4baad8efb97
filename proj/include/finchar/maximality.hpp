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
#include <string_view>
#include <vector>

#include "finchar/predicates.hpp"

namespace finchar {

/// Every one-element extension alpha + {a}, a not in alpha, in index order.
std::vector<Subset> updates(const Subset& alpha);

bool is_maximal(const SubsetPredicate& p, const Subset& alpha);

/// A maximal element of eng(T), or nullopt when the empty list is not in T.
/// Starts from the empty set and keeps adding the smallest element that stays
/// inside eng(T).
std::optional<Subset> ttl_witness(const ListPredicate& t, std::size_t cap = kDefaultCap);

/// Every maximal element of P, in binary order.
std::vector<Subset> max_elements(const SubsetPredicate& p, std::size_t cap = kDefaultCap);

enum class Principle { ttl, ttl_co, gui };

std::string_view to_string(Principle k);
std::optional<Principle> parse_principle(std::string_view s);

/// Truth of the closed principle instantiated at T on the finite model.
bool evaluate_principle(const ListPredicate& t, Principle kind, std::size_t cap = kDefaultCap);

}  // namespace finchar
