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

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finchar/dsl.hpp"
#include "finchar/model.hpp"
#include "finchar/predicates.hpp"

namespace finchar::cli {

enum class Status { holds, fails, witness, no_witness, error };

std::string_view to_string(Status s);

/// 0 for holds/witness, 1 for fails/no-witness, 2 for error.
int exit_code(Status s);

struct Report {
  std::string command;
  std::string file;                                  // empty for fuzz
  std::vector<std::pair<std::string, std::string>> flags;
  Status status = Status::error;
  std::optional<std::string> witness;
  std::optional<std::string> counterexample;
  double elapsed_ms = 0.0;
  std::uint64_t states = 0;
  std::optional<std::uint64_t> seed;
};

/// Key-sorted JSON text. With include_elapsed = false the elapsed time is
/// written as 0 so that two runs can be compared byte for byte.
std::string to_json(const Report& r, bool include_elapsed = true);
std::string to_text(const Report& r);

/// Hooks let tests swap an operation for a faulty one.
struct FuzzHooks {
  std::function<SubsetPredicate(const ListPredicate&, std::size_t)> eng;
};

FuzzHooks default_hooks();

struct FuzzOptions {
  std::uint64_t seed = 0;
  std::size_t size = 3;
  std::size_t iters = 100;
  std::size_t cap = kDefaultCap;
  FuzzHooks hooks = default_hooks();
};

/// A random spec drawn from the stream for (seed, index). Universes have at
/// most `size` elements; products stay within `size` elements as well.
dsl::ModelSpec random_spec(std::uint64_t seed, std::uint64_t index, std::size_t size);

/// Random models from (seed, iteration) streams, checked against every
/// module invariant. The first failure is reported with a .fch
/// reproduction followed by the name of the failed invariant.
Report fuzz(const FuzzOptions& options);

/// Runs one command line (without the program name). The report goes to
/// `out`, diagnostics to `err`; the return value is the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace finchar::cli
