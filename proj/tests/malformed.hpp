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

#include <cstddef>
#include <vector>

namespace finchar::test {

struct Malformed {
  const char* text;
  std::size_t line;
  std::size_t column;
};

// Malformed .fch inputs and where the first error must be reported.
inline const std::vector<Malformed>& malformed_inputs() {
  static const std::vector<Malformed> cases = {
      {"universe A = 2\nlistpred T over A = { [3] }", 2, 24},
      {"universe A = x", 1, 14},
      {"univers A = 2", 1, 1},
      {"universe A = 2\nuniverse A = 3", 2, 10},
      {"listpred T over A = { [] }", 1, 17},
      {"universe A = 2\nlistpred T over A = { [0 1 }", 2, 28},
      {"universe A = 2\nlistpred T over A = { [0], [1] ", 2, 32},
      {"universe A = 2\nsubset E of A = { 0, 2 }", 2, 22},
      {"universe A = 2\norder LT on A = { (0,0) }", 2, 7},
      {"universe A = 3\norder LT on A = { (0,1), (1,2) }", 2, 7},
      {"universe A = 2\nrelation R over A = { (0,1) }", 2, 17},
      {"universe A = 2\nrelation R over A x A = { (0,2) }", 2, 30},
      {"universe A = 2\nrelation R over A x A = { (0 1) }", 2, 30},
      {"universe A = 2\nrelation R over A x A = { (0,1) }\nalignpred AL over A = align R", 3, 19},
      {"universe A = 2\nlistpred T over A = { [] }\nalignpred AL over A x A = align T", 3, 33},
      {"universe A = 2\nsubset E of A = { 0 } extra", 2, 23},
      {"# comment\n\nuniverse A = 2\nlistpred T over A = { [0] } $", 4, 29},
      {"universe A = 2\r\nproduct P = A x Q\r\n", 2, 17},
      {"universe A = 2\nchaingrammar G over A = { [0 5] }", 2, 30},
      {"universe A = 2\nbottom AB = A\nsubset E of AB = { bot, 3 }", 3, 25},
  };
  return cases;
}

}  // namespace finchar::test
