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
#include <stdexcept>
#include <string>

namespace finchar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live over universes of different shape.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

/// An exhaustive operation was asked to tabulate a universe above the cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t size, std::size_t cap)
      : Error("universe of size " + std::to_string(size) +
              " exceeds the exhaustive cap of " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

/// A value violates the invariants of its domain type (e.g. a relation that
/// is not a strict order, an index out of range, a list grammar violating
/// its axioms).
class InvalidModel : public Error {
 public:
  using Error::Error;
};

}  // namespace finchar
