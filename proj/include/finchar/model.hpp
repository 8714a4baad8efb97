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

// Finite universes, subsets and lists.
//
// Every universe is a dense index range 0..size-1. Subsets and canonical lists
// are represented by a bit mask over those indices, so a universe holds at most
// kMaxElements elements. Operations that tabulate all subsets of a universe
// additionally require size <= cap (see check_cap).

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "finchar/error.hpp"

namespace finchar {

using Element = std::uint32_t;
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;
inline constexpr std::size_t kDefaultCap = 16;
inline constexpr std::size_t kHardCap = 24;

inline constexpr Mask bit(Element e) { return Mask{1} << e; }

inline constexpr bool is_submask(Mask sub, Mask super) {
  return (sub & ~super) == 0;
}

/// Elements of a mask in increasing order.
std::vector<Element> mask_elements(Mask m);

class Universe;
using UniverseRef = std::shared_ptr<const Universe>;

/// A named finite ground type. Products index pairs row-major:
/// (a, b) -> a * right.size + b. A bottom extension appends one element,
/// bottom, at index base.size.
class Universe {
 public:
  enum class Kind { atomic, product, bottom_extended };

  static UniverseRef atomic(std::string name, std::size_t size);
  static UniverseRef product(std::string name, UniverseRef left,
                             UniverseRef right);
  static UniverseRef product(UniverseRef left, UniverseRef right);
  static UniverseRef bottom(std::string name, UniverseRef base);
  static UniverseRef bottom(UniverseRef base);
  static UniverseRef boolean();
  static UniverseRef unit();

  const std::string& name() const { return name_; }
  std::size_t size() const { return size_; }
  Kind kind() const { return kind_; }
  bool is_product() const { return kind_ == Kind::product; }
  bool is_bottom_extended() const { return kind_ == Kind::bottom_extended; }

  const UniverseRef& left() const;
  const UniverseRef& right() const;
  const UniverseRef& base() const;

  Mask full_mask() const {
    return size_ == kMaxElements ? ~Mask{0} : bit(static_cast<Element>(size_)) - 1;
  }

  Element pair(Element a, Element b) const;
  std::pair<Element, Element> unpair(Element e) const;
  bool is_bottom(Element e) const {
    return kind_ == Kind::bottom_extended && e + 1 == size_;
  }
  Element bottom_element() const;

  /// Structural equality: atomic universes compare name and size, composite
  /// universes compare their components.
  bool same_shape(const Universe& other) const;

 private:
  Universe(std::string name, std::size_t size, Kind kind, UniverseRef a,
           UniverseRef b);

  std::string name_;
  std::size_t size_;
  Kind kind_;
  UniverseRef a_;
  UniverseRef b_;
};

bool same_shape(const UniverseRef& a, const UniverseRef& b);
void require_same_universe(const UniverseRef& a, const UniverseRef& b,
                           const char* what);
void check_element(const Universe& u, Element e);

/// Throws CapExceeded when the universe cannot be tabulated under `cap`.
void check_cap(const Universe& u, std::size_t cap);

/// An element set over a universe (a finite stand-in for a predicate on A).
class Subset {
 public:
  explicit Subset(UniverseRef universe, Mask members = 0);
  Subset(UniverseRef universe, std::initializer_list<Element> members);
  static Subset of(UniverseRef universe, const std::vector<Element>& members);
  static Subset full(UniverseRef universe);

  const UniverseRef& universe() const { return universe_; }
  Mask mask() const { return members_; }
  bool contains(Element e) const { return (members_ & bit(e)) != 0; }
  bool empty() const { return members_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(members_)); }
  std::vector<Element> elements() const { return mask_elements(members_); }

  Subset with(Element e) const;
  bool subset_of(const Subset& other) const;

  friend bool operator==(const Subset& a, const Subset& b);

 private:
  UniverseRef universe_;
  Mask members_;
};

/// A list of elements, duplicates and order significant.
class RawList {
 public:
  explicit RawList(UniverseRef universe, std::vector<Element> items = {});

  const UniverseRef& universe() const { return universe_; }
  const std::vector<Element>& items() const { return items_; }
  std::size_t length() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  /// u@a
  RawList snoc(Element a) const;

  friend bool operator==(const RawList& a, const RawList& b);
  friend std::strong_ordering operator<=>(const RawList& a, const RawList& b) {
    return a.items_ <=> b.items_;
  }

 private:
  UniverseRef universe_;
  std::vector<Element> items_;
};

/// Sorted duplicate-free representative of a list's element set.
class CanonicalList {
 public:
  CanonicalList(UniverseRef universe, Mask elements);

  const UniverseRef& universe() const { return universe_; }
  Mask mask() const { return mask_; }
  std::vector<Element> items() const { return mask_elements(mask_); }
  RawList raw() const { return RawList(universe_, items()); }

  friend bool operator==(const CanonicalList& a, const CanonicalList& b) {
    return a.mask_ == b.mask_ && same_shape(a.universe_, b.universe_);
  }
  /// Lexicographic on the item sequences.
  friend std::strong_ordering operator<=>(const CanonicalList& a,
                                          const CanonicalList& b);

 private:
  UniverseRef universe_;
  Mask mask_;
};

/// Lexicographic comparison of the sorted element sequences of two masks.
bool lex_less(Mask a, Mask b);

RawList star(const RawList& u, const RawList& v);
bool list_subseteq(const RawList& u, const RawList& v);
bool list_contains(const RawList& u, Element a);
Subset hat(const RawList& u);
CanonicalList canonicalize(const RawList& u);
Mask element_mask(const RawList& u);

/// All 2^size subsets in ascending binary-value order.
std::vector<Subset> enumerate_subsets(const UniverseRef& a,
                                      std::size_t cap = kDefaultCap);

}  // namespace finchar
