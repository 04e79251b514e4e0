// Copyright 2026 The pogs Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POGS_IDEALS_HPP_
#define POGS_IDEALS_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pogs/structures.hpp"
#include "pogs/verdict.hpp"

namespace pogs {

/// A subset of a carrier [0, n), n <= kMaxElements, stored as a bitmask.
/// Subsets over the same carrier order by mask value.
class CrispSubset {
 public:
  /// Throws InputError if n > kMaxElements or mask has bits at or above n.
  explicit CrispSubset(std::size_t n, std::uint64_t mask = 0);
  /// Throws InputError on a member >= n.
  CrispSubset(std::size_t n, std::initializer_list<std::size_t> members);

  static CrispSubset full(std::size_t n);

  std::size_t universe_size() const { return n_; }
  std::uint64_t mask() const { return mask_; }

  bool contains(std::size_t x) const { return (mask_ >> x) & 1u; }
  void insert(std::size_t x);
  std::size_t size() const;
  bool empty() const { return mask_ == 0; }
  bool is_full() const;
  bool is_subset_of(const CrispSubset& other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  std::vector<std::size_t> members() const;

  /// "{0,2}" style, or with labels.
  std::string str(const Labels& labels = {}) const;

  friend bool operator==(const CrispSubset&, const CrispSubset&) = default;

 private:
  std::size_t n_;
  std::uint64_t mask_;
};

/// A Gamma A subset of A. Throws InputError on an empty subset or a carrier
/// size mismatch.
Verdict is_subsemigroup(const PoGammaSemigroup& s, const CrispSubset& a);

/// Subsemigroup, then S Gamma A Gamma S subset of A, then downward closure.
/// The first failing clause is reported with its first counterexample.
Verdict is_interior_ideal(const PoGammaSemigroup& s, const CrispSubset& a);

/// {b : b <= a for some a in A}.
CrispSubset downward_closure(const PoGammaSemigroup& s, const CrispSubset& a);

/// Every non-empty interior ideal, ascending by mask. Always ends with S.
std::vector<CrispSubset> enumerate_interior_ideals(const PoGammaSemigroup& s);

}  // namespace pogs

#endif  // POGS_IDEALS_HPP_
