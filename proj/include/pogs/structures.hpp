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

#ifndef POGS_STRUCTURES_HPP_
#define POGS_STRUCTURES_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pogs/verdict.hpp"

namespace pogs {

/// Subsets are bitmasks, so carriers are capped at 64 elements. Everything
/// exhaustive in this library is far below that.
inline constexpr std::size_t kMaxElements = 64;

struct ElementId {
  std::size_t index = 0;
  friend auto operator<=>(const ElementId&, const ElementId&) = default;
};

struct GammaId {
  std::size_t index = 0;
  friend auto operator<=>(const GammaId&, const GammaId&) = default;
};

/// A carrier of n elements with m binary operations, one per sort. The table
/// is stored flat in (a, g, b) row-major order: entry (a * m + g) * n + b.
///
/// Construction checks shape and range only. Associativity is a separate
/// verdict (validate_gamma_semigroup) so that candidate tables can be built
/// and rejected with a witness.
class GammaSemigroup {
 public:
  GammaSemigroup(std::size_t n, std::size_t m, std::vector<std::size_t> table);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::span<const std::size_t> table() const { return table_; }

  /// Checked product; throws InputError on an out-of-range id.
  ElementId product(ElementId a, GammaId g, ElementId b) const;

  /// Unchecked product for inner loops.
  std::size_t at(std::size_t a, std::size_t g, std::size_t b) const {
    return table_[(a * m_ + g) * n_ + b];
  }

  friend bool operator==(const GammaSemigroup&,
                         const GammaSemigroup&) = default;

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<std::size_t> table_;
};

/// Verdict on associativity, (a alpha b) beta c = a alpha (b beta c). The
/// witness is the lexicographically first failing (a, alpha, b, beta, c).
/// Throws InputError when the table has the wrong size or an entry >= n.
Verdict validate_gamma_semigroup(std::size_t n, std::size_t m,
                                 std::span<const std::size_t> table);
Verdict validate_gamma_semigroup(const GammaSemigroup& sgp);

/// A binary relation on [0, n) stored as a full n x n matrix; leq(a, b)
/// means a <= b. Whether it is actually a partial order is decided by
/// validate_partial_order.
class PartialOrder {
 public:
  /// Row-major n x n matrix. Throws InputError if rel.size() != n * n.
  PartialOrder(std::size_t n, std::vector<bool> rel);

  static PartialOrder discrete(std::size_t n);
  /// Reflexive pairs are added; nothing else is (no transitive closure).
  static PartialOrder from_pairs(
      std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> pairs);

  std::size_t n() const { return n_; }
  bool leq(std::size_t a, std::size_t b) const { return rel_[a * n_ + b]; }

  /// Non-reflexive pairs (a, b) with a <= b, in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;

  friend bool operator==(const PartialOrder&, const PartialOrder&) = default;

 private:
  std::size_t n_;
  std::vector<bool> rel_;
};

/// Reflexivity, then antisymmetry, then transitivity; first failure wins.
Verdict validate_partial_order(const PartialOrder& ord);

/// Both-sided monotonicity of every operation. Scan order (a, b, c, g),
/// left side before right. Throws InputError on a size mismatch.
Verdict validate_compatibility(const GammaSemigroup& sgp,
                               const PartialOrder& ord);

/// Raised when assembling a PoGammaSemigroup from parts that fail one of the
/// three structural verdicts.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(Witness witness);
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

/// A validated partially ordered Gamma-semigroup. Only obtainable through
/// create(), so every instance is associative with a compatible partial
/// order; downstream modules rely on that.
class PoGammaSemigroup {
 public:
  /// Throws ValidationError (associativity, order axiom or compatibility) or
  /// InputError (size mismatch).
  static PoGammaSemigroup create(GammaSemigroup sgp, PartialOrder ord);

  const GammaSemigroup& sgp() const { return sgp_; }
  const PartialOrder& order() const { return ord_; }

  std::size_t n() const { return sgp_.n(); }
  std::size_t m() const { return sgp_.m(); }
  std::size_t at(std::size_t a, std::size_t g, std::size_t b) const {
    return sgp_.at(a, g, b);
  }
  bool leq(std::size_t a, std::size_t b) const { return ord_.leq(a, b); }

  friend bool operator==(const PoGammaSemigroup&,
                         const PoGammaSemigroup&) = default;

 private:
  PoGammaSemigroup(GammaSemigroup sgp, PartialOrder ord)
      : sgp_(std::move(sgp)), ord_(std::move(ord)) {}

  GammaSemigroup sgp_;
  PartialOrder ord_;
};

ElementId product(const PoGammaSemigroup& s, ElementId a, GammaId g,
                  ElementId b);

}  // namespace pogs

#endif  // POGS_STRUCTURES_HPP_
