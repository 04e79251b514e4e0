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

#ifndef POGS_AUTOMORPHISMS_HPP_
#define POGS_AUTOMORPHISMS_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pogs/ideals.hpp"
#include "pogs/structures.hpp"
#include "pogs/verdict.hpp"

namespace pogs {

/// A bijection on [0, n). Construction checks bijectivity only.
class Permutation {
 public:
  /// Throws InputError unless images is a permutation of [0, n).
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);

  std::size_t n() const { return images_.size(); }
  std::size_t operator()(std::size_t x) const { return images_[x]; }
  std::span<const std::size_t> images() const { return images_; }

  bool is_identity() const;

  /// (this then other)(x) = other(this(x)).
  Permutation then(const Permutation& other) const;
  Permutation inverse() const;

  /// "[1,0,2]".
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// Automorphisms of a Po-Gamma-semigroup are permutations of S that fix
/// Gamma pointwise, preserve every product and are order-isomorphisms.
using Automorphism = Permutation;

/// Throws InputError if perm is not a bijection of [0, n). Checks
/// operation preservation (scan x, g, y) before order isomorphism (x, y).
Verdict is_automorphism(const PoGammaSemigroup& s,
                        std::span<const std::size_t> perm);

/// Aut(S) in lexicographic order of the image arrays; identity first.
std::vector<Automorphism> enumerate_automorphisms(const PoGammaSemigroup& s);

/// f(A).
CrispSubset apply_to_subset(const Automorphism& f, const CrispSubset& a);

/// Interior ideal fixed setwise by every automorphism. The second overload
/// takes a precomputed Aut(S) for callers that test many subsets.
Verdict is_characteristic_interior_ideal(const PoGammaSemigroup& s,
                                         const CrispSubset& a);
Verdict is_characteristic_interior_ideal(const PoGammaSemigroup& s,
                                         const CrispSubset& a,
                                         std::span<const Automorphism> auts);

}  // namespace pogs

#endif  // POGS_AUTOMORPHISMS_HPP_
