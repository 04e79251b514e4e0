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

#ifndef POGS_FUZZY_HPP_
#define POGS_FUZZY_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "pogs/automorphisms.hpp"
#include "pogs/grade.hpp"
#include "pogs/ideals.hpp"
#include "pogs/structures.hpp"
#include "pogs/verdict.hpp"

namespace pogs {

/// A fuzzy subset mu : S -> [0, 1] with exact grades, one per element.
class FuzzySubset {
 public:
  /// Throws InputError on an empty vector or more than kMaxElements grades.
  explicit FuzzySubset(std::vector<Grade> grades);
  FuzzySubset(std::initializer_list<Grade> grades)
      : FuzzySubset(std::vector<Grade>(grades)) {}

  std::size_t size() const { return grades_.size(); }
  const Grade& operator[](std::size_t x) const { return grades_[x]; }
  std::span<const Grade> grades() const { return grades_; }

  /// True iff every grade is 0, i.e. the support is empty.
  bool is_zero() const;

  /// "(1/1, 1/2, 0/1)".
  std::string str() const;

  friend bool operator==(const FuzzySubset&, const FuzzySubset&) = default;

 private:
  std::vector<Grade> grades_;
};

/// {x : mu(x) >= t}.
CrispSubset t_cut(const FuzzySubset& mu, const Grade& t);

/// The distinct grades of mu, ascending.
std::vector<Grade> image_levels(const FuzzySubset& mu);

// The fuzzy predicates below throw InputError when mu is all-zero or its
// size differs from |S|. Clause order is fixed: subsemigroup, interior,
// antitone, automorphism invariance; the first failure is reported.

Verdict is_fuzzy_subsemigroup(const PoGammaSemigroup& s, const FuzzySubset& mu);
Verdict is_fuzzy_interior_ideal(const PoGammaSemigroup& s,
                                const FuzzySubset& mu);
Verdict is_fuzzy_characteristic_interior_ideal(const PoGammaSemigroup& s,
                                               const FuzzySubset& mu);
Verdict is_fuzzy_characteristic_interior_ideal(
    const PoGammaSemigroup& s, const FuzzySubset& mu,
    std::span<const Automorphism> auts);

/// chi_A. Throws InputError for the empty subset.
FuzzySubset characteristic_function(const CrispSubset& a);

/// x -> mu(f(x)).
FuzzySubset compose_with_automorphism(const FuzzySubset& mu,
                                      const Automorphism& f);

}  // namespace pogs

#endif  // POGS_FUZZY_HPP_
