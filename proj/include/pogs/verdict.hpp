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

#ifndef POGS_VERDICT_HPP_
#define POGS_VERDICT_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pogs/grade.hpp"

namespace pogs {

/// Malformed input: wrong dimensions, out-of-range ids, empty subsets where
/// the definitions require non-empty ones. Distinct from a property failing.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The individual conditions a verdict can fail on.
enum class Clause {
  kAssociativity,
  kReflexivity,
  kAntisymmetry,
  kTransitivity,
  kCompatibilityLeft,   // a <= b  =>  a g c <= b g c
  kCompatibilityRight,  // a <= b  =>  c g a <= c g b
  kSubsemigroup,
  kInteriorClosure,
  kDownwardClosure,
  kOperationPreserving,
  kOrderIsomorphic,
  kAutomorphismInvariance,
  kFuzzySubsemigroup,
  kFuzzyInterior,
  kFuzzyAntitone,
  kFuzzyAutomorphismInvariance,
};

std::string_view clause_name(Clause clause);

/// Optional display names for elements and sorts. Empty entries fall back to
/// the numeric id.
struct Labels {
  std::vector<std::string> elements;
  std::vector<std::string> sorts;

  std::string element(std::size_t i) const;
  std::string sort(std::size_t g) const;
  bool empty() const { return elements.empty() && sorts.empty(); }
  friend bool operator==(const Labels&, const Labels&) = default;
};

/// A concrete counterexample. The meaning of each vector depends on the
/// clause; describe() knows the layout:
///
///   kAssociativity          elements (a,b,c)  sorts (alpha,beta)  products (lhs,rhs)
///   kReflexivity            elements (a)
///   kAntisymmetry           elements (a,b)
///   kTransitivity           elements (a,b,c)
///   kCompatibility*         elements (a,b,c)  sorts (g)           products (lo,hi)
///   kSubsemigroup           elements (x,y)    sorts (g)           products (xgy)
///   kInteriorClosure        elements (x,a,y)  sorts (alpha,beta)  products (xaay)
///   kDownwardClosure        elements (a,b)    b <= a, a in A, b not in A
///   kOperationPreserving    elements (x,y)    sorts (g)           products (f(xgy), f(x)gf(y))
///   kOrderIsomorphic        elements (x,y)
///   kAutomorphismInvariance elements (a)      automorphism f, f(a) not in A
///   kFuzzySubsemigroup      as kSubsemigroup, grades (mu(xgy), min(mu(x),mu(y)))
///   kFuzzyInterior          as kInteriorClosure, grades (mu(xaay), mu(a))
///   kFuzzyAntitone          elements (x,y) with x <= y, grades (mu(x), mu(y))
///   kFuzzyAutomorphismInvariance elements (x), grades (mu(x), mu(f(x))), f
///
/// `level` is set when the failure was found on a cut of a fuzzy subset.
struct Witness {
  Clause clause = Clause::kAssociativity;
  std::vector<std::size_t> elements;
  std::vector<std::size_t> sorts;
  std::vector<std::size_t> products;
  std::vector<Grade> grades;
  std::vector<std::size_t> automorphism;
  std::optional<Grade> level;

  std::string describe(const Labels& labels = {}) const;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Pass, or fail with the first counterexample in the predicate's scan order.
class Verdict {
 public:
  static Verdict pass() { return Verdict(); }
  static Verdict fail(Witness witness) { return Verdict(std::move(witness)); }

  bool passed() const { return !witness_.has_value(); }
  explicit operator bool() const { return passed(); }

  const std::optional<Witness>& witness() const { return witness_; }

  friend bool operator==(const Verdict&, const Verdict&) = default;

 private:
  Verdict() = default;
  explicit Verdict(Witness w) : witness_(std::move(w)) {}

  std::optional<Witness> witness_;
};

}  // namespace pogs

#endif  // POGS_VERDICT_HPP_
