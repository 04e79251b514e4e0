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

#ifndef POGS_THEOREMS_HPP_
#define POGS_THEOREMS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pogs/automorphisms.hpp"
#include "pogs/fuzzy.hpp"
#include "pogs/grade.hpp"
#include "pogs/ideals.hpp"
#include "pogs/structures.hpp"
#include "pogs/verdict.hpp"

namespace pogs {

/// Outcome of evaluating both sides of a biconditional on one instance.
/// `witness` is set exactly when the sides disagree, and is the
/// counterexample from whichever side failed.
struct EquivalenceReport {
  bool forward = false;
  bool backward = false;
  bool consistent = true;
  std::optional<Witness> witness;
};

/// A fuzzy closure violation turned into a crisp one: at level t0, strictly
/// between the two sides of the violated inequality, the cut contains the
/// named inputs but not their product.
///
/// For kFuzzySubsemigroup: elements (x0, y0), sorts (g), lower = mu(x0 g y0),
/// upper = min(mu(x0), mu(y0)).
/// For kFuzzyInterior: elements (x0, a0, y0), sorts (alpha, beta),
/// lower = mu(x0 alpha a0 beta y0), upper = mu(a0).
struct MidpointWitness {
  Clause clause = Clause::kFuzzySubsemigroup;
  std::vector<std::size_t> elements;
  std::vector<std::size_t> sorts;
  std::size_t product = 0;
  Grade lower;
  Grade upper;
  Grade t0;
  CrispSubset cut_at_t0{1};

  std::string describe(const Labels& labels = {}) const;
};

/// mu is a fuzzy characteristic interior ideal iff every non-empty cut is a
/// characteristic interior ideal. Cuts are taken at 0 and at each image
/// level, which covers every distinct non-empty cut. Throws InputError on an
/// all-zero mu.
EquivalenceReport check_level_criterion(const PoGammaSemigroup& s,
                                        const FuzzySubset& mu);
EquivalenceReport check_level_criterion(const PoGammaSemigroup& s,
                                        const FuzzySubset& mu,
                                        std::span<const Automorphism> auts);

/// The first subsemigroup violation, or failing that the first interior
/// violation, as a midpoint witness; nothing if both clauses hold. Throws
/// std::logic_error if the constructed cut does not exhibit the violation.
std::optional<MidpointWitness> extract_midpoint_witness(
    const PoGammaSemigroup& s, const FuzzySubset& mu);

/// A is a characteristic interior ideal iff chi_A is a fuzzy characteristic
/// interior ideal.
EquivalenceReport check_char_function_criterion(const PoGammaSemigroup& s,
                                                const CrispSubset& a);
EquivalenceReport check_char_function_criterion(
    const PoGammaSemigroup& s, const CrispSubset& a,
    std::span<const Automorphism> auts);

/// A is an interior ideal iff chi_A is a fuzzy interior ideal.
EquivalenceReport check_lemma_char_function_interior(const PoGammaSemigroup& s,
                                                     const CrispSubset& a);

enum class CheckKind { kLevelCriterion, kCharFunctionCriterion, kLemma, kMidpoint };

std::string_view check_kind_name(CheckKind kind);

struct SweepOptions {
  bool level_criterion = true;
  bool char_function_criterion = true;
  bool lemma = true;
  /// Worker threads; the summary does not depend on this.
  std::size_t jobs = 1;
  /// If set, this many seeded fuzzy subsets per structure replace the
  /// exhaustive enumeration.
  std::optional<std::size_t> samples_per_structure;
  std::uint64_t seed = 0;
};

/// A check whose two sides disagreed, or an unsound midpoint witness.
struct Refutation {
  CheckKind kind = CheckKind::kLevelCriterion;
  std::size_t structure_index = 0;
  PoGammaSemigroup structure;
  /// The fuzzy subset or crisp subset under test, rendered.
  std::string subject;
  EquivalenceReport report;
};

struct CheckTally {
  std::size_t checks = 0;
  std::size_t consistent = 0;
  /// Instances where the left-hand side held (non-vacuity).
  std::size_t forward_holds = 0;

  friend bool operator==(const CheckTally&, const CheckTally&) = default;
};

struct SweepSummary {
  std::size_t structures = 0;
  std::size_t fuzzy_subsets = 0;
  std::size_t crisp_subsets = 0;
  CheckTally level_criterion;
  CheckTally char_function_criterion;
  CheckTally lemma;
  std::size_t midpoint_witnesses = 0;
  std::size_t midpoint_sound = 0;
  std::vector<Refutation> refutations;

  std::size_t total_checks() const {
    return level_criterion.checks + char_function_criterion.checks +
           lemma.checks;
  }
};

/// Runs the selected equivalence checks on every structure, every fuzzy
/// subset over grade_set (all-zero excluded) and every non-empty crisp
/// subset. The midpoint witness is extracted and checked alongside the level
/// criterion. Refutations are collected, never thrown. Throws InputError if
/// grade_set lacks 0 or 1.
SweepSummary sweep(std::span<const PoGammaSemigroup> corpus,
                   std::span<const Grade> grade_set,
                   const SweepOptions& options = {});

}  // namespace pogs

#endif  // POGS_THEOREMS_HPP_
