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

#include "pogs/theorems.hpp"

#include <gtest/gtest.h>

#include <random>

#include "pogs/generator.hpp"
#include "test_support.hpp"

namespace pogs {
namespace {

using testing::constant_zero;
using testing::left_zero;

const std::vector<Grade> kThree = {Grade::zero(), Grade(1, 2), Grade::one()};

TEST(LevelCriterionTest, BothSidesHold) {
  const EquivalenceReport r =
      check_level_criterion(constant_zero(), FuzzySubset{Grade::one(), Grade(1, 2)});
  EXPECT_TRUE(r.forward);
  EXPECT_TRUE(r.backward);
  EXPECT_TRUE(r.consistent);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(LevelCriterionTest, BothSidesFail) {
  const EquivalenceReport r =
      check_level_criterion(left_zero(), FuzzySubset{Grade::one(), Grade::zero()});
  EXPECT_FALSE(r.forward);
  EXPECT_FALSE(r.backward);
  EXPECT_TRUE(r.consistent);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(LevelCriterionTest, RejectsAllZero) {
  EXPECT_THROW(check_level_criterion(left_zero(), FuzzySubset{Grade::zero(), Grade::zero()}),
               InputError);
}

TEST(MidpointWitnessTest, SubsemigroupClause) {
  const auto w = extract_midpoint_witness(constant_zero(),
                                          FuzzySubset{Grade(1, 4), Grade::one()});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->clause, Clause::kFuzzySubsemigroup);
  EXPECT_EQ(w->elements, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(w->sorts, (std::vector<std::size_t>{0}));
  EXPECT_EQ(w->product, 0u);
  EXPECT_EQ(w->lower, Grade(1, 4));
  EXPECT_EQ(w->upper, Grade::one());
  EXPECT_EQ(w->t0, Grade(5, 8));
  EXPECT_EQ(w->cut_at_t0, CrispSubset(2, {1}));
  EXPECT_NE(w->describe().find("t0 = 5/8"), std::string::npos);
}

TEST(MidpointWitnessTest, InteriorClause) {
  const auto w = extract_midpoint_witness(left_zero(), FuzzySubset{Grade::one(), Grade::zero()});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->clause, Clause::kFuzzyInterior);
  EXPECT_EQ(w->elements, (std::vector<std::size_t>{1, 0, 0}));
  EXPECT_EQ(w->sorts, (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(w->product, 1u);
  EXPECT_EQ(w->t0, Grade(1, 2));
  EXPECT_EQ(w->cut_at_t0, CrispSubset(2, {0}));
  EXPECT_FALSE(is_interior_ideal(left_zero(), w->cut_at_t0).passed());
}

TEST(MidpointWitnessTest, NoneWhenClausesHold) {
  EXPECT_FALSE(extract_midpoint_witness(left_zero(), FuzzySubset{Grade::one(), Grade::one()})
                   .has_value());
  EXPECT_FALSE(extract_midpoint_witness(left_zero(), FuzzySubset{Grade::zero(), Grade::zero()})
                   .has_value());
}

TEST(CharFunctionCriterionTest, Examples) {
  const EquivalenceReport yes = check_char_function_criterion(constant_zero(), CrispSubset(2, {0}));
  EXPECT_TRUE(yes.forward && yes.backward && yes.consistent);
  const EquivalenceReport no = check_char_function_criterion(left_zero(), CrispSubset(2, {0}));
  EXPECT_TRUE(!no.forward && !no.backward && no.consistent);
  EXPECT_THROW(check_char_function_criterion(left_zero(), CrispSubset(2)), InputError);
}

TEST(LemmaTest, Examples) {
  EXPECT_TRUE(check_lemma_char_function_interior(left_zero(), CrispSubset::full(2)).forward);
  const EquivalenceReport r = check_lemma_char_function_interior(left_zero(), CrispSubset(2, {1}));
  EXPECT_FALSE(r.forward);
  EXPECT_FALSE(r.backward);
  EXPECT_TRUE(r.consistent);
}

TEST(CheckKindTest, Names) {
  EXPECT_EQ(check_kind_name(CheckKind::kLevelCriterion), "level-criterion");
  EXPECT_EQ(check_kind_name(CheckKind::kMidpoint), "midpoint-witness");
}

TEST(SweepTest, EmptyCorpus) {
  const SweepSummary s = sweep({}, kThree);
  EXPECT_EQ(s.structures, 0u);
  EXPECT_EQ(s.total_checks(), 0u);
}

TEST(SweepTest, SingletonCorpus) {
  const std::vector<PoGammaSemigroup> corpus = {testing::singleton()};
  const SweepSummary s = sweep(corpus, kThree);
  EXPECT_EQ(s.structures, 1u);
  EXPECT_EQ(s.fuzzy_subsets, 2u);
  EXPECT_EQ(s.crisp_subsets, 1u);
  EXPECT_EQ(s.total_checks(), 4u);
  EXPECT_TRUE(s.refutations.empty());
}

TEST(SweepTest, RejectsGradeSetsWithoutEndpoints) {
  const std::vector<PoGammaSemigroup> corpus = {testing::singleton()};
  const Grade half[] = {Grade::zero(), Grade(1, 2)};
  EXPECT_THROW(sweep(corpus, half), InputError);
}

TEST(SweepTest, RegressionFixture) {
  const auto corpus = build_corpus({.max_n = 2, .max_m = 1, .grade_set = kThree});
  const SweepSummary s = sweep(corpus, kThree);
  EXPECT_EQ(s.structures, 9u);
  EXPECT_EQ(s.fuzzy_subsets, 66u);
  EXPECT_EQ(s.crisp_subsets, 25u);
  EXPECT_EQ(s.level_criterion, (CheckTally{66, 66, 30}));
  EXPECT_EQ(s.char_function_criterion, (CheckTally{25, 25, 13}));
  EXPECT_EQ(s.lemma, (CheckTally{25, 25, 13}));
  EXPECT_EQ(s.midpoint_witnesses, 36u);
  EXPECT_EQ(s.midpoint_sound, 36u);
  EXPECT_TRUE(s.refutations.empty());
}

TEST(SweepTest, SelectedChecksOnly) {
  const auto corpus = build_corpus({.max_n = 2, .max_m = 1, .grade_set = kThree});
  const SweepSummary s = sweep(corpus, kThree, {.level_criterion = false, .lemma = false});
  EXPECT_EQ(s.level_criterion.checks, 0u);
  EXPECT_EQ(s.lemma.checks, 0u);
  EXPECT_EQ(s.char_function_criterion.checks, 25u);
  EXPECT_EQ(s.midpoint_witnesses, 0u);
}

TEST(SweepTest, IndependentOfWorkerCount) {
  const auto corpus = build_corpus(
      {.max_n = 3, .max_m = 1, .orders = OrderMode::kAllCompatible, .grade_set = kThree});
  const SweepSummary one = sweep(corpus, kThree, {.jobs = 1});
  for (std::size_t jobs : {2u, 5u}) {
    const SweepSummary many = sweep(corpus, kThree, {.jobs = jobs});
    EXPECT_EQ(many.fuzzy_subsets, one.fuzzy_subsets);
    EXPECT_EQ(many.level_criterion, one.level_criterion);
    EXPECT_EQ(many.char_function_criterion, one.char_function_criterion);
    EXPECT_EQ(many.lemma, one.lemma);
    EXPECT_EQ(many.midpoint_sound, one.midpoint_sound);
  }
}

TEST(SweepTest, SampledModeIsSeeded) {
  const auto corpus = build_corpus({.max_n = 3, .max_m = 1, .grade_set = kThree});
  const SweepOptions opts{.samples_per_structure = 5, .seed = 11};
  const SweepSummary a = sweep(corpus, kThree, opts);
  const SweepSummary b = sweep(corpus, kThree, opts);
  EXPECT_EQ(a.fuzzy_subsets, corpus.size() * 5);
  EXPECT_EQ(a.level_criterion, b.level_criterion);
  EXPECT_EQ(a.midpoint_witnesses, b.midpoint_witnesses);
}

// The forward direction of the level criterion, checked against cuts at
// arbitrary rational levels rather than only at image levels.
TEST(LevelCriterionTest, ArbitraryCutsOfCharacteristicFuzzyIdeals) {
  const auto corpus = build_corpus(
      {.max_n = 3, .max_m = 2, .orders = OrderMode::kAllCompatible, .grade_set = kThree});
  std::mt19937_64 rng(2024);
  std::size_t checked = 0;
  for (const auto& s : corpus) {
    const auto auts = enumerate_automorphisms(s);
    for (const auto& mu : enumerate_fuzzy_subsets(s.n(), kThree)) {
      if (!is_fuzzy_characteristic_interior_ideal(s, mu, auts)) continue;
      const std::uint64_t q = 1 + uniform_index(rng, 64);
      const Grade t(1 + uniform_index(rng, q), q);
      const CrispSubset cut = t_cut(mu, t);
      if (cut.empty()) continue;
      ASSERT_TRUE(is_characteristic_interior_ideal(s, cut, auts).passed());
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000u);
}

}  // namespace
}  // namespace pogs
