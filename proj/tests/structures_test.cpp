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

#include "pogs/structures.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_support.hpp"

namespace pogs {
namespace {

using testing::chain01;
using testing::constant_zero_table;
using testing::left_zero_table;

TEST(ProductTest, ReadsTheTable) {
  EXPECT_EQ(left_zero_table(2).product({0}, {0}, {1}), ElementId{0});
  EXPECT_EQ(testing::singleton().sgp().product({0}, {0}, {0}), ElementId{0});
  EXPECT_EQ(product(testing::constant_zero(), {1}, {0}, {1}), ElementId{0});
}

TEST(ProductTest, RejectsOutOfRangeIds) {
  const auto s = testing::left_zero();
  EXPECT_THROW(product(s, {2}, {0}, {0}), InputError);
  EXPECT_THROW(product(s, {0}, {1}, {0}), InputError);
  EXPECT_THROW(product(s, {0}, {0}, {5}), InputError);
}

TEST(GammaSemigroupTest, RejectsMalformedTables) {
  EXPECT_THROW(GammaSemigroup(2, 1, {0, 0, 0}), InputError);
  EXPECT_THROW(GammaSemigroup(2, 1, {0, 0, 0, 2}), InputError);
  EXPECT_THROW(GammaSemigroup(0, 1, {}), InputError);
  EXPECT_THROW(GammaSemigroup(1, 0, {}), InputError);
  const std::vector<std::size_t> bad = {0, 0, 0, 7};
  EXPECT_THROW(validate_gamma_semigroup(2, 1, bad), InputError);
}

TEST(ValidateGammaSemigroupTest, LeftZeroIsAssociative) {
  EXPECT_TRUE(validate_gamma_semigroup(left_zero_table(2)).passed());
}

TEST(ValidateGammaSemigroupTest, SingletonIsAssociativeForAnyM) {
  for (std::size_t m = 1; m <= 4; ++m) {
    EXPECT_TRUE(validate_gamma_semigroup(1, m, std::vector<std::size_t>(m, 0)).passed());
  }
}

TEST(ValidateGammaSemigroupTest, ReportsFirstViolation) {
  // 0*0=1, 0*1=0, 1*0=0, 1*1=0.
  const std::vector<std::size_t> table = {1, 0, 0, 0};
  const auto expected = oracle::first_associativity_violation(2, 1, table);
  ASSERT_EQ(expected, (std::vector<std::size_t>{0, 0, 0, 0, 1}));

  const Verdict v = validate_gamma_semigroup(2, 1, table);
  ASSERT_FALSE(v.passed());
  const Witness& w = *v.witness();
  EXPECT_EQ(w.clause, Clause::kAssociativity);
  EXPECT_EQ(w.elements, (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_EQ(w.sorts, (std::vector<std::size_t>{0, 0}));
  // (0*0)*1 = 1*1 = 0 but 0*(0*1) = 0*0 = 1.
  EXPECT_EQ(w.products, (std::vector<std::size_t>{0, 1}));
}

TEST(ValidateGammaSemigroupTest, EightOfSixteenBinaryTablesAreAssociative) {
  std::size_t count = 0;
  for (std::size_t code = 0; code < 16; ++code) {
    std::vector<std::size_t> table(4);
    for (std::size_t i = 0; i < 4; ++i) table[i] = (code >> (3 - i)) & 1u;
    const bool pass = validate_gamma_semigroup(2, 1, table).passed();
    EXPECT_EQ(pass, oracle::associative(2, 1, table));
    count += pass;
  }
  EXPECT_EQ(count, 8u);
}

TEST(ValidateGammaSemigroupTest, AgreesWithOracleOnAllSmallTables) {
  // Exhaustive for (n, m) in {(1,1),(1,2),(2,1),(2,2),(3,1)}; every
  // violation witness must be the oracle's lexicographically first one.
  for (auto [n, m] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}}) {
    std::vector<std::size_t> t(n * m * n, 0);
    for (;;) {
      const Verdict v = validate_gamma_semigroup(n, m, t);
      const auto first = oracle::first_associativity_violation(n, m, t);
      ASSERT_EQ(v.passed(), first.empty());
      if (!v.passed()) {
        const Witness& w = *v.witness();
        EXPECT_EQ((std::vector<std::size_t>{w.elements[0], w.sorts[0], w.elements[1],
                                            w.sorts[1], w.elements[2]}),
                  first);
      }
      std::size_t i = t.size();
      bool done = true;
      while (i > 0) {
        --i;
        if (++t[i] < static_cast<std::size_t>(n)) {
          done = false;
          break;
        }
        t[i] = 0;
      }
      if (done) break;
    }
  }
}

TEST(ValidateGammaSemigroupTest, SampledTablesWithThreeElementsTwoSorts) {
  // n=3, m=2 has 3^18 tables; a deterministic stride covers a slice.
  std::uint64_t code = 12345;
  for (int k = 0; k < 20000; ++k) {
    code = code * 6364136223846793005ull + 1442695040888963407ull;
    std::vector<std::size_t> t(18);
    std::uint64_t c = code >> 11;
    for (auto& e : t) {
      e = c % 3;
      c /= 3;
    }
    EXPECT_EQ(validate_gamma_semigroup(3, 2, t).passed(), oracle::associative(3, 2, t));
  }
}

TEST(ValidatePartialOrderTest, Examples) {
  EXPECT_TRUE(validate_partial_order(PartialOrder::discrete(3)).passed());
  EXPECT_TRUE(validate_partial_order(chain01()).passed());

  const Verdict full = validate_partial_order(PartialOrder(2, {true, true, true, true}));
  ASSERT_FALSE(full.passed());
  EXPECT_EQ(full.witness()->clause, Clause::kAntisymmetry);
  EXPECT_EQ(full.witness()->elements, (std::vector<std::size_t>{0, 1}));
}

TEST(ValidatePartialOrderTest, ReflexivityAndTransitivity) {
  const Verdict irreflexive = validate_partial_order(PartialOrder(2, {true, false, false, false}));
  ASSERT_FALSE(irreflexive.passed());
  EXPECT_EQ(irreflexive.witness()->clause, Clause::kReflexivity);
  EXPECT_EQ(irreflexive.witness()->elements, (std::vector<std::size_t>{1}));

  const std::pair<std::size_t, std::size_t> pairs[] = {{0, 1}, {1, 2}};
  const Verdict v = validate_partial_order(PartialOrder::from_pairs(3, pairs));
  ASSERT_FALSE(v.passed());
  EXPECT_EQ(v.witness()->clause, Clause::kTransitivity);
  EXPECT_EQ(v.witness()->elements, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(ValidatePartialOrderTest, DimensionMismatch) {
  EXPECT_THROW(PartialOrder(2, {true, false, true}), InputError);
}

TEST(ValidateCompatibilityTest, DiscreteOrderAlwaysCompatible) {
  EXPECT_TRUE(validate_compatibility(left_zero_table(3), PartialOrder::discrete(3)).passed());
  EXPECT_TRUE(validate_compatibility(GammaSemigroup(2, 1, {1, 0, 0, 0}),
                                     PartialOrder::discrete(2))
                  .passed());
}

TEST(ValidateCompatibilityTest, LeftZeroWithChain) {
  EXPECT_TRUE(validate_compatibility(left_zero_table(2), chain01()).passed());
}

TEST(ValidateCompatibilityTest, ConstantZeroWithAnyOrder) {
  EXPECT_TRUE(validate_compatibility(constant_zero_table(2), chain01()).passed());
  const std::pair<std::size_t, std::size_t> rev[] = {{1, 0}};
  EXPECT_TRUE(validate_compatibility(constant_zero_table(2), PartialOrder::from_pairs(2, rev))
                  .passed());
}

TEST(ValidateCompatibilityTest, WitnessCarriesSide) {
  // Z/2 under the chain 0 <= 1.
  const GammaSemigroup z2(2, 1, {0, 1, 1, 0});
  ASSERT_TRUE(validate_gamma_semigroup(z2).passed());
  const Verdict v = validate_compatibility(z2, chain01());
  ASSERT_FALSE(v.passed());
  const Witness& w = *v.witness();
  // a=0, b=1, c=1: 0+1 = 1 is not <= 1+1 = 0.
  EXPECT_EQ(w.clause, Clause::kCompatibilityLeft);
  EXPECT_EQ(w.elements, (std::vector<std::size_t>{0, 1, 1}));
  EXPECT_EQ(w.sorts, (std::vector<std::size_t>{0}));
  EXPECT_EQ(w.products, (std::vector<std::size_t>{1, 0}));
}

TEST(ValidateCompatibilityTest, RightSideWitness) {
  // Search the n=3 semigroups for one that is monotone on the left but not
  // on the right under 0 <= 1.
  bool found = false;
  for (const auto& t : oracle::all_associative_tables(3, 1)) {
    const GammaSemigroup sgp(3, 1, t);
    const std::pair<std::size_t, std::size_t> pairs[] = {{0, 1}};
    const Verdict v = validate_compatibility(sgp, PartialOrder::from_pairs(3, pairs));
    if (!v.passed() && v.witness()->clause == Clause::kCompatibilityRight) {
      const Witness& w = *v.witness();
      const std::size_t a = w.elements[0], b = w.elements[1], c = w.elements[2];
      EXPECT_EQ(w.products, (std::vector<std::size_t>{sgp.at(c, 0, a), sgp.at(c, 0, b)}));
      EXPECT_TRUE(a == 0 && b == 1);
      found = true;
      break;
    }
  }
  EXPECT_TRUE(found);
}

TEST(ValidateCompatibilityTest, SingleSortIsTwoSidedMonotonicity) {
  // With m = 1 compatibility is exactly an ordered semigroup.
  for (const auto& t : oracle::all_associative_tables(3, 1)) {
    const GammaSemigroup sgp(3, 1, t);
    const std::pair<std::size_t, std::size_t> pairs[] = {{0, 1}, {0, 2}};
    const PartialOrder ord = PartialOrder::from_pairs(3, pairs);
    bool monotone = true;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t c = 0; c < 3; ++c)
          if (ord.leq(a, b))
            monotone = monotone && ord.leq(t[a * 3 + c], t[b * 3 + c]) &&
                       ord.leq(t[c * 3 + a], t[c * 3 + b]);
    EXPECT_EQ(validate_compatibility(sgp, ord).passed(), monotone);
  }
}

TEST(PoGammaSemigroupTest, CreateValidatesEverything) {
  EXPECT_NO_THROW(PoGammaSemigroup::create(left_zero_table(2), chain01()));
  try {
    PoGammaSemigroup::create(GammaSemigroup(2, 1, {1, 0, 0, 0}), PartialOrder::discrete(2));
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.witness().clause, Clause::kAssociativity);
  }
  try {
    PoGammaSemigroup::create(left_zero_table(2), PartialOrder(2, {true, true, true, true}));
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.witness().clause, Clause::kAntisymmetry);
  }
  EXPECT_THROW(PoGammaSemigroup::create(left_zero_table(2), PartialOrder::discrete(3)),
               InputError);
}

TEST(PoGammaSemigroupTest, ValidationIsDeterministic) {
  const std::vector<std::size_t> table = {1, 0, 0, 0};
  EXPECT_EQ(validate_gamma_semigroup(2, 1, table), validate_gamma_semigroup(2, 1, table));
}

}  // namespace
}  // namespace pogs
