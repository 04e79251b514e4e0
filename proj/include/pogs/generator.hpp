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

#ifndef POGS_GENERATOR_HPP_
#define POGS_GENERATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pogs/fuzzy.hpp"
#include "pogs/grade.hpp"
#include "pogs/structures.hpp"
#include "pogs/verdict.hpp"

namespace pogs {

/// Limits on exhaustive enumeration. The table space grows as n^(n*n*m), so
/// it is bounded by carrier and sort counts rather than by candidate count.
struct ResourceCeiling {
  std::size_t max_n = 4;
  std::size_t max_m = 2;
  std::uint64_t max_fuzzy_subsets = std::uint64_t{1} << 22;

  /// Environment variable holding an "NxM" override for max_n / max_m.
  static constexpr const char* kEnvVar = "POGS_CEILING";

  /// Defaults, overridden by POGS_CEILING when set. Throws InputError on a
  /// malformed value.
  static ResourceCeiling from_environment();
  /// Parses "NxM" into a copy of *this.
  ResourceCeiling with_dims(std::string_view spec) const;
};

class ResourceLimitError : public InputError {
 public:
  using InputError::InputError;
};

enum class OrderMode { kDiscreteOnly, kAllCompatible };

struct GeneratorConfig {
  std::size_t max_n = 2;
  std::size_t max_m = 1;
  OrderMode orders = OrderMode::kDiscreteOnly;
  std::vector<Grade> grade_set;
  std::uint64_t seed = 0;

  /// Throws InputError unless max_n, max_m >= 1 and grade_set contains 0
  /// and 1.
  void validate() const;
};

/// Every associative table on (n, m) in lexicographic order of the flat
/// table. Backtracks cell by cell, pruning partial tables that already
/// violate an instance of associativity.
class GammaSemigroupEnumerator {
 public:
  /// Throws ResourceLimitError above the ceiling, InputError for n or m = 0.
  GammaSemigroupEnumerator(std::size_t n, std::size_t m,
                           const ResourceCeiling& ceiling = {});

  std::optional<GammaSemigroup> next();

 private:
  bool consistent_at(std::size_t cell) const;
  std::ptrdiff_t get(std::size_t a, std::size_t g, std::size_t b) const {
    return cells_[(a * m_ + g) * n_ + b];
  }

  std::size_t n_;
  std::size_t m_;
  std::vector<std::ptrdiff_t> cells_;  // -1 = unassigned
  std::ptrdiff_t pos_ = 0;
  bool started_ = false;
  bool done_ = false;
};

std::vector<GammaSemigroup> enumerate_gamma_semigroups(
    std::size_t n, std::size_t m, const ResourceCeiling& ceiling = {});

/// Every partial order compatible with sgp. Candidates are numbered by a
/// bitmask over the off-diagonal pairs in row-major order (lowest bit
/// first) and yielded in increasing mask order, so the discrete order comes
/// first.
std::vector<PartialOrder> enumerate_compatible_orders(
    const GammaSemigroup& sgp, const ResourceCeiling& ceiling = {});

/// All grade assignments except the all-zero one, lexicographic in the
/// position of each grade within grade_set.
class FuzzySubsetEnumerator {
 public:
  FuzzySubsetEnumerator(std::size_t n, std::span<const Grade> grade_set,
                        const ResourceCeiling& ceiling = {});

  std::optional<FuzzySubset> next();

 private:
  std::vector<Grade> grades_;
  std::vector<std::size_t> digits_;
  bool done_ = false;
};

std::vector<FuzzySubset> enumerate_fuzzy_subsets(
    std::size_t n, std::span<const Grade> grade_set,
    const ResourceCeiling& ceiling = {});

/// Deterministic in (n, grade_set, seed). Grades are drawn independently
/// and uniformly from grade_set with std::mt19937_64 seeded by `seed` and
/// rejection-sampled index reduction; an all-zero draw is redrawn from the
/// same stream. Throws InputError if grade_set has no non-zero grade.
FuzzySubset sample_fuzzy_subset(std::size_t n, std::span<const Grade> grade_set,
                                std::uint64_t seed);

/// Uniform integer in [0, bound) from a 64-bit engine, by rejection.
template <typename Engine>
std::uint64_t uniform_index(Engine& engine, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = engine();
  } while (r >= limit);
  return r % bound;
}

/// Every (Gamma-semigroup, order) pair with 1 <= n <= max_n and
/// 1 <= m <= max_m, ordered by n, then m, then table, then order.
std::vector<PoGammaSemigroup> build_corpus(const GeneratorConfig& config,
                                           const ResourceCeiling& ceiling = {});

}  // namespace pogs

#endif  // POGS_GENERATOR_HPP_
