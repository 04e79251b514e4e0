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

#include "pogs/generator.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <random>
#include <string>

namespace pogs {

namespace {

std::size_t parse_dim(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      value == 0) {
    throw InputError("malformed ceiling '" + std::string(whole) +
                     "', expected NxM with N, M >= 1");
  }
  return value;
}

void check_dims(std::size_t n, std::size_t m, const ResourceCeiling& ceiling) {
  if (n == 0 || m == 0) throw InputError("n and m must be at least 1");
  if (n > ceiling.max_n || m > ceiling.max_m) {
    throw ResourceLimitError(
        "n=" + std::to_string(n) + ", m=" + std::to_string(m) +
        " exceeds the enumeration ceiling " + std::to_string(ceiling.max_n) +
        "x" + std::to_string(ceiling.max_m) + " (override with " +
        ResourceCeiling::kEnvVar + " or --ceiling)");
  }
}

}  // namespace

ResourceCeiling ResourceCeiling::with_dims(std::string_view spec) const {
  const auto x = spec.find('x');
  if (x == std::string_view::npos) {
    throw InputError("malformed ceiling '" + std::string(spec) +
                     "', expected NxM");
  }
  ResourceCeiling out = *this;
  out.max_n = parse_dim(spec.substr(0, x), spec);
  out.max_m = parse_dim(spec.substr(x + 1), spec);
  if (out.max_n > kMaxElements) throw InputError("ceiling exceeds carrier limit");
  return out;
}

ResourceCeiling ResourceCeiling::from_environment() {
  ResourceCeiling out;
  if (const char* value = std::getenv(kEnvVar); value && *value) {
    out = out.with_dims(value);
  }
  return out;
}

void GeneratorConfig::validate() const {
  if (max_n == 0 || max_m == 0) throw InputError("max_n and max_m must be >= 1");
  const bool has_zero =
      std::find(grade_set.begin(), grade_set.end(), Grade::zero()) != grade_set.end();
  const bool has_one =
      std::find(grade_set.begin(), grade_set.end(), Grade::one()) != grade_set.end();
  if (!has_zero || !has_one) throw InputError("grade set must contain 0 and 1");
}

GammaSemigroupEnumerator::GammaSemigroupEnumerator(
    std::size_t n, std::size_t m, const ResourceCeiling& ceiling)
    : n_(n), m_(m) {
  check_dims(n, m, ceiling);
  cells_.assign(n * m * n, -1);
}

// Every instance (x alpha y) beta z = x alpha (y beta z) is decided by four
// table lookups. The assigned cell can play each of the four roles; instances
// whose other lookups are all assigned get checked here, so each instance is
// checked exactly when its last lookup is filled in.
bool GammaSemigroupEnumerator::consistent_at(std::size_t cell) const {
  const std::size_t a = cell / (m_ * n_);
  const std::size_t g = (cell / n_) % m_;
  const std::size_t b = cell % n_;
  const std::ptrdiff_t v = cells_[cell];

  // (a g b) beta z  vs  a g (b beta z)
  for (std::size_t beta = 0; beta < m_; ++beta)
    for (std::size_t z = 0; z < n_; ++z) {
      const std::ptrdiff_t lhs = get(v, beta, z);
      const std::ptrdiff_t inner = get(b, beta, z);
      if (lhs < 0 || inner < 0) continue;
      const std::ptrdiff_t rhs = get(a, g, inner);
      if (rhs >= 0 && lhs != rhs) return false;
    }
  // (x alpha a) g b  vs  x alpha (a g b)
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t alpha = 0; alpha < m_; ++alpha) {
      const std::ptrdiff_t rhs = get(x, alpha, v);
      const std::ptrdiff_t inner = get(x, alpha, a);
      if (rhs < 0 || inner < 0) continue;
      const std::ptrdiff_t lhs = get(inner, g, b);
      if (lhs >= 0 && lhs != rhs) return false;
    }
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t alpha = 0; alpha < m_; ++alpha)
      for (std::size_t y = 0; y < n_; ++y) {
        // (x alpha y) g b with x alpha y = a  vs  x alpha (y g b)
        if (get(x, alpha, y) == static_cast<std::ptrdiff_t>(a)) {
          const std::ptrdiff_t inner = get(y, g, b);
          if (inner >= 0) {
            const std::ptrdiff_t rhs = get(x, alpha, inner);
            if (rhs >= 0 && rhs != v) return false;
          }
        }
        // (a g x) alpha y  vs  a g (x alpha y) with x alpha y = b
        if (get(x, alpha, y) == static_cast<std::ptrdiff_t>(b)) {
          const std::ptrdiff_t inner = get(a, g, x);
          if (inner >= 0) {
            const std::ptrdiff_t lhs = get(inner, alpha, y);
            if (lhs >= 0 && lhs != v) return false;
          }
        }
      }
  return true;
}

std::optional<GammaSemigroup> GammaSemigroupEnumerator::next() {
  if (done_) return std::nullopt;
  const auto cells = static_cast<std::ptrdiff_t>(cells_.size());
  if (!started_) {
    started_ = true;
    pos_ = 0;
  } else {
    pos_ = cells - 1;  // resume by advancing the last cell
  }
  const auto n = static_cast<std::ptrdiff_t>(n_);
  while (pos_ >= 0) {
    std::ptrdiff_t& cell = cells_[pos_];
    bool placed = false;
    for (++cell; cell < n; ++cell) {
      if (consistent_at(static_cast<std::size_t>(pos_))) {
        placed = true;
        break;
      }
    }
    if (!placed) {
      cell = -1;
      --pos_;
      continue;
    }
    if (pos_ + 1 == cells) {
      return GammaSemigroup(n_, m_, {cells_.begin(), cells_.end()});
    }
    ++pos_;
  }
  done_ = true;
  return std::nullopt;
}

std::vector<GammaSemigroup> enumerate_gamma_semigroups(
    std::size_t n, std::size_t m, const ResourceCeiling& ceiling) {
  std::vector<GammaSemigroup> out;
  GammaSemigroupEnumerator it(n, m, ceiling);
  while (auto sgp = it.next()) out.push_back(std::move(*sgp));
  return out;
}

std::vector<PartialOrder> enumerate_compatible_orders(
    const GammaSemigroup& sgp, const ResourceCeiling& ceiling) {
  const std::size_t n = sgp.n();
  if (n > ceiling.max_n) {
    throw ResourceLimitError("n=" + std::to_string(n) +
                             " exceeds the order enumeration ceiling");
  }
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) slots.emplace_back(a, b);

  std::vector<PartialOrder> out;
  const std::uint64_t end = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((mask >> k) & 1u) pairs.push_back(slots[k]);
    PartialOrder ord = PartialOrder::from_pairs(n, pairs);
    if (validate_partial_order(ord) && validate_compatibility(sgp, ord)) {
      out.push_back(std::move(ord));
    }
  }
  return out;
}

FuzzySubsetEnumerator::FuzzySubsetEnumerator(std::size_t n,
                                             std::span<const Grade> grade_set,
                                             const ResourceCeiling& ceiling)
    : grades_(grade_set.begin(), grade_set.end()), digits_(n, 0) {
  if (n == 0) throw InputError("n must be at least 1");
  if (grades_.empty()) throw InputError("grade set must be non-empty");
  std::vector<Grade> sorted = grades_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("grade set has duplicates");
  }
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= grades_.size();
    if (count > ceiling.max_fuzzy_subsets) {
      throw ResourceLimitError("too many fuzzy subsets to enumerate");
    }
  }
}

std::optional<FuzzySubset> FuzzySubsetEnumerator::next() {
  while (!done_) {
    std::vector<Grade> values(digits_.size());
    for (std::size_t i = 0; i < digits_.size(); ++i) values[i] = grades_[digits_[i]];

    // Advance the odometer, last position fastest.
    std::size_t i = digits_.size();
    while (i > 0) {
      --i;
      if (++digits_[i] < grades_.size()) break;
      digits_[i] = 0;
      if (i == 0) done_ = true;
    }

    FuzzySubset mu(std::move(values));
    if (!mu.is_zero()) return mu;
  }
  return std::nullopt;
}

std::vector<FuzzySubset> enumerate_fuzzy_subsets(
    std::size_t n, std::span<const Grade> grade_set,
    const ResourceCeiling& ceiling) {
  std::vector<FuzzySubset> out;
  FuzzySubsetEnumerator it(n, grade_set, ceiling);
  while (auto mu = it.next()) out.push_back(std::move(*mu));
  return out;
}

FuzzySubset sample_fuzzy_subset(std::size_t n, std::span<const Grade> grade_set,
                                std::uint64_t seed) {
  if (n == 0) throw InputError("n must be at least 1");
  if (std::all_of(grade_set.begin(), grade_set.end(),
                  [](const Grade& g) { return g.is_zero(); })) {
    throw InputError("grade set needs a non-zero grade");
  }
  std::mt19937_64 engine(seed);
  for (;;) {
    std::vector<Grade> grades(n);
    for (auto& g : grades) g = grade_set[uniform_index(engine, grade_set.size())];
    FuzzySubset mu(std::move(grades));
    if (!mu.is_zero()) return mu;
  }
}

std::vector<PoGammaSemigroup> build_corpus(const GeneratorConfig& config,
                                           const ResourceCeiling& ceiling) {
  config.validate();
  std::vector<PoGammaSemigroup> out;
  for (std::size_t n = 1; n <= config.max_n; ++n)
    for (std::size_t m = 1; m <= config.max_m; ++m) {
      GammaSemigroupEnumerator it(n, m, ceiling);
      while (auto sgp = it.next()) {
        if (config.orders == OrderMode::kDiscreteOnly) {
          out.push_back(PoGammaSemigroup::create(*sgp, PartialOrder::discrete(n)));
          continue;
        }
        for (auto& ord : enumerate_compatible_orders(*sgp, ceiling)) {
          out.push_back(PoGammaSemigroup::create(*sgp, std::move(ord)));
        }
      }
    }
  return out;
}

}  // namespace pogs
