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

#include "pogs/fuzzy.hpp"

#include <algorithm>

namespace pogs {

FuzzySubset::FuzzySubset(std::vector<Grade> grades)
    : grades_(std::move(grades)) {
  if (grades_.empty()) throw InputError("fuzzy subset over an empty carrier");
  if (grades_.size() > kMaxElements) throw InputError("fuzzy subset too large");
}

bool FuzzySubset::is_zero() const {
  return std::all_of(grades_.begin(), grades_.end(),
                     [](const Grade& g) { return g.is_zero(); });
}

std::string FuzzySubset::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < grades_.size(); ++i) {
    if (i) out += ", ";
    out += grades_[i].str();
  }
  return out + ")";
}

CrispSubset t_cut(const FuzzySubset& mu, const Grade& t) {
  CrispSubset out(mu.size());
  for (std::size_t x = 0; x < mu.size(); ++x)
    if (mu[x] >= t) out.insert(x);
  return out;
}

std::vector<Grade> image_levels(const FuzzySubset& mu) {
  std::vector<Grade> levels(mu.grades().begin(), mu.grades().end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

namespace {

void require_fuzzy_input(const PoGammaSemigroup& s, const FuzzySubset& mu) {
  if (mu.size() != s.n()) throw InputError("fuzzy subset size differs from |S|");
  if (mu.is_zero()) throw InputError("fuzzy subset is all-zero (empty support)");
}

Verdict check_fuzzy_closure(const PoGammaSemigroup& s, const FuzzySubset& mu) {
  for (std::size_t x = 0; x < s.n(); ++x)
    for (std::size_t g = 0; g < s.m(); ++g)
      for (std::size_t y = 0; y < s.n(); ++y) {
        const std::size_t p = s.at(x, g, y);
        const Grade floor = std::min(mu[x], mu[y]);
        if (mu[p] < floor) {
          return Verdict::fail({.clause = Clause::kFuzzySubsemigroup,
                                .elements = {x, y},
                                .sorts = {g},
                                .products = {p},
                                .grades = {mu[p], floor}});
        }
      }
  return Verdict::pass();
}

Verdict check_fuzzy_interior_clauses(const PoGammaSemigroup& s,
                                     const FuzzySubset& mu) {
  if (Verdict v = check_fuzzy_closure(s, mu); !v) return v;

  const std::size_t n = s.n();
  const std::size_t m = s.m();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t alpha = 0; alpha < m; ++alpha)
      for (std::size_t a = 0; a < n; ++a) {
        const std::size_t xa = s.at(x, alpha, a);
        for (std::size_t beta = 0; beta < m; ++beta)
          for (std::size_t y = 0; y < n; ++y) {
            const std::size_t p = s.at(xa, beta, y);
            if (mu[p] < mu[a]) {
              return Verdict::fail({.clause = Clause::kFuzzyInterior,
                                    .elements = {x, a, y},
                                    .sorts = {alpha, beta},
                                    .products = {p},
                                    .grades = {mu[p], mu[a]}});
            }
          }
      }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (s.leq(x, y) && mu[x] < mu[y]) {
        return Verdict::fail({.clause = Clause::kFuzzyAntitone,
                              .elements = {x, y},
                              .grades = {mu[x], mu[y]}});
      }
  return Verdict::pass();
}

}  // namespace

Verdict is_fuzzy_subsemigroup(const PoGammaSemigroup& s, const FuzzySubset& mu) {
  require_fuzzy_input(s, mu);
  return check_fuzzy_closure(s, mu);
}

Verdict is_fuzzy_interior_ideal(const PoGammaSemigroup& s,
                                const FuzzySubset& mu) {
  require_fuzzy_input(s, mu);
  return check_fuzzy_interior_clauses(s, mu);
}

Verdict is_fuzzy_characteristic_interior_ideal(const PoGammaSemigroup& s,
                                               const FuzzySubset& mu) {
  require_fuzzy_input(s, mu);
  const auto auts = enumerate_automorphisms(s);
  return is_fuzzy_characteristic_interior_ideal(s, mu, auts);
}

Verdict is_fuzzy_characteristic_interior_ideal(
    const PoGammaSemigroup& s, const FuzzySubset& mu,
    std::span<const Automorphism> auts) {
  require_fuzzy_input(s, mu);
  if (Verdict v = check_fuzzy_interior_clauses(s, mu); !v) return v;
  for (const Automorphism& f : auts) {
    if (f.n() != s.n()) throw InputError("automorphism size differs from |S|");
    for (std::size_t x = 0; x < s.n(); ++x)
      if (mu[f(x)] != mu[x]) {
        return Verdict::fail(
            {.clause = Clause::kFuzzyAutomorphismInvariance,
             .elements = {x},
             .grades = {mu[x], mu[f(x)]},
             .automorphism = {f.images().begin(), f.images().end()}});
      }
  }
  return Verdict::pass();
}

FuzzySubset characteristic_function(const CrispSubset& a) {
  if (a.empty()) throw InputError("characteristic function of the empty set");
  std::vector<Grade> grades(a.universe_size(), Grade::zero());
  for (std::size_t x : a.members()) grades[x] = Grade::one();
  return FuzzySubset(std::move(grades));
}

FuzzySubset compose_with_automorphism(const FuzzySubset& mu,
                                      const Automorphism& f) {
  if (f.n() != mu.size()) throw InputError("automorphism size differs from mu");
  std::vector<Grade> grades(mu.size());
  for (std::size_t x = 0; x < mu.size(); ++x) grades[x] = mu[f(x)];
  return FuzzySubset(std::move(grades));
}

}  // namespace pogs
