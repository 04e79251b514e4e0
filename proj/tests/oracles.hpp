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

#ifndef POGS_TESTS_ORACLES_HPP_
#define POGS_TESTS_ORACLES_HPP_

// Deliberately naive second implementations used to cross-check the library.
// They share nothing with src/ beyond reading table and order entries: set
// algebra instead of early-exit scans, integer cross-multiplication instead
// of Grade comparisons, brute force instead of backtracking.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "pogs/fuzzy.hpp"
#include "pogs/structures.hpp"

namespace pogs::oracle {

using Set = std::set<std::size_t>;

inline bool associative(std::size_t n, std::size_t m,
                        const std::vector<std::size_t>& t) {
  auto mul = [&](std::size_t a, std::size_t g, std::size_t b) {
    return t[a * m * n + g * n + b];
  };
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t beta = 0; beta < m; ++beta)
          for (std::size_t alpha = 0; alpha < m; ++alpha)
            if (mul(mul(a, alpha, b), beta, c) != mul(a, alpha, mul(b, beta, c)))
              return false;
  return true;
}

/// Lexicographically first (a, alpha, b, beta, c) violating associativity,
/// or an empty vector.
inline std::vector<std::size_t> first_associativity_violation(
    std::size_t n, std::size_t m, const std::vector<std::size_t>& t) {
  auto mul = [&](std::size_t a, std::size_t g, std::size_t b) {
    return t[a * m * n + g * n + b];
  };
  std::vector<std::size_t> best;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t beta = 0; beta < m; ++beta)
          for (std::size_t alpha = 0; alpha < m; ++alpha)
            if (mul(mul(a, alpha, b), beta, c) != mul(a, alpha, mul(b, beta, c))) {
              std::vector<std::size_t> cand{a, alpha, b, beta, c};
              if (best.empty() || cand < best) best = cand;
            }
  return best;
}

/// Every total table on (n, m), odometer order, filtered by associative().
inline std::vector<std::vector<std::size_t>> all_associative_tables(
    std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> t(n * m * n, 0);
  for (;;) {
    if (associative(n, m, t)) out.push_back(t);
    std::size_t i = t.size();
    for (;;) {
      if (i == 0) return out;
      --i;
      if (++t[i] < n) break;
      t[i] = 0;
    }
  }
}

inline Set members(const CrispSubset& a) {
  const auto v = a.members();
  return Set(v.begin(), v.end());
}

inline bool subsemigroup(const PoGammaSemigroup& s, const Set& a) {
  Set products;
  for (std::size_t x : a)
    for (std::size_t y : a)
      for (std::size_t g = 0; g < s.m(); ++g) products.insert(s.at(x, g, y));
  return !a.empty() && std::includes(a.begin(), a.end(), products.begin(), products.end());
}

inline bool interior_ideal(const PoGammaSemigroup& s, const Set& a) {
  if (!subsemigroup(s, a)) return false;
  Set sa;  // S Gamma A
  for (std::size_t x = 0; x < s.n(); ++x)
    for (std::size_t e : a)
      for (std::size_t g = 0; g < s.m(); ++g) sa.insert(s.at(x, g, e));
  Set sas;  // (S Gamma A) Gamma S
  for (std::size_t p : sa)
    for (std::size_t y = 0; y < s.n(); ++y)
      for (std::size_t g = 0; g < s.m(); ++g) sas.insert(s.at(p, g, y));
  Set down;
  for (std::size_t b = 0; b < s.n(); ++b)
    for (std::size_t top : a)
      if (s.leq(b, top)) down.insert(b);
  return std::includes(a.begin(), a.end(), sas.begin(), sas.end()) &&
         std::includes(a.begin(), a.end(), down.begin(), down.end());
}

struct Frac {
  std::int64_t num;
  std::int64_t den;
};

// p/q < r/s for positive denominators.
inline bool less(Frac x, Frac y) {
  return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den;
}

inline std::vector<Frac> fracs(const FuzzySubset& mu) {
  std::vector<Frac> out;
  for (const Grade& g : mu.grades()) out.push_back({g.numerator(), g.denominator()});
  return out;
}

inline bool fuzzy_interior_ideal(const PoGammaSemigroup& s, const FuzzySubset& fmu) {
  const std::vector<Frac> mu = fracs(fmu);
  for (std::size_t g = 0; g < s.m(); ++g)
    for (std::size_t x = 0; x < s.n(); ++x)
      for (std::size_t y = 0; y < s.n(); ++y) {
        const Frac lo = less(mu[x], mu[y]) ? mu[x] : mu[y];
        if (less(mu[s.at(x, g, y)], lo)) return false;
      }
  for (std::size_t alpha = 0; alpha < s.m(); ++alpha)
    for (std::size_t beta = 0; beta < s.m(); ++beta)
      for (std::size_t a = 0; a < s.n(); ++a)
        for (std::size_t x = 0; x < s.n(); ++x)
          for (std::size_t y = 0; y < s.n(); ++y)
            if (less(mu[s.at(s.at(x, alpha, a), beta, y)], mu[a])) return false;
  for (std::size_t x = 0; x < s.n(); ++x)
    for (std::size_t y = 0; y < s.n(); ++y)
      if (s.leq(x, y) && less(mu[x], mu[y])) return false;
  return true;
}

inline bool automorphism(const PoGammaSemigroup& s, const std::vector<std::size_t>& f) {
  if (f.size() != s.n()) return false;
  std::vector<std::size_t> sorted = f;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) return false;
  // Transport the table along f and compare with the original.
  std::vector<std::size_t> moved(s.n() * s.m() * s.n());
  for (std::size_t x = 0; x < s.n(); ++x)
    for (std::size_t g = 0; g < s.m(); ++g)
      for (std::size_t y = 0; y < s.n(); ++y)
        moved[(f[x] * s.m() + g) * s.n() + f[y]] = f[s.at(x, g, y)];
  if (!std::equal(moved.begin(), moved.end(), s.sgp().table().begin())) return false;
  for (std::size_t x = 0; x < s.n(); ++x)
    for (std::size_t y = 0; y < s.n(); ++y)
      if (s.leq(x, y) != s.leq(f[x], f[y])) return false;
  return true;
}

/// All permutations (std::next_permutation order) that pass automorphism().
inline std::vector<std::vector<std::size_t>> all_automorphisms(const PoGammaSemigroup& s) {
  std::vector<std::size_t> f(s.n());
  std::iota(f.begin(), f.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    if (automorphism(s, f)) out.push_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

}  // namespace pogs::oracle

#endif  // POGS_TESTS_ORACLES_HPP_
