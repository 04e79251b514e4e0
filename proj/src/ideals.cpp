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

#include "pogs/ideals.hpp"

#include <bit>
#include <string>

namespace pogs {

CrispSubset::CrispSubset(std::size_t n, std::uint64_t mask)
    : n_(n), mask_(mask) {
  if (n_ > kMaxElements) throw InputError("subset carrier too large");
  if (n_ < kMaxElements && (mask_ >> n_) != 0) {
    throw InputError("subset has members outside the carrier");
  }
}

CrispSubset::CrispSubset(std::size_t n,
                         std::initializer_list<std::size_t> members)
    : CrispSubset(n) {
  for (std::size_t x : members) insert(x);
}

CrispSubset CrispSubset::full(std::size_t n) {
  if (n > kMaxElements) throw InputError("subset carrier too large");
  return CrispSubset(n, n == 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << n) - 1);
}

void CrispSubset::insert(std::size_t x) {
  if (x >= n_) {
    throw InputError("element " + std::to_string(x) + " outside carrier");
  }
  mask_ |= std::uint64_t{1} << x;
}

std::size_t CrispSubset::size() const {
  return static_cast<std::size_t>(std::popcount(mask_));
}

bool CrispSubset::is_full() const { return *this == full(n_); }

std::vector<std::size_t> CrispSubset::members() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < n_; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

std::string CrispSubset::str(const Labels& labels) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t x : members()) {
    if (!first) out += ',';
    out += labels.element(x);
    first = false;
  }
  return out + "}";
}

namespace {

void require_ideal_input(const PoGammaSemigroup& s, const CrispSubset& a) {
  if (a.universe_size() != s.n()) {
    throw InputError("subset carrier size differs from |S|");
  }
  if (a.empty()) throw InputError("subset must be non-empty");
}

Verdict check_closure(const PoGammaSemigroup& s, const CrispSubset& a) {
  for (std::size_t x = 0; x < s.n(); ++x) {
    if (!a.contains(x)) continue;
    for (std::size_t g = 0; g < s.m(); ++g)
      for (std::size_t y = 0; y < s.n(); ++y) {
        if (!a.contains(y)) continue;
        const std::size_t p = s.at(x, g, y);
        if (!a.contains(p)) {
          return Verdict::fail({.clause = Clause::kSubsemigroup,
                                .elements = {x, y},
                                .sorts = {g},
                                .products = {p}});
        }
      }
  }
  return Verdict::pass();
}

}  // namespace

Verdict is_subsemigroup(const PoGammaSemigroup& s, const CrispSubset& a) {
  require_ideal_input(s, a);
  return check_closure(s, a);
}

Verdict is_interior_ideal(const PoGammaSemigroup& s, const CrispSubset& a) {
  require_ideal_input(s, a);
  if (Verdict v = check_closure(s, a); !v) return v;

  const std::size_t n = s.n();
  const std::size_t m = s.m();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t alpha = 0; alpha < m; ++alpha)
      for (std::size_t e = 0; e < n; ++e) {
        if (!a.contains(e)) continue;
        const std::size_t xe = s.at(x, alpha, e);
        for (std::size_t beta = 0; beta < m; ++beta)
          for (std::size_t y = 0; y < n; ++y) {
            const std::size_t p = s.at(xe, beta, y);
            if (!a.contains(p)) {
              return Verdict::fail({.clause = Clause::kInteriorClosure,
                                    .elements = {x, e, y},
                                    .sorts = {alpha, beta},
                                    .products = {p}});
            }
          }
      }

  for (std::size_t top = 0; top < n; ++top) {
    if (!a.contains(top)) continue;
    for (std::size_t b = 0; b < n; ++b)
      if (s.leq(b, top) && !a.contains(b)) {
        return Verdict::fail(
            {.clause = Clause::kDownwardClosure, .elements = {top, b}});
      }
  }
  return Verdict::pass();
}

CrispSubset downward_closure(const PoGammaSemigroup& s, const CrispSubset& a) {
  if (a.universe_size() != s.n()) {
    throw InputError("subset carrier size differs from |S|");
  }
  CrispSubset out(s.n());
  for (std::size_t b = 0; b < s.n(); ++b)
    for (std::size_t top : a.members())
      if (s.leq(b, top)) {
        out.insert(b);
        break;
      }
  return out;
}

std::vector<CrispSubset> enumerate_interior_ideals(const PoGammaSemigroup& s) {
  if (s.n() > 30) throw InputError("too many subsets to enumerate");
  std::vector<CrispSubset> out;
  const std::uint64_t end = std::uint64_t{1} << s.n();
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    CrispSubset a(s.n(), mask);
    if (is_interior_ideal(s, a)) out.push_back(a);
  }
  return out;
}

}  // namespace pogs
