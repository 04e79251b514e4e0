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

#include <string>

namespace pogs {

namespace {

void check_table_shape(std::size_t n, std::size_t m,
                       std::span<const std::size_t> table) {
  if (n == 0 || m == 0) {
    throw InputError("carrier and sort set must be non-empty");
  }
  if (n > kMaxElements) {
    throw InputError("carrier size " + std::to_string(n) + " exceeds " +
                     std::to_string(kMaxElements));
  }
  if (table.size() != n * m * n) {
    throw InputError("table has " + std::to_string(table.size()) +
                     " entries, expected " + std::to_string(n * m * n));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= n) {
      throw InputError("table entry " + std::to_string(i) + " = " +
                       std::to_string(table[i]) + " is out of range");
    }
  }
}

}  // namespace

GammaSemigroup::GammaSemigroup(std::size_t n, std::size_t m,
                               std::vector<std::size_t> table)
    : n_(n), m_(m), table_(std::move(table)) {
  check_table_shape(n_, m_, table_);
}

ElementId GammaSemigroup::product(ElementId a, GammaId g, ElementId b) const {
  if (a.index >= n_ || b.index >= n_) throw InputError("element id out of range");
  if (g.index >= m_) throw InputError("sort id out of range");
  return ElementId{at(a.index, g.index, b.index)};
}

Verdict validate_gamma_semigroup(std::size_t n, std::size_t m,
                                 std::span<const std::size_t> table) {
  check_table_shape(n, m, table);
  auto t = [&](std::size_t a, std::size_t g, std::size_t b) {
    return table[(a * m + g) * n + b];
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t alpha = 0; alpha < m; ++alpha)
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab = t(a, alpha, b);
        for (std::size_t beta = 0; beta < m; ++beta)
          for (std::size_t c = 0; c < n; ++c) {
            const std::size_t lhs = t(ab, beta, c);
            const std::size_t rhs = t(a, alpha, t(b, beta, c));
            if (lhs != rhs) {
              return Verdict::fail({.clause = Clause::kAssociativity,
                                    .elements = {a, b, c},
                                    .sorts = {alpha, beta},
                                    .products = {lhs, rhs}});
            }
          }
      }
  return Verdict::pass();
}

Verdict validate_gamma_semigroup(const GammaSemigroup& sgp) {
  return validate_gamma_semigroup(sgp.n(), sgp.m(), sgp.table());
}

PartialOrder::PartialOrder(std::size_t n, std::vector<bool> rel)
    : n_(n), rel_(std::move(rel)) {
  if (rel_.size() != n_ * n_) {
    throw InputError("order matrix has " + std::to_string(rel_.size()) +
                     " entries, expected " + std::to_string(n_ * n_));
  }
}

PartialOrder PartialOrder::discrete(std::size_t n) {
  std::vector<bool> rel(n * n, false);
  for (std::size_t a = 0; a < n; ++a) rel[a * n + a] = true;
  return PartialOrder(n, std::move(rel));
}

PartialOrder PartialOrder::from_pairs(
    std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  std::vector<bool> rel(n * n, false);
  for (std::size_t a = 0; a < n; ++a) rel[a * n + a] = true;
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) throw InputError("order pair out of range");
    rel[a * n + b] = true;
  }
  return PartialOrder(n, std::move(rel));
}

std::vector<std::pair<std::size_t, std::size_t>> PartialOrder::strict_pairs()
    const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (a != b && leq(a, b)) out.emplace_back(a, b);
  return out;
}

Verdict validate_partial_order(const PartialOrder& ord) {
  const std::size_t n = ord.n();
  for (std::size_t a = 0; a < n; ++a) {
    if (!ord.leq(a, a)) {
      return Verdict::fail({.clause = Clause::kReflexivity, .elements = {a}});
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && ord.leq(a, b) && ord.leq(b, a)) {
        return Verdict::fail(
            {.clause = Clause::kAntisymmetry, .elements = {a, b}});
      }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!ord.leq(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (ord.leq(b, c) && !ord.leq(a, c)) {
          return Verdict::fail(
              {.clause = Clause::kTransitivity, .elements = {a, b, c}});
        }
    }
  return Verdict::pass();
}

Verdict validate_compatibility(const GammaSemigroup& sgp,
                               const PartialOrder& ord) {
  const std::size_t n = sgp.n();
  if (ord.n() != n) throw InputError("order and table sizes differ");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!ord.leq(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t g = 0; g < sgp.m(); ++g) {
          const std::size_t agc = sgp.at(a, g, c);
          const std::size_t bgc = sgp.at(b, g, c);
          if (!ord.leq(agc, bgc)) {
            return Verdict::fail({.clause = Clause::kCompatibilityLeft,
                                  .elements = {a, b, c},
                                  .sorts = {g},
                                  .products = {agc, bgc}});
          }
          const std::size_t cga = sgp.at(c, g, a);
          const std::size_t cgb = sgp.at(c, g, b);
          if (!ord.leq(cga, cgb)) {
            return Verdict::fail({.clause = Clause::kCompatibilityRight,
                                  .elements = {a, b, c},
                                  .sorts = {g},
                                  .products = {cga, cgb}});
          }
        }
    }
  return Verdict::pass();
}

ValidationError::ValidationError(Witness witness)
    : std::runtime_error("invalid structure: " + witness.describe()),
      witness_(std::move(witness)) {}

PoGammaSemigroup PoGammaSemigroup::create(GammaSemigroup sgp,
                                          PartialOrder ord) {
  if (ord.n() != sgp.n()) throw InputError("order and table sizes differ");
  for (const Verdict& v : {validate_gamma_semigroup(sgp),
                           validate_partial_order(ord),
                           validate_compatibility(sgp, ord)}) {
    if (!v) throw ValidationError(*v.witness());
  }
  return PoGammaSemigroup(std::move(sgp), std::move(ord));
}

ElementId product(const PoGammaSemigroup& s, ElementId a, GammaId g,
                  ElementId b) {
  return s.sgp().product(a, g, b);
}

}  // namespace pogs
