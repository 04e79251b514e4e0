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

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pogs/generator.hpp"

namespace pogs {

namespace {

EquivalenceReport make_report(const Verdict& forward, const Verdict& backward) {
  EquivalenceReport report;
  report.forward = forward.passed();
  report.backward = backward.passed();
  report.consistent = report.forward == report.backward;
  if (!report.consistent) {
    report.witness = report.forward ? backward.witness() : forward.witness();
  }
  return report;
}

// The crisp side of the level criterion: every cut at 0 or at an image level
// is a characteristic interior ideal.
Verdict all_cuts_characteristic(const PoGammaSemigroup& s,
                                const FuzzySubset& mu,
                                std::span<const Automorphism> auts) {
  std::vector<Grade> levels = image_levels(mu);
  if (levels.front() != Grade::zero()) levels.insert(levels.begin(), Grade::zero());
  for (const Grade& level : levels) {
    const CrispSubset cut = t_cut(mu, level);
    Verdict v = is_characteristic_interior_ideal(s, cut, auts);
    if (!v) {
      Witness w = *v.witness();
      w.level = level;
      return Verdict::fail(std::move(w));
    }
  }
  return Verdict::pass();
}

}  // namespace

std::string MidpointWitness::describe(const Labels& labels) const {
  std::ostringstream os;
  auto el = [&](std::size_t k) { return labels.element(elements.at(k)); };
  auto so = [&](std::size_t k) { return labels.sort(sorts.at(k)); };
  if (clause == Clause::kFuzzySubsemigroup) {
    os << "subsemigroup clause violated at (x0=" << el(0) << ", g=" << so(0)
       << ", y0=" << el(1) << ")\n"
       << "mu(" << el(0) << "*" << so(0) << "*" << el(1) << ") = " << lower
       << " < min(mu(" << el(0) << "), mu(" << el(1) << ")) = " << upper
       << "\n";
  } else {
    os << "interior clause violated at (x0=" << el(0) << ", alpha=" << so(0)
       << ", a0=" << el(1) << ", beta=" << so(1) << ", y0=" << el(2) << ")\n"
       << "mu(" << el(0) << "*" << so(0) << "*" << el(1) << "*" << so(1)
       << "*" << el(2) << ") = " << lower << " < mu(" << el(1)
       << ") = " << upper << "\n";
  }
  os << "t0 = " << t0 << "\n"
     << "cut at t0 = " << cut_at_t0.str(labels) << "\n"
     << "product " << labels.element(product) << " is not in the cut";
  return os.str();
}

EquivalenceReport check_level_criterion(const PoGammaSemigroup& s,
                                        const FuzzySubset& mu) {
  const auto auts = enumerate_automorphisms(s);
  return check_level_criterion(s, mu, auts);
}

EquivalenceReport check_level_criterion(const PoGammaSemigroup& s,
                                        const FuzzySubset& mu,
                                        std::span<const Automorphism> auts) {
  const Verdict forward = is_fuzzy_characteristic_interior_ideal(s, mu, auts);
  const Verdict backward = all_cuts_characteristic(s, mu, auts);
  return make_report(forward, backward);
}

std::optional<MidpointWitness> extract_midpoint_witness(
    const PoGammaSemigroup& s, const FuzzySubset& mu) {
  if (mu.size() != s.n()) throw InputError("fuzzy subset size differs from |S|");

  auto finish = [&](MidpointWitness w,
                    std::span<const std::size_t> inside) -> MidpointWitness {
    w.t0 = midpoint(w.lower, w.upper);
    w.cut_at_t0 = t_cut(mu, w.t0);
    bool sound = w.lower < w.t0 && w.t0 < w.upper &&
                 !w.cut_at_t0.contains(w.product);
    for (std::size_t x : inside) sound = sound && w.cut_at_t0.contains(x);
    if (!sound) throw std::logic_error("midpoint cut does not exhibit the violation");
    return w;
  };

  const std::size_t n = s.n();
  const std::size_t m = s.m();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t g = 0; g < m; ++g)
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t p = s.at(x, g, y);
        const Grade upper = std::min(mu[x], mu[y]);
        if (mu[p] < upper) {
          const std::size_t inside[] = {x, y};
          return finish({.clause = Clause::kFuzzySubsemigroup,
                         .elements = {x, y},
                         .sorts = {g},
                         .product = p,
                         .lower = mu[p],
                         .upper = upper},
                        inside);
        }
      }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t alpha = 0; alpha < m; ++alpha)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t beta = 0; beta < m; ++beta)
          for (std::size_t y = 0; y < n; ++y) {
            const std::size_t p = s.at(s.at(x, alpha, a), beta, y);
            if (mu[p] < mu[a]) {
              const std::size_t inside[] = {a};
              return finish({.clause = Clause::kFuzzyInterior,
                             .elements = {x, a, y},
                             .sorts = {alpha, beta},
                             .product = p,
                             .lower = mu[p],
                             .upper = mu[a]},
                            inside);
            }
          }
  return std::nullopt;
}

EquivalenceReport check_char_function_criterion(const PoGammaSemigroup& s,
                                                const CrispSubset& a) {
  const auto auts = enumerate_automorphisms(s);
  return check_char_function_criterion(s, a, auts);
}

EquivalenceReport check_char_function_criterion(
    const PoGammaSemigroup& s, const CrispSubset& a,
    std::span<const Automorphism> auts) {
  const Verdict forward = is_characteristic_interior_ideal(s, a, auts);
  const Verdict backward =
      is_fuzzy_characteristic_interior_ideal(s, characteristic_function(a), auts);
  return make_report(forward, backward);
}

EquivalenceReport check_lemma_char_function_interior(const PoGammaSemigroup& s,
                                                     const CrispSubset& a) {
  const Verdict forward = is_interior_ideal(s, a);
  const Verdict backward = is_fuzzy_interior_ideal(s, characteristic_function(a));
  return make_report(forward, backward);
}

std::string_view check_kind_name(CheckKind kind) {
  switch (kind) {
    case CheckKind::kLevelCriterion: return "level-criterion";
    case CheckKind::kCharFunctionCriterion: return "char-function-criterion";
    case CheckKind::kLemma: return "lemma-char-function-interior";
    case CheckKind::kMidpoint: return "midpoint-witness";
  }
  return "unknown";
}

namespace {

void tally(CheckTally& t, const EquivalenceReport& r) {
  ++t.checks;
  if (r.consistent) ++t.consistent;
  if (r.forward) ++t.forward_holds;
}

// Independent of extract_midpoint_witness's own assertion: re-derives the
// crisp failure on the cut through the ideal predicates.
bool midpoint_sound(const PoGammaSemigroup& s, const FuzzySubset& mu,
                    const MidpointWitness& w) {
  if (!(w.lower < w.t0 && w.t0 < w.upper)) return false;
  if (w.cut_at_t0 != t_cut(mu, w.t0)) return false;
  if (w.cut_at_t0.contains(w.product)) return false;
  if (w.clause == Clause::kFuzzySubsemigroup) {
    const std::size_t x = w.elements[0], y = w.elements[1];
    return w.cut_at_t0.contains(x) && w.cut_at_t0.contains(y) &&
           s.at(x, w.sorts[0], y) == w.product &&
           !is_subsemigroup(s, w.cut_at_t0);
  }
  const std::size_t x = w.elements[0], a = w.elements[1], y = w.elements[2];
  if (!w.cut_at_t0.contains(a)) return false;
  if (s.at(s.at(x, w.sorts[0], a), w.sorts[1], y) != w.product) return false;
  const Verdict v = is_interior_ideal(s, w.cut_at_t0);
  // The cut may already fail as a subsemigroup; either way it is not closed.
  return !v.passed();
}

std::uint64_t sample_seed(std::uint64_t seed, std::size_t structure,
                          std::size_t k) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (structure + 1) +
                    0xBF58476D1CE4E5B9ull * (k + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

SweepSummary sweep_one(const PoGammaSemigroup& s, std::size_t index,
                       std::span<const Grade> grade_set,
                       const SweepOptions& options) {
  SweepSummary out;
  out.structures = 1;
  const auto auts = enumerate_automorphisms(s);
  const std::size_t n = s.n();

  auto refute = [&](CheckKind kind, std::string subject,
                    EquivalenceReport report) {
    out.refutations.push_back({.kind = kind,
                               .structure_index = index,
                               .structure = s,
                               .subject = std::move(subject),
                               .report = std::move(report)});
  };

  auto visit_fuzzy = [&](const FuzzySubset& mu) {
    ++out.fuzzy_subsets;
    if (!options.level_criterion) return;
    const EquivalenceReport r = check_level_criterion(s, mu, auts);
    tally(out.level_criterion, r);
    if (!r.consistent) refute(CheckKind::kLevelCriterion, mu.str(), r);

    std::optional<MidpointWitness> w;
    bool sound = true;
    try {
      w = extract_midpoint_witness(s, mu);
      if (w) sound = midpoint_sound(s, mu, *w);
    } catch (const std::logic_error&) {
      sound = false;
    }
    if (w || !sound) ++out.midpoint_witnesses;
    if (w && sound) ++out.midpoint_sound;
    if (!sound) {
      const Verdict fv = is_fuzzy_interior_ideal(s, mu);
      refute(CheckKind::kMidpoint, mu.str(),
             {.forward = fv.passed(),
              .backward = !fv.passed(),
              .consistent = false,
              .witness = fv.witness()});
    }
  };

  if (options.samples_per_structure) {
    for (std::size_t k = 0; k < *options.samples_per_structure; ++k) {
      visit_fuzzy(sample_fuzzy_subset(n, grade_set,
                                      sample_seed(options.seed, index, k)));
    }
  } else {
    FuzzySubsetEnumerator fuzzy(n, grade_set);
    while (auto mu = fuzzy.next()) visit_fuzzy(*mu);
  }

  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    const CrispSubset a(n, mask);
    ++out.crisp_subsets;
    if (options.char_function_criterion) {
      const EquivalenceReport r = check_char_function_criterion(s, a, auts);
      tally(out.char_function_criterion, r);
      if (!r.consistent) refute(CheckKind::kCharFunctionCriterion, a.str(), r);
    }
    if (options.lemma) {
      const EquivalenceReport r = check_lemma_char_function_interior(s, a);
      tally(out.lemma, r);
      if (!r.consistent) refute(CheckKind::kLemma, a.str(), r);
    }
  }
  return out;
}

void merge(SweepSummary& into, SweepSummary&& part) {
  into.structures += part.structures;
  into.fuzzy_subsets += part.fuzzy_subsets;
  into.crisp_subsets += part.crisp_subsets;
  for (auto [dst, src] : {std::pair{&into.level_criterion, &part.level_criterion},
                          std::pair{&into.char_function_criterion,
                                    &part.char_function_criterion},
                          std::pair{&into.lemma, &part.lemma}}) {
    dst->checks += src->checks;
    dst->consistent += src->consistent;
    dst->forward_holds += src->forward_holds;
  }
  into.midpoint_witnesses += part.midpoint_witnesses;
  into.midpoint_sound += part.midpoint_sound;
  for (auto& r : part.refutations) into.refutations.push_back(std::move(r));
}

}  // namespace

SweepSummary sweep(std::span<const PoGammaSemigroup> corpus,
                   std::span<const Grade> grade_set,
                   const SweepOptions& options) {
  const bool has_zero =
      std::find(grade_set.begin(), grade_set.end(), Grade::zero()) != grade_set.end();
  const bool has_one =
      std::find(grade_set.begin(), grade_set.end(), Grade::one()) != grade_set.end();
  if (!has_zero || !has_one) throw InputError("grade set must contain 0 and 1");

  std::vector<std::optional<SweepSummary>> parts(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        parts[i] = sweep_one(corpus[i], i, grade_set, options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, 64);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (std::size_t j = 0; j < jobs; ++j) threads.emplace_back(worker);
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  SweepSummary summary;
  for (auto& part : parts) merge(summary, std::move(*part));
  return summary;
}

}  // namespace pogs
