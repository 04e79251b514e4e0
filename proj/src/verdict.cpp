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

#include "pogs/verdict.hpp"

#include <sstream>

namespace pogs {

std::string_view clause_name(Clause clause) {
  switch (clause) {
    case Clause::kAssociativity: return "associativity";
    case Clause::kReflexivity: return "reflexivity";
    case Clause::kAntisymmetry: return "antisymmetry";
    case Clause::kTransitivity: return "transitivity";
    case Clause::kCompatibilityLeft: return "compatibility-left";
    case Clause::kCompatibilityRight: return "compatibility-right";
    case Clause::kSubsemigroup: return "subsemigroup";
    case Clause::kInteriorClosure: return "interior-closure";
    case Clause::kDownwardClosure: return "downward-closure";
    case Clause::kOperationPreserving: return "operation-preserving";
    case Clause::kOrderIsomorphic: return "order-isomorphic";
    case Clause::kAutomorphismInvariance: return "automorphism-invariance";
    case Clause::kFuzzySubsemigroup: return "fuzzy-subsemigroup";
    case Clause::kFuzzyInterior: return "fuzzy-interior";
    case Clause::kFuzzyAntitone: return "fuzzy-antitone";
    case Clause::kFuzzyAutomorphismInvariance:
      return "fuzzy-automorphism-invariance";
  }
  return "unknown";
}

std::string Labels::element(std::size_t i) const {
  if (i < elements.size() && !elements[i].empty()) return elements[i];
  return std::to_string(i);
}

std::string Labels::sort(std::size_t g) const {
  if (g < sorts.size() && !sorts[g].empty()) return sorts[g];
  return "g" + std::to_string(g);
}

namespace {

std::string perm_str(const std::vector<std::size_t>& perm) {
  std::string out = "[";
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(perm[i]);
  }
  return out + "]";
}

}  // namespace

std::string Witness::describe(const Labels& labels) const {
  auto el = [&](std::size_t k) { return labels.element(elements.at(k)); };
  auto so = [&](std::size_t k) { return labels.sort(sorts.at(k)); };
  auto pr = [&](std::size_t k) { return labels.element(products.at(k)); };
  auto gr = [&](std::size_t k) { return grades.at(k).str(); };

  std::ostringstream os;
  os << clause_name(clause) << ": ";
  switch (clause) {
    case Clause::kAssociativity:
      os << "(" << el(0) << "*" << so(0) << "*" << el(1) << ")*" << so(1)
         << "*" << el(2) << " = " << pr(0) << " but " << el(0) << "*"
         << so(0) << "*(" << el(1) << "*" << so(1) << "*" << el(2)
         << ") = " << pr(1);
      break;
    case Clause::kReflexivity:
      os << "not " << el(0) << " <= " << el(0);
      break;
    case Clause::kAntisymmetry:
      os << el(0) << " <= " << el(1) << " and " << el(1) << " <= " << el(0)
         << " with " << el(0) << " != " << el(1);
      break;
    case Clause::kTransitivity:
      os << el(0) << " <= " << el(1) << " and " << el(1) << " <= " << el(2)
         << " but not " << el(0) << " <= " << el(2);
      break;
    case Clause::kCompatibilityLeft:
      os << el(0) << " <= " << el(1) << " but " << el(0) << "*" << so(0)
         << "*" << el(2) << " = " << pr(0) << " is not <= " << el(1) << "*"
         << so(0) << "*" << el(2) << " = " << pr(1);
      break;
    case Clause::kCompatibilityRight:
      os << el(0) << " <= " << el(1) << " but " << el(2) << "*" << so(0)
         << "*" << el(0) << " = " << pr(0) << " is not <= " << el(2) << "*"
         << so(0) << "*" << el(1) << " = " << pr(1);
      break;
    case Clause::kSubsemigroup:
      os << el(0) << ", " << el(1) << " in A but " << el(0) << "*" << so(0)
         << "*" << el(1) << " = " << pr(0) << " is not in A";
      break;
    case Clause::kInteriorClosure:
      os << el(1) << " in A but " << el(0) << "*" << so(0) << "*" << el(1)
         << "*" << so(1) << "*" << el(2) << " = " << pr(0)
         << " is not in A";
      break;
    case Clause::kDownwardClosure:
      os << el(0) << " in A and " << el(1) << " <= " << el(0) << " but "
         << el(1) << " is not in A";
      break;
    case Clause::kOperationPreserving:
      os << "f(" << el(0) << "*" << so(0) << "*" << el(1) << ") = " << pr(0)
         << " but f(" << el(0) << ")*" << so(0) << "*f(" << el(1)
         << ") = " << pr(1) << " for f = " << perm_str(automorphism);
      break;
    case Clause::kOrderIsomorphic:
      os << "(" << el(0) << " <= " << el(1) << ") differs from (f(" << el(0)
         << ") <= f(" << el(1) << ")) for f = " << perm_str(automorphism);
      break;
    case Clause::kAutomorphismInvariance:
      os << el(0) << " in A but f(" << el(0)
         << ") = " << labels.element(automorphism.at(elements.at(0)))
         << " is not in A for f = " << perm_str(automorphism);
      break;
    case Clause::kFuzzySubsemigroup:
      os << "mu(" << el(0) << "*" << so(0) << "*" << el(1) << ") = " << gr(0)
         << " < min(mu(" << el(0) << "), mu(" << el(1) << ")) = " << gr(1);
      break;
    case Clause::kFuzzyInterior:
      os << "mu(" << el(0) << "*" << so(0) << "*" << el(1) << "*" << so(1)
         << "*" << el(2) << ") = " << gr(0) << " < mu(" << el(1)
         << ") = " << gr(1);
      break;
    case Clause::kFuzzyAntitone:
      os << el(0) << " <= " << el(1) << " but mu(" << el(0) << ") = " << gr(0)
         << " < mu(" << el(1) << ") = " << gr(1);
      break;
    case Clause::kFuzzyAutomorphismInvariance:
      os << "mu(" << el(0) << ") = " << gr(0) << " but mu(f(" << el(0)
         << ")) = " << gr(1) << " for f = " << perm_str(automorphism);
      break;
  }
  if (level) os << " [cut at level " << level->str() << "]";
  return os.str();
}

}  // namespace pogs
