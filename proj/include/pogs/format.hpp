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

#ifndef POGS_FORMAT_HPP_
#define POGS_FORMAT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "pogs/fuzzy.hpp"
#include "pogs/ideals.hpp"
#include "pogs/structures.hpp"
#include "pogs/verdict.hpp"

namespace pogs {

// Structure files (".pogs"), line oriented, '#' starts a comment:
//
//   pogs 1
//   S <n>
//   G <m>
//   NE <i> <name>        optional element label
//   NG <g> <name>        optional sort label
//   T <i> <g> <j> <k>    element_i * gamma_g * element_j = element_k
//   O <i> <j>            element_i <= element_j
//
// All n*m*n T lines are required. O lines list the full non-reflexive
// relation; reflexive pairs are implicit and no closure is taken.
//
// Fuzzy files (".fz"):
//
//   fz 1
//   S <n>
//   F <i> <p>/<q>        one line per element

enum class ParseErrorCode {
  kSyntax,
  kRange,
  kDuplicate,
  kTotality,
  kAssociativity,
  kOrderAxiom,
  kCompatibility,
};

std::string_view parse_error_code_name(ParseErrorCode code);

/// A diagnostic tied to a line (1-based; 0 when no single line applies).
/// Structural failures also carry the verdict's witness.
class ParseError : public InputError {
 public:
  ParseError(ParseErrorCode code, std::size_t line, const std::string& message,
             std::optional<Witness> witness = std::nullopt);

  ParseErrorCode code() const { return code_; }
  std::size_t line() const { return line_; }
  const std::optional<Witness>& witness() const { return witness_; }

 private:
  ParseErrorCode code_;
  std::size_t line_;
  std::optional<Witness> witness_;
};

struct StructureFile {
  PoGammaSemigroup structure;
  Labels labels;
};

/// Parses and fully validates. Throws ParseError.
StructureFile parse_structure(std::string_view text);

/// Canonical form: header, labels, T lines in (i, g, j) order, O lines in
/// row-major order.
std::string render_structure(const PoGammaSemigroup& s,
                             const Labels& labels = {});

/// Throws ParseError. An all-zero fuzzy subset parses; predicates reject it.
FuzzySubset parse_fuzzy(std::string_view text);

std::string render_fuzzy(const FuzzySubset& mu);

/// "0,2" or "{0,2}" over a carrier of size n. Throws InputError.
CrispSubset parse_subset(std::string_view text, std::size_t n);

}  // namespace pogs

#endif  // POGS_FORMAT_HPP_
