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

#include "pogs/format.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace pogs {

std::string_view parse_error_code_name(ParseErrorCode code) {
  switch (code) {
    case ParseErrorCode::kSyntax: return "syntax";
    case ParseErrorCode::kRange: return "range";
    case ParseErrorCode::kDuplicate: return "duplicate";
    case ParseErrorCode::kTotality: return "totality";
    case ParseErrorCode::kAssociativity: return "associativity";
    case ParseErrorCode::kOrderAxiom: return "order-axiom";
    case ParseErrorCode::kCompatibility: return "compatibility";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorCode code, std::size_t line,
                       const std::string& message,
                       std::optional<Witness> witness)
    : InputError("line " + std::to_string(line) + ": " +
                 std::string(parse_error_code_name(code)) + ": " + message),
      code_(code),
      line_(line),
      witness_(std::move(witness)) {}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text, std::size_t& total_lines) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    std::istringstream is{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; is >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  total_lines = number;
  return out;
}

std::size_t to_index(const Line& line, std::size_t k) {
  const std::string& tok = line.tokens[k];
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(ParseErrorCode::kSyntax, line.number,
                     "expected a non-negative integer, got '" + tok + "'");
  }
  return value;
}

void expect_arity(const Line& line, std::size_t count, std::string_view form) {
  if (line.tokens.size() != count) {
    throw ParseError(ParseErrorCode::kSyntax, line.number,
                     "expected '" + std::string(form) + "'");
  }
}

void expect_header(const std::vector<Line>& lines, std::size_t k,
                   std::string_view tag, std::string_view form) {
  if (k >= lines.size() || lines[k].tokens[0] != tag) {
    const std::size_t number = k < lines.size() ? lines[k].number : 0;
    throw ParseError(ParseErrorCode::kSyntax, number,
                     "expected '" + std::string(form) + "'");
  }
  expect_arity(lines[k], 2, form);
}

std::size_t check_range(const Line& line, std::size_t k, std::size_t bound,
                        std::string_view what) {
  const std::size_t value = to_index(line, k);
  if (value >= bound) {
    throw ParseError(ParseErrorCode::kRange, line.number,
                     std::string(what) + " " + std::to_string(value) +
                         " is out of range [0, " + std::to_string(bound) + ")");
  }
  return value;
}

std::size_t read_size(const Line& line, std::string_view what) {
  const std::size_t value = to_index(line, 1);
  if (value == 0 || value > kMaxElements) {
    throw ParseError(ParseErrorCode::kRange, line.number,
                     std::string(what) + " must be in [1, " +
                         std::to_string(kMaxElements) + "]");
  }
  return value;
}

}  // namespace

StructureFile parse_structure(std::string_view text) {
  std::size_t total_lines = 0;
  const std::vector<Line> lines = tokenize(text, total_lines);

  expect_header(lines, 0, "pogs", "pogs 1");
  if (lines[0].tokens[1] != "1") {
    throw ParseError(ParseErrorCode::kSyntax, lines[0].number,
                     "unsupported version '" + lines[0].tokens[1] + "'");
  }
  expect_header(lines, 1, "S", "S <n>");
  const std::size_t n = read_size(lines[1], "carrier size");
  expect_header(lines, 2, "G", "G <m>");
  const std::size_t m = to_index(lines[2], 1);
  if (m == 0) {
    throw ParseError(ParseErrorCode::kRange, lines[2].number,
                     "sort set must be non-empty");
  }

  std::vector<std::size_t> table(n * m * n, 0);
  std::vector<std::size_t> table_line(n * m * n, 0);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> order_line;
  Labels labels;

  for (std::size_t k = 3; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const std::string& tag = line.tokens[0];
    if (tag == "T") {
      expect_arity(line, 5, "T <i> <g> <j> <k>");
      const std::size_t i = check_range(line, 1, n, "element");
      const std::size_t g = check_range(line, 2, m, "sort");
      const std::size_t j = check_range(line, 3, n, "element");
      const std::size_t v = check_range(line, 4, n, "element");
      const std::size_t cell = (i * m + g) * n + j;
      if (table_line[cell] != 0) {
        throw ParseError(ParseErrorCode::kDuplicate, line.number,
                         "product already defined on line " +
                             std::to_string(table_line[cell]));
      }
      table[cell] = v;
      table_line[cell] = line.number;
    } else if (tag == "O") {
      expect_arity(line, 3, "O <i> <j>");
      const std::size_t i = check_range(line, 1, n, "element");
      const std::size_t j = check_range(line, 2, n, "element");
      if (i == j) continue;  // reflexive pairs are implicit
      if (!order_line.emplace(std::pair{i, j}, line.number).second) {
        throw ParseError(ParseErrorCode::kDuplicate, line.number,
                         "order pair listed twice");
      }
    } else if (tag == "NE" || tag == "NG") {
      expect_arity(line, 3, tag + " <id> <name>");
      const bool element = tag == "NE";
      const std::size_t id =
          check_range(line, 1, element ? n : m, element ? "element" : "sort");
      auto& names = element ? labels.elements : labels.sorts;
      names.resize(element ? n : m);
      if (!names[id].empty()) {
        throw ParseError(ParseErrorCode::kDuplicate, line.number,
                         "label assigned twice");
      }
      names[id] = line.tokens[2];
    } else {
      throw ParseError(ParseErrorCode::kSyntax, line.number,
                       "unknown line tag '" + tag + "'");
    }
  }

  for (std::size_t cell = 0; cell < table_line.size(); ++cell) {
    if (table_line[cell] == 0) {
      const std::size_t i = cell / (m * n), g = (cell / n) % m, j = cell % n;
      throw ParseError(ParseErrorCode::kTotality, total_lines,
                       "missing product 'T " + std::to_string(i) + " " +
                           std::to_string(g) + " " + std::to_string(j) + " _'");
    }
  }

  GammaSemigroup sgp(n, m, table);
  if (Verdict v = validate_gamma_semigroup(sgp); !v) {
    const Witness& w = *v.witness();
    const std::size_t cell = (w.elements[0] * m + w.sorts[0]) * n + w.elements[1];
    throw ParseError(ParseErrorCode::kAssociativity, table_line[cell],
                     w.describe(labels), w);
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [pair, number] : order_line) pairs.push_back(pair);
  PartialOrder ord = PartialOrder::from_pairs(n, pairs);
  if (Verdict v = validate_partial_order(ord); !v) {
    const Witness& w = *v.witness();
    const std::size_t number =
        order_line.at({w.elements[0], w.elements[1]});
    throw ParseError(ParseErrorCode::kOrderAxiom, number, w.describe(labels), w);
  }
  if (Verdict v = validate_compatibility(sgp, ord); !v) {
    const Witness& w = *v.witness();
    throw ParseError(ParseErrorCode::kCompatibility,
                     order_line.at({w.elements[0], w.elements[1]}),
                     w.describe(labels), w);
  }
  return {PoGammaSemigroup::create(std::move(sgp), std::move(ord)),
          std::move(labels)};
}

std::string render_structure(const PoGammaSemigroup& s, const Labels& labels) {
  std::ostringstream os;
  os << "pogs 1\nS " << s.n() << "\nG " << s.m() << "\n";
  for (std::size_t i = 0; i < labels.elements.size() && i < s.n(); ++i)
    if (!labels.elements[i].empty()) os << "NE " << i << " " << labels.elements[i] << "\n";
  for (std::size_t g = 0; g < labels.sorts.size() && g < s.m(); ++g)
    if (!labels.sorts[g].empty()) os << "NG " << g << " " << labels.sorts[g] << "\n";
  for (std::size_t i = 0; i < s.n(); ++i)
    for (std::size_t g = 0; g < s.m(); ++g)
      for (std::size_t j = 0; j < s.n(); ++j)
        os << "T " << i << " " << g << " " << j << " " << s.at(i, g, j) << "\n";
  for (const auto& [a, b] : s.order().strict_pairs())
    os << "O " << a << " " << b << "\n";
  return os.str();
}

FuzzySubset parse_fuzzy(std::string_view text) {
  std::size_t total_lines = 0;
  const std::vector<Line> lines = tokenize(text, total_lines);

  expect_header(lines, 0, "fz", "fz 1");
  if (lines[0].tokens[1] != "1") {
    throw ParseError(ParseErrorCode::kSyntax, lines[0].number,
                     "unsupported version '" + lines[0].tokens[1] + "'");
  }
  expect_header(lines, 1, "S", "S <n>");
  const std::size_t n = read_size(lines[1], "carrier size");

  std::vector<Grade> grades(n);
  std::vector<std::size_t> grade_line(n, 0);
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens[0] != "F") {
      throw ParseError(ParseErrorCode::kSyntax, line.number,
                       "unknown line tag '" + line.tokens[0] + "'");
    }
    expect_arity(line, 3, "F <i> <p>/<q>");
    const std::size_t i = check_range(line, 1, n, "element");
    const std::string& tok = line.tokens[2];
    const auto slash = tok.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == tok.size() ||
        tok.find_first_not_of("0123456789/") != std::string::npos) {
      throw ParseError(ParseErrorCode::kSyntax, line.number,
                       "expected a grade 'p/q', got '" + tok + "'");
    }
    if (grade_line[i] != 0) {
      throw ParseError(ParseErrorCode::kDuplicate, line.number,
                       "grade already given on line " +
                           std::to_string(grade_line[i]));
    }
    try {
      grades[i] = Grade::parse(tok);
    } catch (const InputError& e) {
      throw ParseError(ParseErrorCode::kRange, line.number, e.what());
    }
    grade_line[i] = line.number;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (grade_line[i] == 0) {
      throw ParseError(ParseErrorCode::kTotality, total_lines,
                       "missing grade 'F " + std::to_string(i) + " _'");
    }
  }
  return FuzzySubset(std::move(grades));
}

std::string render_fuzzy(const FuzzySubset& mu) {
  std::ostringstream os;
  os << "fz 1\nS " << mu.size() << "\n";
  for (std::size_t i = 0; i < mu.size(); ++i) os << "F " << i << " " << mu[i] << "\n";
  return os.str();
}

CrispSubset parse_subset(std::string_view text, std::size_t n) {
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw InputError("unbalanced braces in subset");
    text = text.substr(1, text.size() - 2);
  }
  CrispSubset out(n);
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw InputError("malformed subset element '" + std::string(item) + "'");
    }
    out.insert(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
    if (text.empty()) throw InputError("trailing comma in subset");
  }
  return out;
}

}  // namespace pogs
