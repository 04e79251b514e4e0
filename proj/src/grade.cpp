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

#include "pogs/grade.hpp"

#include <charconv>
#include <string>
#include <system_error>

#include "pogs/verdict.hpp"

namespace pogs {

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw InputError("malformed grade '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Grade::Grade(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) {
    throw InputError("grade denominator must be positive");
  }
  if (numerator < 0 || numerator > denominator) {
    throw InputError("grade " + std::to_string(numerator) + "/" +
                     std::to_string(denominator) + " is outside [0, 1]");
  }
  value_ = Rational(numerator, denominator);
  if (value_.denominator() > kMaxDenominator) {
    throw InputError("grade denominator exceeds 2^30");
  }
}

Grade Grade::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Grade(parse_integer(text, text), 1);
  }
  return Grade(parse_integer(text.substr(0, slash), text),
               parse_integer(text.substr(slash + 1), text));
}

std::string Grade::str() const {
  return std::to_string(value_.numerator()) + "/" +
         std::to_string(value_.denominator());
}

Grade midpoint(const Grade& a, const Grade& b) {
  return Grade((a.value_ + b.value_) / Grade::Rational(2));
}

std::ostream& operator<<(std::ostream& os, const Grade& g) {
  return os << g.str();
}

}  // namespace pogs
