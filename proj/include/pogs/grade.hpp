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

#ifndef POGS_GRADE_HPP_
#define POGS_GRADE_HPP_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace pogs {

/// An exact membership grade p/q in [0, 1], always kept in lowest terms.
///
/// Denominators are limited to kMaxDenominator so that the midpoint of any
/// two grades is still representable in 64 bits.
class Grade {
 public:
  static constexpr std::int64_t kMaxDenominator = std::int64_t{1} << 30;

  constexpr Grade() = default;
  Grade(std::int64_t numerator, std::int64_t denominator);

  static Grade zero() { return Grade(); }
  static Grade one() { return Grade(1, 1); }

  /// Accepts "p/q" or a bare integer ("0", "1").
  static Grade parse(std::string_view text);

  std::int64_t numerator() const { return value_.numerator(); }
  std::int64_t denominator() const { return value_.denominator(); }

  bool is_zero() const { return value_.numerator() == 0; }

  /// Always rendered as "p/q", including "0/1" and "1/1".
  std::string str() const;

  friend bool operator==(const Grade& a, const Grade& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Grade& a, const Grade& b) {
    if (a.value_ == b.value_) return std::strong_ordering::equal;
    return a.value_ < b.value_ ? std::strong_ordering::less
                               : std::strong_ordering::greater;
  }

  /// (a + b) / 2, exact. Not subject to the denominator limit.
  friend Grade midpoint(const Grade& a, const Grade& b);

 private:
  using Rational = boost::rational<std::int64_t>;
  explicit Grade(Rational value) : value_(value) {}

  Rational value_{0};
};

std::ostream& operator<<(std::ostream& os, const Grade& g);

}  // namespace pogs

#endif  // POGS_GRADE_HPP_
