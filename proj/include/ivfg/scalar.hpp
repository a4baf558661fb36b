// Copyright 2026 The ivfg Authors
//
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

#ifndef IVFG_SCALAR_HPP
#define IVFG_SCALAR_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace ivfg {

/// Exact non-negative fixed-point number with four fractional digits.
///
/// Every membership value and every derived sum (lengths, distances,
/// statuses) is a Scalar, so equality tests are exact. The raw value is a
/// count of ten-thousandths.
class Scalar {
 public:
  static constexpr std::int64_t kScale = 10000;
  static constexpr int kFractionDigits = 4;

  constexpr Scalar() = default;

  /// Throws std::domain_error on a negative count.
  static Scalar from_units(std::int64_t ten_thousandths);

  /// Parses a plain decimal literal such as "0.3", "1" or "0.2500".
  /// At most four fractional digits; no sign, exponent or whitespace.
  static std::optional<Scalar> parse(std::string_view text);

  static constexpr Scalar zero() { return Scalar{}; }
  static constexpr Scalar one() {
    Scalar s;
    s.units_ = kScale;
    return s;
  }

  constexpr std::int64_t units() const { return units_; }

  /// Renders with exactly four fractional digits ("0.3000").
  std::string to_string() const;

  Scalar& operator+=(Scalar rhs) {
    units_ += rhs.units_;
    return *this;
  }
  /// Throws std::domain_error if the result would be negative.
  Scalar& operator-=(Scalar rhs);

  friend Scalar operator+(Scalar a, Scalar b) { return a += b; }
  friend Scalar operator-(Scalar a, Scalar b) { return a -= b; }

  friend constexpr bool operator==(Scalar, Scalar) = default;
  friend constexpr auto operator<=>(Scalar, Scalar) = default;

 private:
  std::int64_t units_ = 0;
};

std::ostream& operator<<(std::ostream& os, Scalar s);

namespace literals {
/// 0.3_s style literal for tests and examples. Throws on bad input.
Scalar operator""_s(const char* text);
}  // namespace literals

}  // namespace ivfg

#endif  // IVFG_SCALAR_HPP
