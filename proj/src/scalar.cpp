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

#include "ivfg/scalar.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace ivfg {

Scalar Scalar::from_units(std::int64_t ten_thousandths) {
  if (ten_thousandths < 0) {
    throw std::domain_error("Scalar: negative value");
  }
  Scalar s;
  s.units_ = ten_thousandths;
  return s;
}

std::optional<Scalar> Scalar::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;

  constexpr std::int64_t kMaxIntegral =
      std::numeric_limits<std::int64_t>::max() / kScale / 10;

  std::size_t pos = 0;
  std::int64_t integral = 0;
  std::size_t integral_digits = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    integral = integral * 10 + (text[pos] - '0');
    if (integral > kMaxIntegral) return std::nullopt;
    ++pos;
    ++integral_digits;
  }
  if (integral_digits == 0) return std::nullopt;

  std::int64_t fraction = 0;
  if (pos < text.size()) {
    if (text[pos] != '.') return std::nullopt;
    ++pos;
    int fraction_digits = 0;
    while (pos < text.size()) {
      const char c = text[pos];
      if (c < '0' || c > '9') return std::nullopt;
      if (++fraction_digits > kFractionDigits) return std::nullopt;
      fraction = fraction * 10 + (c - '0');
      ++pos;
    }
    if (fraction_digits == 0) return std::nullopt;
    for (int i = fraction_digits; i < kFractionDigits; ++i) fraction *= 10;
  }
  return from_units(integral * kScale + fraction);
}

std::string Scalar::to_string() const {
  std::string frac = std::to_string(units_ % kScale);
  frac.insert(0, kFractionDigits - frac.size(), '0');
  return std::to_string(units_ / kScale) + "." + frac;
}

Scalar& Scalar::operator-=(Scalar rhs) {
  if (rhs.units_ > units_) {
    throw std::domain_error("Scalar: subtraction underflow");
  }
  units_ -= rhs.units_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, Scalar s) {
  return os << s.to_string();
}

namespace literals {
Scalar operator""_s(const char* text) {
  auto parsed = Scalar::parse(text);
  if (!parsed) throw std::invalid_argument(std::string("bad scalar literal: ") + text);
  return *parsed;
}
}  // namespace literals

}  // namespace ivfg
