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

#ifndef IVFG_PAIRS_HPP
#define IVFG_PAIRS_HPP

#include <algorithm>
#include <iosfwd>
#include <string>

#include "ivfg/scalar.hpp"

namespace ivfg {

/// A (mu, nu) pair of derived quantities. The two components come from
/// independent optimizations and carry no ordering between them.
struct ScalarPair {
  Scalar mu;
  Scalar nu;

  ScalarPair& operator+=(const ScalarPair& rhs) {
    mu += rhs.mu;
    nu += rhs.nu;
    return *this;
  }
  friend ScalarPair operator+(ScalarPair a, const ScalarPair& b) { return a += b; }
  friend bool operator==(const ScalarPair&, const ScalarPair&) = default;

  /// "(0.2000, 1.0000)"
  std::string to_string() const { return "(" + mu.to_string() + ", " + nu.to_string() + ")"; }
};

inline ScalarPair componentwise_min(const ScalarPair& a, const ScalarPair& b) {
  return {std::min(a.mu, b.mu), std::min(a.nu, b.nu)};
}
inline ScalarPair componentwise_max(const ScalarPair& a, const ScalarPair& b) {
  return {std::max(a.mu, b.mu), std::max(a.nu, b.nu)};
}

std::ostream& operator<<(std::ostream& os, const ScalarPair& p);

/// (sum of mu_B, sum of nu_B) along a path.
using LengthPair = ScalarPair;
/// (smallest mu-length, largest nu-length) over simple paths.
using DistancePair = ScalarPair;
/// (max mu-distance, max nu-distance) from one vertex.
using EccentricityPair = ScalarPair;
/// (sum of mu-distances, sum of nu-distances) from one vertex.
using StatusPair = ScalarPair;

}  // namespace ivfg

#endif  // IVFG_PAIRS_HPP
