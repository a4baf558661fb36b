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

#ifndef IVFG_GENERATE_HPP
#define IVFG_GENERATE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ivfg/graph.hpp"

namespace ivfg {

enum class GraphFamily {
  kCompleteConstant,
  kEvenCycleAlternating,
  kPath,
};

std::optional<GraphFamily> parse_family(std::string_view name);
std::string_view family_name(GraphFamily family);

/// Weights for generate().
///
///  - complete-constant: `vertex` is the constant; every edge gets it too.
///  - even-cycle-alternating: `vertex` on every vertex, `edges` holds the
///    two alternating intervals (v1v2 gets edges[0], v2v3 gets edges[1], ...).
///  - path: `vertex` on every vertex, `edges` holds either one interval
///    for every edge or exactly n - 1 intervals in path order.
struct GeneratorParams {
  MembershipInterval vertex;
  std::vector<MembershipInterval> edges;
};

/// Vertices are named v1 .. vn. Throws BadParams when the family's
/// constraints cannot hold.
IvfGraph generate(GraphFamily family, std::size_t n, const GeneratorParams& params);

std::string vertex_name(std::size_t index_from_one);

}  // namespace ivfg

#endif  // IVFG_GENERATE_HPP
