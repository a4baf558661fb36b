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

// Small hand-built graphs shared by the unit and acceptance suites.

#ifndef IVFG_TESTS_FIXTURES_HPP
#define IVFG_TESTS_FIXTURES_HPP

#include "ivfg/generate.hpp"
#include "ivfg/graph.hpp"
#include "ivfg/pairs.hpp"

namespace ivfg::testing {

using namespace ivfg::literals;

inline MembershipInterval iv(const char* mu, const char* nu) {
  return {*Scalar::parse(mu), *Scalar::parse(nu)};
}

inline ScalarPair sp(const char* mu, const char* nu) {
  return {*Scalar::parse(mu), *Scalar::parse(nu)};
}

/// a:[0.3,0.6] b:[0.4,0.7] c:[0.5,0.8]; ab:[0.2,0.5] bc:[0.3,0.6] ac:[0.1,0.4]
inline IvfGraph triangle() {
  IvfGraph g;
  g.set_vertex("a", iv("0.3", "0.6"))
      .set_vertex("b", iv("0.4", "0.7"))
      .set_vertex("c", iv("0.5", "0.8"))
      .set_edge("a", "b", iv("0.2", "0.5"))
      .set_edge("b", "c", iv("0.3", "0.6"))
      .set_edge("a", "c", iv("0.1", "0.4"));
  return g;
}

/// K3 with every vertex and edge at [0.4,0.4].
inline IvfGraph constant_k3() {
  return generate(GraphFamily::kCompleteConstant, 3, {iv("0.4", "0.4"), {}});
}

/// C4, vertices [0.5,0.5], v1v2 = v3v4 = [0.1,0.2], v2v3 = v4v1 = [0.3,0.4].
inline IvfGraph alternating_c4() {
  return generate(GraphFamily::kEvenCycleAlternating, 4,
                  {iv("0.5", "0.5"), {iv("0.1", "0.2"), iv("0.3", "0.4")}});
}

/// x - y - z, vertices [0.5,0.5], both edges [0.1,0.2].
inline IvfGraph short_path() {
  IvfGraph g;
  g.set_vertex("x", iv("0.5", "0.5"))
      .set_vertex("y", iv("0.5", "0.5"))
      .set_vertex("z", iv("0.5", "0.5"))
      .set_edge("x", "y", iv("0.1", "0.2"))
      .set_edge("y", "z", iv("0.1", "0.2"));
  return g;
}

/// Five-cycle whose edges alternate [0.1,0.2] / [0.3,0.4] except that the
/// closing edge v5v1 repeats [0.1,0.2] (an odd cycle cannot alternate).
inline IvfGraph odd_cycle_witness() {
  IvfGraph g;
  for (int i = 1; i <= 5; ++i) g.set_vertex(vertex_name(i), iv("0.5", "0.5"));
  g.set_edge("v1", "v2", iv("0.1", "0.2"))
      .set_edge("v2", "v3", iv("0.3", "0.4"))
      .set_edge("v3", "v4", iv("0.1", "0.2"))
      .set_edge("v4", "v5", iv("0.3", "0.4"))
      .set_edge("v5", "v1", iv("0.1", "0.2"));
  return g;
}

}  // namespace ivfg::testing

#endif  // IVFG_TESTS_FIXTURES_HPP
