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

#ifndef IVFG_ANTIPODAL_HPP
#define IVFG_ANTIPODAL_HPP

#include <string_view>
#include <vector>

#include "ivfg/graph.hpp"
#include "ivfg/metrics.hpp"

namespace ivfg {

/// Which weight rule produced an antipodal edge.
enum class AntipodalClause {
  kNeighbor,     // endpoints adjacent in G: the G edge weight is copied
  kNonNeighbor,  // not adjacent: componentwise min of the endpoint intervals
};

std::string_view clause_name(AntipodalClause clause);

struct AntipodalPair {
  VertexId first;
  VertexId second;
  AntipodalClause clause;

  friend bool operator==(const AntipodalPair&, const AntipodalPair&) = default;
};

struct AntipodalResult {
  IvfGraph graph;
  DistancePair diameter_used;
  /// In lexicographic pair order.
  std::vector<AntipodalPair> antipodal_pairs;
};

/// Antipodal graph A(G): G's vertices with their intervals, and an edge for
/// exactly those pairs whose distance pair equals the diameter in both
/// components.
///
/// Throws InvalidGraph, TooFewVertices, TooLarge, Disconnected.
AntipodalResult antipodal_graph(const IvfGraph& g, const MetricsLimits& limits = {});

/// a and g have the same vertex set with identical intervals. Edges are not
/// compared: A(G) may join non-neighbors of G.
bool is_spanning_subgraph_of(const IvfGraph& a, const IvfGraph& g);

}  // namespace ivfg

#endif  // IVFG_ANTIPODAL_HPP
