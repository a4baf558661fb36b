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

#include "ivfg/antipodal.hpp"

namespace ivfg {

std::string_view clause_name(AntipodalClause clause) {
  return clause == AntipodalClause::kNeighbor ? "neighbor" : "non-neighbor";
}

AntipodalResult antipodal_graph(const IvfGraph& g, const MetricsLimits& limits) {
  const MetricsReport report = analyze(g, limits);
  const auto& d = report.distances;
  const auto& ids = d.ids();

  AntipodalResult result;
  result.diameter_used = report.diameter;
  for (const auto& [id, m] : g.vertices()) result.graph.set_vertex(id, m);

  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (d.at(i, j) != report.diameter) continue;
      const auto existing = g.edge(ids[i], ids[j]);
      const AntipodalClause clause =
          existing ? AntipodalClause::kNeighbor : AntipodalClause::kNonNeighbor;
      const MembershipInterval weight =
          existing ? *existing : meet(g.vertex(ids[i]), g.vertex(ids[j]));
      result.graph.set_edge(ids[i], ids[j], weight);
      result.antipodal_pairs.push_back({ids[i], ids[j], clause});
    }
  }
  return result;
}

bool is_spanning_subgraph_of(const IvfGraph& a, const IvfGraph& g) {
  return a.vertices() == g.vertices();
}

}  // namespace ivfg
