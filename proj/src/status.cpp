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

#include "ivfg/status.hpp"

#include "ivfg/indexed.hpp"
#include "ivfg/kernels.hpp"

namespace ivfg {

StatusPair status(const IvfGraph& g, const VertexId& v, const MetricsLimits& limits) {
  require_valid(g);
  if (g.vertex_count() < 2) throw TooFewVertices("status needs at least two vertices");
  if (g.vertex_count() > limits.max_vertices) {
    throw TooLarge(g.vertex_count(), limits.max_vertices);
  }
  if (!is_connected(g)) throw Disconnected("graph is not connected");

  const IndexedGraph ig(g);
  const std::size_t s = ig.index_of(v);
  const auto mu = kernels::shortest_mu_from(ig, s);
  const auto nu = kernels::longest_nu_from(ig, s);
  StatusPair sum;
  for (std::size_t j = 0; j < ig.size(); ++j) {
    if (j != s) sum += StatusPair{*mu[j], *nu[j]};
  }
  return sum;
}

StatusSummary summarize_status(const DistanceMatrix& d) {
  StatusSummary out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    StatusPair sum;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (j != i) sum += d.at(i, j);
    }
    out.per_vertex.emplace(d.ids()[i], sum);
  }

  bool first = true;
  for (const auto& [id, s] : out.per_vertex) {
    out.total += s;
    out.minimum = first ? s : componentwise_min(out.minimum, s);
    out.maximum = first ? s : componentwise_max(out.maximum, s);
    first = false;
  }
  for (const auto& [id, s] : out.per_vertex) {
    if (s.mu == out.minimum.mu) out.mu_minimizers.insert(id);
    if (s.nu == out.minimum.nu) out.nu_minimizers.insert(id);
    if (s == out.minimum) out.median.insert(id);
  }
  out.self_median = out.minimum == out.maximum;
  return out;
}

StatusSummary status_summary(const IvfGraph& g, const MetricsLimits& limits) {
  require_valid(g);
  if (g.vertex_count() < 2) throw TooFewVertices("status needs at least two vertices");
  return summarize_status(distance_matrix(g, limits));
}

}  // namespace ivfg
