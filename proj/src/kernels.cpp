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

#include "ivfg/kernels.hpp"

#include <algorithm>

namespace ivfg::kernels {

namespace {

using Best = std::vector<std::optional<Scalar>>;

void improve(std::optional<Scalar>& slot, Scalar candidate) {
  if (!slot || *slot < candidate) slot = candidate;
}

// Walks every simple path that starts at the current prefix. on_path marks
// the prefix vertices.
void extend_all(const IndexedGraph& g, std::size_t at, Scalar length,
                std::vector<char>& on_path, Best& best) {
  for (std::size_t next : g.neighbors(at)) {
    if (on_path[next]) continue;
    const Scalar reached = length + g.edge(at, next)->nu;
    improve(best[next], reached);
    on_path[next] = 1;
    extend_all(g, next, reached, on_path, best);
    on_path[next] = 0;
  }
}

void extend_to(const IndexedGraph& g, std::size_t at, std::size_t target, Scalar length,
               std::vector<char>& on_path, std::optional<Scalar>& best) {
  for (std::size_t next : g.neighbors(at)) {
    if (on_path[next]) continue;
    const Scalar reached = length + g.edge(at, next)->nu;
    if (next == target) {
      improve(best, reached);
      continue;
    }
    on_path[next] = 1;
    extend_to(g, next, target, reached, on_path, best);
    on_path[next] = 0;
  }
}

void fill_row(const IndexedGraph& g, std::size_t source, DistanceTable& table) {
  const auto mu = shortest_mu_from(g, source);
  const auto nu = longest_nu_from(g, source);
  for (std::size_t j = 0; j < table.n; ++j) {
    // Reachability agrees between the two searches.
    if (mu[j] && nu[j]) table.cells[source * table.n + j] = DistancePair{*mu[j], *nu[j]};
  }
}

DistanceTable empty_table(const IndexedGraph& g) {
  DistanceTable table;
  table.n = g.size();
  table.cells.assign(table.n * table.n, std::nullopt);
  return table;
}

}  // namespace

std::vector<std::optional<Scalar>> shortest_mu_from(const IndexedGraph& g, std::size_t source) {
  const std::size_t n = g.size();
  Best dist(n);
  std::vector<char> settled(n, 0);
  dist[source] = Scalar::zero();
  // Dense O(n^2) Dijkstra; the graphs are small and dense-ish.
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (settled[i] || !dist[i]) continue;
      if (pick == n || *dist[i] < *dist[pick]) pick = i;
    }
    if (pick == n) break;
    settled[pick] = 1;
    for (std::size_t next : g.neighbors(pick)) {
      if (settled[next]) continue;
      const Scalar via = *dist[pick] + g.edge(pick, next)->mu;
      if (!dist[next] || via < *dist[next]) dist[next] = via;
    }
  }
  return dist;
}

std::vector<std::optional<Scalar>> longest_nu_from(const IndexedGraph& g, std::size_t source) {
  Best best(g.size());
  best[source] = Scalar::zero();
  std::vector<char> on_path(g.size(), 0);
  on_path[source] = 1;
  extend_all(g, source, Scalar::zero(), on_path, best);
  return best;
}

std::optional<Scalar> longest_nu_between(const IndexedGraph& g, std::size_t source,
                                         std::size_t target) {
  if (source == target) return Scalar::zero();
  std::optional<Scalar> best;
  std::vector<char> on_path(g.size(), 0);
  on_path[source] = 1;
  extend_to(g, source, target, Scalar::zero(), on_path, best);
  return best;
}

bool DistanceTable::complete() const {
  return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.has_value(); });
}

DistanceTable distance_table_serial(const IndexedGraph& g) {
  DistanceTable table = empty_table(g);
  for (std::size_t s = 0; s < g.size(); ++s) fill_row(g, s, table);
  return table;
}

DistanceTable distance_table_parallel(const IndexedGraph& g) {
  DistanceTable table = empty_table(g);
  const auto n = static_cast<long>(g.size());
  // Each source writes only its own row. Row costs vary wildly (longest-path
  // enumeration), hence dynamic scheduling.
#pragma omp parallel for schedule(dynamic, 1)
  for (long s = 0; s < n; ++s) fill_row(g, static_cast<std::size_t>(s), table);
  return table;
}

}  // namespace ivfg::kernels
