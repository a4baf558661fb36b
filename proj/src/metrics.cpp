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

#include "ivfg/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>
#include <set>
#include <string_view>

#include "ivfg/indexed.hpp"

namespace ivfg {

namespace {

void require_within(const IvfGraph& g, const MetricsLimits& limits) {
  if (g.vertex_count() > limits.max_vertices) {
    throw TooLarge(g.vertex_count(), limits.max_vertices);
  }
}

void require_distinct(const VertexId& u, const VertexId& v) {
  if (u == v) throw BadParams("endpoints must differ, got '" + u + "' twice");
}

void require_connected(const IvfGraph& g) {
  if (!is_connected(g)) throw Disconnected("graph is not connected");
}

void require_pairs(const IvfGraph& g) {
  if (g.vertex_count() < 2) {
    throw TooFewVertices("eccentricity needs at least two vertices");
  }
}

void collect_paths(const IndexedGraph& g, std::size_t at, std::size_t target,
                   std::vector<std::size_t>& prefix, std::vector<char>& on_path,
                   std::vector<Path>& out) {
  for (std::size_t next : g.neighbors(at)) {
    if (on_path[next]) continue;
    prefix.push_back(next);
    if (next == target) {
      Path p;
      p.reserve(prefix.size());
      for (std::size_t i : prefix) p.push_back(g.id(i));
      out.push_back(std::move(p));
    } else {
      on_path[next] = 1;
      collect_paths(g, next, target, prefix, on_path, out);
      on_path[next] = 0;
    }
    prefix.pop_back();
  }
}

void widest(const IndexedGraph& g, std::size_t at, std::size_t target, ScalarPair bottleneck,
            std::vector<char>& on_path, ScalarPair& best) {
  for (std::size_t next : g.neighbors(at)) {
    if (on_path[next]) continue;
    const auto& e = *g.edge(at, next);
    const ScalarPair narrowed{std::min(bottleneck.mu, e.mu), std::min(bottleneck.nu, e.nu)};
    if (next == target) {
      best = componentwise_max(best, narrowed);
      continue;
    }
    on_path[next] = 1;
    widest(g, next, target, narrowed, on_path, best);
    on_path[next] = 0;
  }
}

EccentricityPair eccentricity_of_row(const DistanceMatrix& d, std::size_t i) {
  EccentricityPair e;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j != i) e = componentwise_max(e, d.at(i, j));
  }
  return e;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const ScalarPair& p) { return os << p.to_string(); }

MetricsLimits MetricsLimits::from_environment() {
  MetricsLimits limits;
  if (const char* raw = std::getenv("IVFG_MAX_VERTICES")) {
    const std::string_view text(raw);
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && end == text.data() + text.size() && value > 0) {
      limits.max_vertices = value;
    }
  }
  return limits;
}

LengthPair path_length(const IvfGraph& g, const Path& p) {
  if (p.empty()) throw NotAPath("empty path");
  std::set<VertexId> seen;
  LengthPair length;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!g.has_vertex(p[i])) throw NotAPath("vertex '" + p[i] + "' is not in the graph");
    if (!seen.insert(p[i]).second) throw NotAPath("vertex '" + p[i] + "' repeats");
    if (i == 0) continue;
    const auto e = g.edge(p[i - 1], p[i]);
    if (!e) throw NotAPath("no edge " + p[i - 1] + "-" + p[i]);
    length += LengthPair{e->mu, e->nu};
  }
  return length;
}

std::vector<Path> enumerate_simple_paths(const IvfGraph& g, const VertexId& u,
                                         const VertexId& v, const MetricsLimits& limits) {
  require_valid(g);
  require_distinct(u, v);
  require_within(g, limits);
  const IndexedGraph ig(g);
  const std::size_t s = ig.index_of(u);
  const std::size_t t = ig.index_of(v);

  std::vector<Path> out;
  std::vector<std::size_t> prefix{s};
  std::vector<char> on_path(ig.size(), 0);
  on_path[s] = 1;
  collect_paths(ig, s, t, prefix, on_path, out);
  return out;
}

DistancePair distance(const IvfGraph& g, const VertexId& u, const VertexId& v,
                      const MetricsLimits& limits) {
  require_valid(g);
  require_distinct(u, v);
  require_within(g, limits);
  const IndexedGraph ig(g);
  const std::size_t s = ig.index_of(u);
  const std::size_t t = ig.index_of(v);

  const auto mu = kernels::shortest_mu_from(ig, s)[t];
  if (!mu) throw Disconnected("no path between " + u + " and " + v);
  const auto nu = kernels::longest_nu_between(ig, s, t);
  return {*mu, *nu};
}

ScalarPair strength_of_connectedness(const IvfGraph& g, const VertexId& u, const VertexId& v,
                                     const MetricsLimits& limits) {
  require_valid(g);
  require_distinct(u, v);
  require_within(g, limits);
  const IndexedGraph ig(g);
  const std::size_t s = ig.index_of(u);
  const std::size_t t = ig.index_of(v);

  ScalarPair best;
  std::vector<char> on_path(ig.size(), 0);
  on_path[s] = 1;
  // Start from an unbounded bottleneck; memberships never exceed one.
  widest(ig, s, t, ScalarPair{Scalar::one(), Scalar::one()}, on_path, best);
  return best;
}

bool is_connected(const IvfGraph& g) {
  require_valid(g);
  if (g.vertex_count() < 2) return true;
  const IndexedGraph ig(g);
  std::vector<char> seen(ig.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t at = stack.back();
    stack.pop_back();
    for (std::size_t next : ig.neighbors(at)) {
      if (seen[next]) continue;
      seen[next] = 1;
      ++reached;
      stack.push_back(next);
    }
  }
  return reached == ig.size();
}

EccentricityPair eccentricity(const IvfGraph& g, const VertexId& v, const MetricsLimits& limits) {
  require_valid(g);
  require_pairs(g);
  require_within(g, limits);
  require_connected(g);
  const IndexedGraph ig(g);
  const std::size_t s = ig.index_of(v);
  const auto mu = kernels::shortest_mu_from(ig, s);
  const auto nu = kernels::longest_nu_from(ig, s);
  EccentricityPair e;
  for (std::size_t j = 0; j < ig.size(); ++j) {
    if (j == s) continue;
    e = componentwise_max(e, EccentricityPair{*mu[j], *nu[j]});
  }
  return e;
}

ScalarPair radius(const IvfGraph& g, const MetricsLimits& limits) {
  return analyze(g, limits).radius;
}

ScalarPair diameter(const IvfGraph& g, const MetricsLimits& limits) {
  return analyze(g, limits).diameter;
}

DistanceMatrix::DistanceMatrix(std::vector<VertexId> ids, kernels::DistanceTable table)
    : ids_(std::move(ids)), table_(std::move(table)) {}

const DistancePair& DistanceMatrix::at(const VertexId& u, const VertexId& v) const {
  auto find = [&](const VertexId& id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) throw UnknownVertex("unknown vertex '" + id + "'");
    return static_cast<std::size_t>(it - ids_.begin());
  };
  return at(find(u), find(v));
}

DistanceMatrix distance_matrix(const IvfGraph& g, const MetricsLimits& limits) {
  require_valid(g);
  require_within(g, limits);
  require_connected(g);
  const IndexedGraph ig(g);
  auto table = kernels::distance_table_parallel(ig);
  return DistanceMatrix({ig.ids().begin(), ig.ids().end()}, std::move(table));
}

MetricsReport analyze(const IvfGraph& g, const MetricsLimits& limits) {
  require_valid(g);
  require_pairs(g);
  MetricsReport report{distance_matrix(g, limits), {}, {}, {}};
  const auto& d = report.distances;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const EccentricityPair e = eccentricity_of_row(d, i);
    report.eccentricities.emplace(d.ids()[i], e);
    if (i == 0) {
      report.radius = e;
      report.diameter = e;
    } else {
      report.radius = componentwise_min(report.radius, e);
      report.diameter = componentwise_max(report.diameter, e);
    }
  }
  return report;
}

}  // namespace ivfg
