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

#ifndef IVFG_METRICS_HPP
#define IVFG_METRICS_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "ivfg/graph.hpp"
#include "ivfg/kernels.hpp"
#include "ivfg/pairs.hpp"

namespace ivfg {

/// Vertex cap for every query that enumerates simple paths. Longest simple
/// path is exponential, so queries over larger graphs throw TooLarge.
struct MetricsLimits {
  static constexpr std::size_t kDefaultMaxVertices = 12;
  std::size_t max_vertices = kDefaultMaxVertices;

  /// Defaults, overridden by IVFG_MAX_VERTICES when it holds a positive
  /// integer.
  static MetricsLimits from_environment();
};

/// Sequence of distinct vertices; consecutive pairs must be edges.
using Path = std::vector<VertexId>;

/// Throws NotAPath on a repeated vertex or a missing edge.
LengthPair path_length(const IvfGraph& g, const Path& p);

/// Every simple u-v path exactly once, in lexicographic order of the
/// vertex-id sequences.
std::vector<Path> enumerate_simple_paths(const IvfGraph& g, const VertexId& u,
                                         const VertexId& v, const MetricsLimits& limits = {});

/// (min mu-length, max nu-length) over simple u-v paths.
/// Throws Disconnected when no u-v path exists.
DistancePair distance(const IvfGraph& g, const VertexId& u, const VertexId& v,
                      const MetricsLimits& limits = {});

/// Componentwise max over simple u-v paths of the path's weakest edge
/// (min mu_B, min nu_B). (0, 0) when u and v are not joined.
ScalarPair strength_of_connectedness(const IvfGraph& g, const VertexId& u, const VertexId& v,
                                     const MetricsLimits& limits = {});

/// Every pair of vertices is joined by a path. Vacuously true below two
/// vertices.
bool is_connected(const IvfGraph& g);

EccentricityPair eccentricity(const IvfGraph& g, const VertexId& v,
                              const MetricsLimits& limits = {});
/// Componentwise min of the eccentricities.
ScalarPair radius(const IvfGraph& g, const MetricsLimits& limits = {});
/// Componentwise max of the eccentricities.
ScalarPair diameter(const IvfGraph& g, const MetricsLimits& limits = {});

/// All-pairs distances of a connected graph, addressed by vertex id.
class DistanceMatrix {
 public:
  DistanceMatrix(std::vector<VertexId> ids, kernels::DistanceTable table);

  std::size_t size() const { return ids_.size(); }
  const std::vector<VertexId>& ids() const { return ids_; }
  const DistancePair& at(std::size_t i, std::size_t j) const { return *table_.at(i, j); }
  const DistancePair& at(const VertexId& u, const VertexId& v) const;

 private:
  std::vector<VertexId> ids_;
  kernels::DistanceTable table_;
};

/// Full distance analysis of a connected graph with at least two vertices.
struct MetricsReport {
  DistanceMatrix distances;
  std::map<VertexId, EccentricityPair> eccentricities;
  ScalarPair radius;
  ScalarPair diameter;
};

/// Computes the distance table with the parallel kernel.
/// Throws InvalidGraph, TooLarge, Disconnected, TooFewVertices.
DistanceMatrix distance_matrix(const IvfGraph& g, const MetricsLimits& limits = {});
MetricsReport analyze(const IvfGraph& g, const MetricsLimits& limits = {});

}  // namespace ivfg

#endif  // IVFG_METRICS_HPP
