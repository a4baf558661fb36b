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

// Distance kernels. Every kernel here works on an IndexedGraph and assumes
// the caller already checked validity and the vertex cap.
//
// The all-pairs table exists twice: distance_table_parallel is the OpenMP
// version used by the library, distance_table_serial is the reference the
// tests and the benchmark compare it against. Both must produce identical
// tables.

#ifndef IVFG_KERNELS_HPP
#define IVFG_KERNELS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ivfg/indexed.hpp"
#include "ivfg/pairs.hpp"

namespace ivfg::kernels {

/// Smallest mu-length from source to every vertex (Dijkstra; weights are
/// non-negative). nullopt for unreachable vertices; 0 at the source.
std::vector<std::optional<Scalar>> shortest_mu_from(const IndexedGraph& g, std::size_t source);

/// Largest nu-length over simple paths from source to every vertex, by
/// exhaustive DFS. nullopt for unreachable vertices; 0 at the source.
std::vector<std::optional<Scalar>> longest_nu_from(const IndexedGraph& g, std::size_t source);

/// Largest nu-length over simple source-target paths. Paths are not
/// extended past the target.
std::optional<Scalar> longest_nu_between(const IndexedGraph& g, std::size_t source,
                                         std::size_t target);

/// Row-major n x n table of distance pairs; nullopt where no path exists.
/// The diagonal holds (0, 0).
struct DistanceTable {
  std::size_t n = 0;
  std::vector<std::optional<DistancePair>> cells;

  const std::optional<DistancePair>& at(std::size_t i, std::size_t j) const {
    return cells[i * n + j];
  }
  bool complete() const;

  friend bool operator==(const DistanceTable&, const DistanceTable&) = default;
};

DistanceTable distance_table_serial(const IndexedGraph& g);
DistanceTable distance_table_parallel(const IndexedGraph& g);

}  // namespace ivfg::kernels

#endif  // IVFG_KERNELS_HPP
