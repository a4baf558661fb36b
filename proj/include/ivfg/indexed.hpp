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

#ifndef IVFG_INDEXED_HPP
#define IVFG_INDEXED_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ivfg/graph.hpp"

namespace ivfg {

/// Dense, index-addressed snapshot of an IvfGraph for the hot loops.
/// Index order is vertex-id order, so ascending neighbor indices visit
/// neighbors in lexicographic id order.
class IndexedGraph {
 public:
  explicit IndexedGraph(const IvfGraph& g);

  std::size_t size() const { return ids_.size(); }
  const VertexId& id(std::size_t i) const { return ids_[i]; }
  std::span<const VertexId> ids() const { return ids_; }
  /// Throws UnknownVertex.
  std::size_t index_of(const VertexId& id) const;

  const MembershipInterval& vertex(std::size_t i) const { return vertex_[i]; }
  const std::optional<MembershipInterval>& edge(std::size_t i, std::size_t j) const {
    return adjacency_[i * size() + j];
  }
  std::span<const std::size_t> neighbors(std::size_t i) const { return neighbors_[i]; }

 private:
  std::vector<VertexId> ids_;
  std::vector<MembershipInterval> vertex_;
  std::vector<std::optional<MembershipInterval>> adjacency_;
  std::vector<std::vector<std::size_t>> neighbors_;
};

}  // namespace ivfg

#endif  // IVFG_INDEXED_HPP
