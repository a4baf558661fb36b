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

#include "ivfg/indexed.hpp"

#include <algorithm>

namespace ivfg {

IndexedGraph::IndexedGraph(const IvfGraph& g) {
  ids_.reserve(g.vertex_count());
  vertex_.reserve(g.vertex_count());
  for (const auto& [id, m] : g.vertices()) {
    ids_.push_back(id);
    vertex_.push_back(m);
  }
  const std::size_t n = ids_.size();
  adjacency_.assign(n * n, std::nullopt);
  neighbors_.assign(n, {});
  for (const auto& [key, m] : g.edges()) {
    const std::size_t a = index_of(key.first());
    const std::size_t b = index_of(key.second());
    adjacency_[a * n + b] = m;
    adjacency_[b * n + a] = m;
    neighbors_[a].push_back(b);
    neighbors_[b].push_back(a);
  }
  for (auto& list : neighbors_) std::sort(list.begin(), list.end());
}

std::size_t IndexedGraph::index_of(const VertexId& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) throw UnknownVertex("unknown vertex '" + id + "'");
  return static_cast<std::size_t>(it - ids_.begin());
}

}  // namespace ivfg
