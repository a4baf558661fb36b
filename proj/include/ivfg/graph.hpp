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

#ifndef IVFG_GRAPH_HPP
#define IVFG_GRAPH_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ivfg/errors.hpp"
#include "ivfg/scalar.hpp"

namespace ivfg {

/// Membership interval [mu, nu] of a vertex or an edge.
struct MembershipInterval {
  Scalar mu;
  Scalar nu;

  /// 0 <= mu <= nu <= 1.
  bool well_formed() const { return mu <= nu && nu <= Scalar::one(); }

  friend bool operator==(const MembershipInterval&, const MembershipInterval&) = default;
  friend auto operator<=>(const MembershipInterval&, const MembershipInterval&) = default;
};

/// Componentwise minimum.
inline MembershipInterval meet(const MembershipInterval& a, const MembershipInterval& b) {
  return {std::min(a.mu, b.mu), std::min(a.nu, b.nu)};
}

/// Componentwise a <= b.
inline bool dominated_by(const MembershipInterval& a, const MembershipInterval& b) {
  return a.mu <= b.mu && a.nu <= b.nu;
}

std::string to_string(const MembershipInterval& m);

using VertexId = std::string;

/// Unordered vertex pair, stored with first <= second.
class EdgeKey {
 public:
  EdgeKey(VertexId a, VertexId b) {
    if (b < a) std::swap(a, b);
    first_ = std::move(a);
    second_ = std::move(b);
  }
  const VertexId& first() const { return first_; }
  const VertexId& second() const { return second_; }
  bool is_loop() const { return first_ == second_; }

  friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;

 private:
  VertexId first_;
  VertexId second_;
};

/// Interval-valued fuzzy graph: vertex and edge sets each weighted by a
/// MembershipInterval.
///
/// The container holds arbitrary candidate data; validate() decides
/// whether it is a proper graph. Algorithms that need a valid graph check
/// it themselves and throw InvalidGraph.
class IvfGraph {
 public:
  using VertexMap = std::map<VertexId, MembershipInterval>;
  using EdgeMap = std::map<EdgeKey, MembershipInterval>;

  IvfGraph() = default;

  /// Inserts or overwrites.
  IvfGraph& set_vertex(const VertexId& id, MembershipInterval m);
  IvfGraph& set_vertex(const VertexId& id, Scalar mu, Scalar nu) {
    return set_vertex(id, MembershipInterval{mu, nu});
  }
  /// Inserts or overwrites; endpoints are not checked here.
  IvfGraph& set_edge(const VertexId& a, const VertexId& b, MembershipInterval m);
  IvfGraph& set_edge(const VertexId& a, const VertexId& b, Scalar mu, Scalar nu) {
    return set_edge(a, b, MembershipInterval{mu, nu});
  }
  void erase_edge(const VertexId& a, const VertexId& b);

  const VertexMap& vertices() const { return vertices_; }
  const EdgeMap& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(const VertexId& id) const { return vertices_.contains(id); }
  /// Throws UnknownVertex.
  const MembershipInterval& vertex(const VertexId& id) const;
  std::optional<MembershipInterval> edge(const VertexId& a, const VertexId& b) const;
  bool adjacent(const VertexId& a, const VertexId& b) const {
    return edges_.contains(EdgeKey(a, b));
  }

  friend bool operator==(const IvfGraph&, const IvfGraph&) = default;

 private:
  VertexMap vertices_;
  EdgeMap edges_;
};

/// Every violated invariant, with the offending vertex or edge named.
ValidationReport validate(const IvfGraph& g);

/// Throws InvalidGraph unless validate(g) is empty.
void require_valid(const IvfGraph& g);

/// Complement: same vertices; every pair xy gets
/// [min(mu(x),mu(y)) - mu(xy), min(nu(x),nu(y)) - nu(xy)], absent edges
/// counting as [0,0]. Pairs that come out as [0,0] are not stored.
///
/// The result can violate mu <= nu on an edge (and can store an edge with
/// nu == 0 and mu > 0) even for valid input; validate() reports those.
/// Accepts any input whose only violations are of that kind, so
/// complement(complement(g)) == g for every valid g.
IvfGraph complement(const IvfGraph& g);

/// Every pair is an edge and every edge equals the min of its endpoints.
bool is_complete(const IvfGraph& g);

/// h's vertices and edges are contained in g with identical intervals.
bool is_subgraph(const IvfGraph& h, const IvfGraph& g);

/// Vertex-induced restriction of g, keeping edges with both ends kept.
IvfGraph induced_subgraph(const IvfGraph& g, const std::vector<VertexId>& keep);

}  // namespace ivfg

#endif  // IVFG_GRAPH_HPP
