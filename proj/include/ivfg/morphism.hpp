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

#ifndef IVFG_MORPHISM_HPP
#define IVFG_MORPHISM_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>

#include "ivfg/errors.hpp"
#include "ivfg/graph.hpp"

namespace ivfg {

/// Constraint families on a vertex map h: V1 -> V2. Absent edges (and the
/// image of an edge collapsed onto one vertex) weigh [0, 0].
///
///  - homomorphism: any total map; vertex and edge intervals of G1 are
///    componentwise <= their images, for every vertex and every edge of G1.
///  - isomorphism: bijection; vertex intervals equal their images and
///    every vertex pair has the same weight as its image pair.
///  - co-weak: bijection; vertex intervals <= their images and every
///    vertex pair has the same weight as its image pair.
enum class MorphismKind {
  kHomomorphism,
  kIsomorphism,
  kCoWeak,
};

/// Accepts "hom"/"homomorphism", "iso"/"isomorphism", "co-weak".
std::optional<MorphismKind> parse_morphism_kind(std::string_view name);
std::string_view morphism_kind_name(MorphismKind kind);

struct VertexMap {
  std::map<VertexId, VertexId> mapping;
  MorphismKind kind = MorphismKind::kIsomorphism;

  friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

struct MorphismLimits {
  static constexpr std::size_t kDefaultMaxVertices = 10;
  std::size_t max_vertices = kDefaultMaxVertices;
};

/// Every violated constraint of m.kind; empty iff m is a witness.
ValidationReport verify_map(const IvfGraph& g1, const IvfGraph& g2, const VertexMap& m);

/// Backtracking search for a witness of the given kind. Candidates are
/// tried in vertex-id order, so the result is the lexicographically first
/// witness (comparing images in source vertex-id order).
///
/// Throws InvalidGraph, and TooLarge when either graph exceeds the cap.
std::optional<VertexMap> find_morphism(const IvfGraph& g1, const IvfGraph& g2,
                                       MorphismKind kind, const MorphismLimits& limits = {});

}  // namespace ivfg

#endif  // IVFG_MORPHISM_HPP
