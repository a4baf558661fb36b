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

#include "ivfg/morphism.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "ivfg/indexed.hpp"

namespace ivfg {

namespace {

constexpr MembershipInterval kAbsent{};

bool bijective(MorphismKind kind) { return kind != MorphismKind::kHomomorphism; }

bool vertex_ok(MorphismKind kind, const MembershipInterval& from, const MembershipInterval& to) {
  return kind == MorphismKind::kIsomorphism ? from == to : dominated_by(from, to);
}

MembershipInterval weight(const IndexedGraph& g, std::size_t a, std::size_t b) {
  if (a == b) return kAbsent;
  return g.edge(a, b).value_or(kAbsent);
}

// Edge constraint between source pair (u, w) and image pair (hu, hw).
// Homomorphisms only constrain actual edges of the source.
bool pair_ok(MorphismKind kind, const IndexedGraph& g1, const IndexedGraph& g2, std::size_t u,
             std::size_t w, std::size_t hu, std::size_t hw) {
  const auto& from = g1.edge(u, w);
  if (kind == MorphismKind::kHomomorphism) {
    return !from || dominated_by(*from, weight(g2, hu, hw));
  }
  return from.value_or(kAbsent) == weight(g2, hu, hw);
}

template <class Range>
std::vector<MembershipInterval> sorted_intervals(const Range& items) {
  std::vector<MembershipInterval> out;
  for (const auto& [key, m] : items) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

// Necessary conditions for the bijective kinds: pair weights are preserved
// both ways, so edge sets correspond one-to-one.
bool invariants_match(const IvfGraph& g1, const IvfGraph& g2, MorphismKind kind) {
  if (g1.vertex_count() != g2.vertex_count()) return false;
  if (g1.edge_count() != g2.edge_count()) return false;
  if (sorted_intervals(g1.edges()) != sorted_intervals(g2.edges())) return false;
  if (kind == MorphismKind::kIsomorphism &&
      sorted_intervals(g1.vertices()) != sorted_intervals(g2.vertices())) {
    return false;
  }
  return true;
}

class Search {
 public:
  Search(const IvfGraph& g1, const IvfGraph& g2, MorphismKind kind)
      : g1_(g1), g2_(g2), kind_(kind), image_(g1_.size()), used_(g2_.size(), 0) {}

  bool run() { return assign(0); }

  VertexMap witness() const {
    VertexMap m{{}, kind_};
    for (std::size_t u = 0; u < g1_.size(); ++u) m.mapping.emplace(g1_.id(u), g2_.id(image_[u]));
    return m;
  }

 private:
  bool assign(std::size_t u) {
    if (u == g1_.size()) return true;
    for (std::size_t c = 0; c < g2_.size(); ++c) {
      if (!admissible(u, c)) continue;
      image_[u] = c;
      used_[c] = 1;
      if (assign(u + 1)) return true;
      used_[c] = 0;
    }
    return false;
  }

  bool admissible(std::size_t u, std::size_t c) const {
    if (bijective(kind_)) {
      if (used_[c]) return false;
      if (g1_.neighbors(u).size() != g2_.neighbors(c).size()) return false;
    }
    if (!vertex_ok(kind_, g1_.vertex(u), g2_.vertex(c))) return false;
    for (std::size_t w = 0; w < u; ++w) {
      if (!pair_ok(kind_, g1_, g2_, u, w, c, image_[w])) return false;
    }
    return true;
  }

  IndexedGraph g1_;
  IndexedGraph g2_;
  MorphismKind kind_;
  std::vector<std::size_t> image_;
  std::vector<char> used_;
};

}  // namespace

std::optional<MorphismKind> parse_morphism_kind(std::string_view name) {
  if (name == "hom" || name == "homomorphism") return MorphismKind::kHomomorphism;
  if (name == "iso" || name == "isomorphism") return MorphismKind::kIsomorphism;
  if (name == "co-weak") return MorphismKind::kCoWeak;
  return std::nullopt;
}

std::string_view morphism_kind_name(MorphismKind kind) {
  switch (kind) {
    case MorphismKind::kHomomorphism: return "hom";
    case MorphismKind::kIsomorphism: return "iso";
    case MorphismKind::kCoWeak: return "co-weak";
  }
  return "?";
}

ValidationReport verify_map(const IvfGraph& g1, const IvfGraph& g2, const VertexMap& m) {
  ValidationReport report;
  for (const auto& [u, hu] : m.mapping) {
    if (!g1.has_vertex(u)) {
      report.push_back({ViolationKind::kMapDomain, "map source '" + u + "' is not a vertex of G1"});
    }
    if (!g2.has_vertex(hu)) {
      report.push_back({ViolationKind::kMapCodomain,
                        "image '" + hu + "' of '" + u + "' is not a vertex of G2"});
    }
  }
  for (const auto& [u, _] : g1.vertices()) {
    if (!m.mapping.contains(u)) {
      report.push_back({ViolationKind::kMapDomain, "vertex '" + u + "' is not mapped"});
    }
  }
  if (!report.empty()) return report;

  if (bijective(m.kind)) {
    std::set<VertexId> images;
    for (const auto& [u, hu] : m.mapping) images.insert(hu);
    if (images.size() != m.mapping.size() || images.size() != g2.vertex_count()) {
      report.push_back({ViolationKind::kNotBijective, "not a bijection"});
    }
  }

  for (const auto& [u, hu] : m.mapping) {
    const auto& from = g1.vertex(u);
    const auto& to = g2.vertex(hu);
    if (!vertex_ok(m.kind, from, to)) {
      report.push_back({ViolationKind::kVertexMembership,
                        "vertex " + u + " " + to_string(from) +
                            (m.kind == MorphismKind::kIsomorphism ? " != " : " not <= ") + hu +
                            " " + to_string(to)});
    }
  }

  auto image_weight = [&](const VertexId& a, const VertexId& b) {
    if (a == b) return kAbsent;
    return g2.edge(a, b).value_or(kAbsent);
  };
  for (auto i = m.mapping.begin(); i != m.mapping.end(); ++i) {
    for (auto j = std::next(i); j != m.mapping.end(); ++j) {
      const auto from = g1.edge(i->first, j->first);
      if (m.kind == MorphismKind::kHomomorphism && !from) continue;
      const MembershipInterval source = from.value_or(kAbsent);
      const MembershipInterval target = image_weight(i->second, j->second);
      const bool ok = m.kind == MorphismKind::kHomomorphism ? dominated_by(source, target)
                                                            : source == target;
      if (!ok) {
        report.push_back({ViolationKind::kEdgeMembership,
                          "pair " + i->first + "-" + j->first + " " + to_string(source) +
                              (m.kind == MorphismKind::kHomomorphism ? " not <= " : " != ") +
                              i->second + "-" + j->second + " " + to_string(target)});
      }
    }
  }
  return report;
}

std::optional<VertexMap> find_morphism(const IvfGraph& g1, const IvfGraph& g2,
                                       MorphismKind kind, const MorphismLimits& limits) {
  require_valid(g1);
  require_valid(g2);
  for (const IvfGraph* g : {&g1, &g2}) {
    if (g->vertex_count() > limits.max_vertices) {
      throw TooLarge(g->vertex_count(), limits.max_vertices);
    }
  }
  if (bijective(kind) && !invariants_match(g1, g2, kind)) return std::nullopt;
  if (g1.vertex_count() > 0 && g2.vertex_count() == 0) return std::nullopt;

  Search search(g1, g2, kind);
  if (!search.run()) return std::nullopt;
  return search.witness();
}

}  // namespace ivfg
