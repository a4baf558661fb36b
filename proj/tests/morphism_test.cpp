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

#include <gtest/gtest.h>

#include "ivfg/antipodal.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "support/random_graphs.hpp"

namespace ivfg {
namespace {

using testing::iv;
using Mapping = std::map<VertexId, VertexId>;

testing::oracle::Kind oracle_kind(MorphismKind kind) {
  switch (kind) {
    case MorphismKind::kHomomorphism: return testing::oracle::Kind::kHom;
    case MorphismKind::kIsomorphism: return testing::oracle::Kind::kIso;
    case MorphismKind::kCoWeak: return testing::oracle::Kind::kCoWeak;
  }
  return testing::oracle::Kind::kIso;
}

IvfGraph renamed_triangle() {
  IvfGraph g;
  g.set_vertex("p", iv("0.3", "0.6"))
      .set_vertex("q", iv("0.4", "0.7"))
      .set_vertex("r", iv("0.5", "0.8"))
      .set_edge("p", "q", iv("0.2", "0.5"))
      .set_edge("q", "r", iv("0.3", "0.6"))
      .set_edge("p", "r", iv("0.1", "0.4"));
  return g;
}

IvfGraph single_edge(const char* vmu, const char* vnu) {
  IvfGraph g;
  g.set_vertex("x", iv(vmu, vnu)).set_vertex("y", iv(vmu, vnu));
  g.set_edge("x", "y", iv("0.2", "0.3"));
  return g;
}

Mapping identity(const IvfGraph& g) {
  Mapping m;
  for (const auto& [id, iv] : g.vertices()) m.emplace(id, id);
  return m;
}

TEST(FindMorphismTest, RenamedTriangle) {
  const auto w = find_morphism(testing::triangle(), renamed_triangle(), MorphismKind::kIsomorphism);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->mapping, (Mapping{{"a", "p"}, {"b", "q"}, {"c", "r"}}));
  EXPECT_EQ(w->kind, MorphismKind::kIsomorphism);
}

TEST(FindMorphismTest, ReweightedTriangleIsNotIsomorphic) {
  IvfGraph g = testing::triangle();
  g.set_edge("a", "b", iv("0.1", "0.5"));
  EXPECT_FALSE(find_morphism(testing::triangle(), g, MorphismKind::kIsomorphism).has_value());
}

TEST(FindMorphismTest, CoWeakButNotIsomorphic) {
  const IvfGraph g1 = single_edge("0.3", "0.4");
  const IvfGraph g2 = single_edge("0.5", "0.6");
  const auto w = find_morphism(g1, g2, MorphismKind::kCoWeak);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->mapping, (Mapping{{"x", "x"}, {"y", "y"}}));
  EXPECT_FALSE(find_morphism(g1, g2, MorphismKind::kIsomorphism).has_value());
  EXPECT_FALSE(find_morphism(g2, g1, MorphismKind::kCoWeak).has_value());
}

TEST(FindMorphismTest, HomomorphismNeedNotBeInjective) {
  IvfGraph big;
  big.set_vertex("x", iv("0.5", "0.5")).set_vertex("y", iv("0.5", "0.5"));
  IvfGraph small;
  small.set_vertex("s", iv("0.6", "0.6"));
  const auto w = find_morphism(big, small, MorphismKind::kHomomorphism);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->mapping, (Mapping{{"x", "s"}, {"y", "s"}}));
  EXPECT_FALSE(find_morphism(big, small, MorphismKind::kIsomorphism).has_value());
}

TEST(FindMorphismTest, Errors) {
  IvfGraph bad = testing::triangle();
  bad.set_edge("a", "b", iv("0.9", "0.9"));
  EXPECT_THROW(find_morphism(bad, testing::triangle(), MorphismKind::kIsomorphism), InvalidGraph);
  EXPECT_THROW(find_morphism(testing::triangle(), testing::triangle(), MorphismKind::kCoWeak, {2}),
               TooLarge);
}

TEST(FindMorphismTest, KindNames) {
  for (auto k : {MorphismKind::kHomomorphism, MorphismKind::kIsomorphism, MorphismKind::kCoWeak}) {
    EXPECT_EQ(parse_morphism_kind(morphism_kind_name(k)), k);
  }
  EXPECT_EQ(parse_morphism_kind("isomorphism"), MorphismKind::kIsomorphism);
  EXPECT_EQ(parse_morphism_kind("homomorphism"), MorphismKind::kHomomorphism);
  EXPECT_FALSE(parse_morphism_kind("weak").has_value());
}

TEST(VerifyMapTest, Examples) {
  const IvfGraph t = testing::triangle();
  EXPECT_TRUE(verify_map(t, t, {identity(t), MorphismKind::kIsomorphism}).empty());

  const auto swapped =
      verify_map(t, t, {{{"a", "b"}, {"b", "a"}, {"c", "c"}}, MorphismKind::kIsomorphism});
  ASSERT_FALSE(swapped.empty());
  EXPECT_EQ(swapped.front().kind, ViolationKind::kVertexMembership);

  const auto collapsed =
      verify_map(t, t, {{{"a", "a"}, {"b", "a"}, {"c", "c"}}, MorphismKind::kIsomorphism});
  ASSERT_FALSE(collapsed.empty());
  bool bijection_reported = false;
  for (const auto& v : collapsed) {
    if (v.kind == ViolationKind::kNotBijective) {
      bijection_reported = true;
      EXPECT_EQ(v.message, "not a bijection");
    }
  }
  EXPECT_TRUE(bijection_reported);
}

TEST(VerifyMapTest, DomainAndCodomain) {
  const IvfGraph t = testing::triangle();
  const auto missing = verify_map(t, t, {{{"a", "a"}, {"b", "b"}}, MorphismKind::kHomomorphism});
  ASSERT_FALSE(missing.empty());
  EXPECT_EQ(missing.front().kind, ViolationKind::kMapDomain);
  const auto outside =
      verify_map(t, t, {{{"a", "a"}, {"b", "b"}, {"c", "zz"}}, MorphismKind::kHomomorphism});
  ASSERT_FALSE(outside.empty());
  EXPECT_EQ(outside.front().kind, ViolationKind::kMapCodomain);
}

TEST(FindMorphismTest, AgreesWithExhaustiveOracle) {
  testing::Rng rng(51);
  testing::RandomSpec spec;
  spec.min_vertices = 2;
  spec.max_vertices = 5;
  spec.step = 2500;
  spec.connected = false;
  for (int i = 0; i < 150; ++i) {
    const IvfGraph g1 = testing::random_graph(rng, spec);
    const IvfGraph g2 = i % 3 == 0 ? testing::random_relabel(rng, g1).graph
                                   : testing::random_graph(rng, spec);
    for (auto kind :
         {MorphismKind::kHomomorphism, MorphismKind::kIsomorphism, MorphismKind::kCoWeak}) {
      const auto found = find_morphism(g1, g2, kind);
      const auto expected = testing::oracle::first_morphism(g1, g2, oracle_kind(kind));
      ASSERT_EQ(found.has_value(), expected.has_value());
      if (!found) continue;
      ASSERT_EQ(found->mapping, *expected);
      ASSERT_TRUE(verify_map(g1, g2, *found).empty());
    }
  }
}

TEST(FindMorphismTest, IsomorphismIsAnEquivalence) {
  testing::Rng rng(52);
  for (int i = 0; i < 60; ++i) {
    testing::RandomSpec spec;
    spec.max_vertices = 7;
    const IvfGraph g = testing::random_graph(rng, spec);
    const auto r1 = testing::random_relabel(rng, g);
    const auto r2 = testing::random_relabel(rng, r1.graph);

    const auto self = find_morphism(g, g, MorphismKind::kIsomorphism);
    ASSERT_TRUE(self.has_value());
    ASSERT_TRUE(verify_map(g, g, {identity(g), MorphismKind::kIsomorphism}).empty());

    const auto forward = find_morphism(g, r1.graph, MorphismKind::kIsomorphism);
    ASSERT_TRUE(forward.has_value());
    Mapping inverse;
    for (const auto& [u, hu] : forward->mapping) inverse.emplace(hu, u);
    ASSERT_TRUE(verify_map(r1.graph, g, {inverse, MorphismKind::kIsomorphism}).empty());

    const auto second = find_morphism(r1.graph, r2.graph, MorphismKind::kIsomorphism);
    ASSERT_TRUE(second.has_value());
    Mapping composed;
    for (const auto& [u, hu] : forward->mapping) composed.emplace(u, second->mapping.at(hu));
    ASSERT_TRUE(verify_map(g, r2.graph, {composed, MorphismKind::kIsomorphism}).empty());
  }
}

TEST(FindMorphismTest, RelabelingPreservesAntipodalIsomorphism) {
  testing::Rng rng(53);
  testing::RandomSpec spec;
  spec.max_vertices = 6;
  for (int i = 0; i < 40; ++i) {
    const IvfGraph g = testing::random_graph(rng, spec);
    const auto r = testing::random_relabel(rng, g);
    ASSERT_TRUE(find_morphism(antipodal_graph(g).graph, antipodal_graph(r.graph).graph,
                              MorphismKind::kIsomorphism)
                    .has_value());
  }
}

}  // namespace
}  // namespace ivfg
