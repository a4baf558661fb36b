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

#include "ivfg/generate.hpp"

namespace ivfg {

namespace {

void check_vertex(const MembershipInterval& v) {
  if (!v.well_formed()) {
    throw BadParams("vertex interval " + to_string(v) + " is not within 0 <= mu <= nu <= 1");
  }
}

void check_edge(const MembershipInterval& e, const MembershipInterval& v) {
  if (!e.well_formed()) {
    throw BadParams("edge interval " + to_string(e) + " is not within 0 <= mu <= nu <= 1");
  }
  if (e.nu == Scalar::zero()) {
    throw BadParams("edge interval " + to_string(e) + " has nu = 0 and would not be an edge");
  }
  if (!dominated_by(e, v)) {
    throw BadParams("edge interval " + to_string(e) + " exceeds vertex interval " +
                    to_string(v));
  }
}

}  // namespace

std::optional<GraphFamily> parse_family(std::string_view name) {
  if (name == "complete-constant") return GraphFamily::kCompleteConstant;
  if (name == "even-cycle-alternating") return GraphFamily::kEvenCycleAlternating;
  if (name == "path") return GraphFamily::kPath;
  return std::nullopt;
}

std::string_view family_name(GraphFamily family) {
  switch (family) {
    case GraphFamily::kCompleteConstant: return "complete-constant";
    case GraphFamily::kEvenCycleAlternating: return "even-cycle-alternating";
    case GraphFamily::kPath: return "path";
  }
  return "?";
}

std::string vertex_name(std::size_t index_from_one) {
  return "v" + std::to_string(index_from_one);
}

IvfGraph generate(GraphFamily family, std::size_t n, const GeneratorParams& params) {
  if (n < 1) throw BadParams("n must be at least 1");
  check_vertex(params.vertex);

  IvfGraph g;
  for (std::size_t i = 1; i <= n; ++i) g.set_vertex(vertex_name(i), params.vertex);

  switch (family) {
    case GraphFamily::kCompleteConstant: {
      if (!params.edges.empty()) {
        throw BadParams("complete-constant takes no edge intervals; edges equal the constant");
      }
      if (n > 1) check_edge(params.vertex, params.vertex);
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
          g.set_edge(vertex_name(i), vertex_name(j), params.vertex);
        }
      }
      break;
    }
    case GraphFamily::kEvenCycleAlternating: {
      if (n < 4 || n % 2 != 0) {
        throw BadParams("even-cycle-alternating needs an even n >= 4, got " + std::to_string(n));
      }
      if (params.edges.size() != 2) {
        throw BadParams("even-cycle-alternating needs exactly two edge intervals");
      }
      for (const auto& e : params.edges) check_edge(e, params.vertex);
      for (std::size_t i = 1; i <= n; ++i) {
        g.set_edge(vertex_name(i), vertex_name(i % n + 1), params.edges[(i - 1) % 2]);
      }
      break;
    }
    case GraphFamily::kPath: {
      if (n == 1) {
        if (params.edges.size() > 1) throw BadParams("a one-vertex path has no edges");
        break;
      }
      if (params.edges.size() != 1 && params.edges.size() != n - 1) {
        throw BadParams("path needs one edge interval or exactly n - 1 of them");
      }
      for (const auto& e : params.edges) check_edge(e, params.vertex);
      for (std::size_t i = 1; i < n; ++i) {
        const auto& e = params.edges.size() == 1 ? params.edges.front() : params.edges[i - 1];
        g.set_edge(vertex_name(i), vertex_name(i + 1), e);
      }
      break;
    }
  }
  return g;
}

}  // namespace ivfg
