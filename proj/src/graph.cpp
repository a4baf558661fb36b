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

#include "ivfg/graph.hpp"

#include <algorithm>
#include <set>

namespace ivfg {

namespace {

std::string summarize(const ValidationReport& report) {
  std::string what = "invalid graph";
  if (!report.empty()) {
    what += ": " + report.front().message;
    if (report.size() > 1) {
      what += " (and " + std::to_string(report.size() - 1) + " more)";
    }
  }
  return what;
}

std::string edge_name(const EdgeKey& key) {
  return key.first() + "-" + key.second();
}

}  // namespace

InvalidGraph::InvalidGraph(ValidationReport report)
    : Error(summarize(report)), report_(std::move(report)) {}

ValidationFailed::ValidationFailed(ValidationReport report)
    : Error(summarize(report)), report_(std::move(report)) {}

TooLarge::TooLarge(std::size_t vertices, std::size_t cap)
    : Error("graph has " + std::to_string(vertices) + " vertices, cap is " +
            std::to_string(cap)),
      vertices_(vertices),
      cap_(cap) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::string to_string(const MembershipInterval& m) {
  return "[" + m.mu.to_string() + ", " + m.nu.to_string() + "]";
}

IvfGraph& IvfGraph::set_vertex(const VertexId& id, MembershipInterval m) {
  vertices_.insert_or_assign(id, m);
  return *this;
}

IvfGraph& IvfGraph::set_edge(const VertexId& a, const VertexId& b, MembershipInterval m) {
  edges_.insert_or_assign(EdgeKey(a, b), m);
  return *this;
}

void IvfGraph::erase_edge(const VertexId& a, const VertexId& b) {
  edges_.erase(EdgeKey(a, b));
}

const MembershipInterval& IvfGraph::vertex(const VertexId& id) const {
  auto it = vertices_.find(id);
  if (it == vertices_.end()) throw UnknownVertex("unknown vertex '" + id + "'");
  return it->second;
}

std::optional<MembershipInterval> IvfGraph::edge(const VertexId& a, const VertexId& b) const {
  auto it = edges_.find(EdgeKey(a, b));
  if (it == edges_.end()) return std::nullopt;
  return it->second;
}

ValidationReport validate(const IvfGraph& g) {
  ValidationReport report;
  for (const auto& [id, m] : g.vertices()) {
    if (m.mu > m.nu) {
      report.push_back({ViolationKind::kVertexRange,
                        "mu > nu at " + id + ": " + to_string(m)});
    }
    if (m.nu > Scalar::one() || m.mu > Scalar::one()) {
      report.push_back({ViolationKind::kVertexRange,
                        "membership above 1 at " + id + ": " + to_string(m)});
    }
  }
  for (const auto& [key, m] : g.edges()) {
    const std::string name = edge_name(key);
    if (key.is_loop()) {
      report.push_back({ViolationKind::kSelfLoop, "self-loop at " + key.first()});
      continue;
    }
    bool dangling = false;
    for (const auto* end : {&key.first(), &key.second()}) {
      if (!g.has_vertex(*end)) {
        report.push_back({ViolationKind::kUnknownEndpoint,
                          "edge " + name + " references unknown vertex " + *end});
        dangling = true;
      }
    }
    if (m.nu == Scalar::zero() && m.mu == Scalar::zero()) {
      report.push_back({ViolationKind::kZeroEdge, "edge " + name + " has weight [0, 0]"});
    } else if (m.mu > m.nu) {
      report.push_back({ViolationKind::kEdgeRange,
                        "mu > nu at edge " + name + ": " + to_string(m)});
    } else if (m.nu > Scalar::one()) {
      report.push_back({ViolationKind::kEdgeRange,
                        "membership above 1 at edge " + name + ": " + to_string(m)});
    }
    if (dangling) continue;

    const auto& x = g.vertex(key.first());
    const auto& y = g.vertex(key.second());
    const Scalar min_mu = std::min(x.mu, y.mu);
    const Scalar min_nu = std::min(x.nu, y.nu);
    if (m.mu > min_mu) {
      report.push_back({ViolationKind::kEdgeBound,
                        "mu_B(" + name + ") = " + m.mu.to_string() + " > min(" +
                            x.mu.to_string() + ", " + y.mu.to_string() +
                            ") = " + min_mu.to_string()});
    }
    if (m.nu > min_nu) {
      report.push_back({ViolationKind::kEdgeBound,
                        "nu_B(" + name + ") = " + m.nu.to_string() + " > min(" +
                            x.nu.to_string() + ", " + y.nu.to_string() +
                            ") = " + min_nu.to_string()});
    }
  }
  return report;
}

void require_valid(const IvfGraph& g) {
  auto report = validate(g);
  if (!report.empty()) throw InvalidGraph(std::move(report));
}

IvfGraph complement(const IvfGraph& g) {
  auto report = validate(g);
  std::erase_if(report, [](const Violation& v) { return v.kind == ViolationKind::kEdgeRange; });
  if (!report.empty()) throw InvalidGraph(std::move(report));

  IvfGraph out;
  for (const auto& [id, m] : g.vertices()) out.set_vertex(id, m);

  const auto& vs = g.vertices();
  for (auto i = vs.begin(); i != vs.end(); ++i) {
    for (auto j = std::next(i); j != vs.end(); ++j) {
      const MembershipInterval bound = meet(i->second, j->second);
      const MembershipInterval present = g.edge(i->first, j->first).value_or(MembershipInterval{});
      const MembershipInterval c{bound.mu - present.mu, bound.nu - present.nu};
      if (c.mu == Scalar::zero() && c.nu == Scalar::zero()) continue;
      out.set_edge(i->first, j->first, c);
    }
  }
  return out;
}

bool is_complete(const IvfGraph& g) {
  require_valid(g);
  const std::size_t n = g.vertex_count();
  if (g.edge_count() != n * (n - 1) / 2) return false;
  for (const auto& [key, m] : g.edges()) {
    if (m != meet(g.vertex(key.first()), g.vertex(key.second()))) return false;
  }
  // A single vertex has no pairs; it is trivially complete. Zero vertices too.
  return true;
}

bool is_subgraph(const IvfGraph& h, const IvfGraph& g) {
  require_valid(h);
  require_valid(g);
  for (const auto& [id, m] : h.vertices()) {
    auto it = g.vertices().find(id);
    if (it == g.vertices().end() || it->second != m) return false;
  }
  for (const auto& [key, m] : h.edges()) {
    auto it = g.edges().find(key);
    if (it == g.edges().end() || it->second != m) return false;
  }
  return true;
}

IvfGraph induced_subgraph(const IvfGraph& g, const std::vector<VertexId>& keep) {
  const std::set<VertexId> kept(keep.begin(), keep.end());
  IvfGraph out;
  for (const auto& id : kept) out.set_vertex(id, g.vertex(id));
  for (const auto& [key, m] : g.edges()) {
    if (kept.contains(key.first()) && kept.contains(key.second())) {
      out.set_edge(key.first(), key.second(), m);
    }
  }
  return out;
}

}  // namespace ivfg
