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

#ifndef IVFG_STATUS_HPP
#define IVFG_STATUS_HPP

#include <map>
#include <set>

#include "ivfg/graph.hpp"
#include "ivfg/metrics.hpp"

namespace ivfg {

/// Sum of the distance pairs from v to every other vertex.
StatusPair status(const IvfGraph& g, const VertexId& v, const MetricsLimits& limits = {});

struct StatusSummary {
  std::map<VertexId, StatusPair> per_vertex;
  StatusPair minimum;  ///< componentwise
  StatusPair maximum;  ///< componentwise
  StatusPair total;
  /// Vertices attaining `minimum` in both components. Can be empty when
  /// different vertices attain the mu- and nu-minimum.
  std::set<VertexId> median;
  std::set<VertexId> mu_minimizers;
  std::set<VertexId> nu_minimizers;
  /// All vertices share one status, i.e. minimum == maximum.
  bool self_median = false;
};

StatusSummary summarize_status(const DistanceMatrix& distances);
StatusSummary status_summary(const IvfGraph& g, const MetricsLimits& limits = {});

}  // namespace ivfg

#endif  // IVFG_STATUS_HPP
