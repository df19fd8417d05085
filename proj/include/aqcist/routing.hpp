// Copyright 2026 The aqcist Authors
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

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "aqcist/family.hpp"
#include "aqcist/tree.hpp"

namespace aqcist {

/// Multipath router over a verified CIST family: between any two vertices the
/// i-th route is the path in tree i, and the routes are pairwise internally
/// vertex-disjoint and edge-disjoint.
class Router {
 public:
  /// Runs the characterization; throws Error(kInvalidInput) if it fails.
  explicit Router(const CistFamily& family);

  const CistFamily& family() const noexcept { return family_; }

  /// Throws Error(kInvalidInput) if u == v or either vertex is out of range.
  std::vector<TreePath> routes(const VertexId& u, const VertexId& v) const;

 private:
  CistFamily family_;
};

std::vector<TreePath> disjoint_routes(const CistFamily& family, const VertexId& u,
                                      const VertexId& v);

/// Pairs to sample: every unordered pair, or `count` random ordered pairs with
/// u != v drawn from a seeded generator.
struct PairSampler {
  bool exhaustive = false;
  std::uint64_t count = 1000;
  std::uint64_t seed = 1;

  static PairSampler all_pairs() { return {true, 0, 0}; }
  static PairSampler random(std::uint64_t count, std::uint64_t seed) {
    return {false, count, seed};
  }

  std::vector<std::pair<Label, Label>> draw(int n) const;
};

struct TreeRouteStats {
  std::size_t max_length = 0;
  double mean_length = 0.0;
};

struct RouteSummary {
  std::uint64_t pairs = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  /// Pairs adjacent in AQ_n, where the graph distance is 1.
  std::uint64_t adjacent_pairs = 0;
  std::vector<TreeRouteStats> per_tree;
};

RouteSummary route_stats(const Router& router, const PairSampler& sampler);

/// True when the routes are pairwise vertex-disjoint except at the endpoints
/// and pairwise edge-disjoint.
bool routes_disjoint(const std::vector<TreePath>& routes);

}  // namespace aqcist
