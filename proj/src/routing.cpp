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

#include "aqcist/routing.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "aqcist/verification.hpp"

namespace aqcist {

Router::Router(const CistFamily& family) : family_(family) {
  const VerificationReport report = verify_characterization(family_);
  if (!report.pass) {
    throw Error(ErrorKind::kInvalidInput,
                "refusing to route over a family that is not a CIST family");
  }
}

std::vector<TreePath> Router::routes(const VertexId& u, const VertexId& v) const {
  if (u.dim() != family_.dimension() || v.dim() != family_.dimension()) {
    throw Error(ErrorKind::kInvalidInput,
                "route endpoints must be vertices of AQ_" +
                    std::to_string(family_.dimension()));
  }
  if (u == v) {
    throw Error(ErrorKind::kInvalidInput,
                "source and destination are the same vertex " + u.to_binary());
  }
  std::vector<TreePath> out;
  out.reserve(family_.size());
  for (const SpanningTree& t : family_.trees()) out.push_back(t.path(u, v));
  return out;
}

std::vector<TreePath> disjoint_routes(const CistFamily& family, const VertexId& u,
                                      const VertexId& v) {
  return Router(family).routes(u, v);
}

std::vector<std::pair<Label, Label>> PairSampler::draw(int n) const {
  check_dimension(n);
  const Label size = Label{1} << n;
  std::vector<std::pair<Label, Label>> pairs;
  if (exhaustive) {
    pairs.reserve(std::size_t{size} * (size - 1) / 2);
    for (Label u = 0; u < size; ++u) {
      for (Label v = u + 1; v < size; ++v) pairs.emplace_back(u, v);
    }
    return pairs;
  }
  if (size < 2) return pairs;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Label> pick(0, size - 1);
  pairs.reserve(count);
  while (pairs.size() < count) {
    const Label u = pick(rng);
    const Label v = pick(rng);
    if (u != v) pairs.emplace_back(u, v);
  }
  return pairs;
}

RouteSummary route_stats(const Router& router, const PairSampler& sampler) {
  const CistFamily& family = router.family();
  const int n = family.dimension();
  RouteSummary summary;
  summary.seed = sampler.seed;
  summary.exhaustive = sampler.exhaustive;
  summary.per_tree.resize(family.size());
  std::vector<double> totals(family.size(), 0.0);
  for (const auto& [u, v] : sampler.draw(n)) {
    ++summary.pairs;
    if (labels_adjacent(u, v)) ++summary.adjacent_pairs;
    for (std::size_t i = 0; i < family.size(); ++i) {
      const std::size_t length =
          family.tree(i).path(VertexId(u, n), VertexId(v, n)).length();
      summary.per_tree[i].max_length = std::max(summary.per_tree[i].max_length, length);
      totals[i] += static_cast<double>(length);
    }
  }
  if (summary.pairs > 0) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      summary.per_tree[i].mean_length = totals[i] / static_cast<double>(summary.pairs);
    }
  }
  return summary;
}

bool routes_disjoint(const std::vector<TreePath>& routes) {
  for (std::size_t i = 0; i < routes.size(); ++i) {
    const auto& a = routes[i].vertices;
    for (std::size_t j = i + 1; j < routes.size(); ++j) {
      const auto& b = routes[j].vertices;
      if (a.front() != b.front() || a.back() != b.back()) return false;
      for (std::size_t x = 1; x + 1 < b.size(); ++x) {
        if (std::find(a.begin(), a.end(), b[x]) != a.end()) return false;
      }
      for (std::size_t x = 0; x + 1 < a.size(); ++x) {
        const Edge ea = make_edge(a[x], a[x + 1]);
        for (std::size_t y = 0; y + 1 < b.size(); ++y) {
          if (make_edge(b[y], b[y + 1]) == ea) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace aqcist
