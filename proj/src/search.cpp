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

#include <algorithm>
#include <random>
#include <string>

#include "aqcist/base_families.hpp"
#include "aqcist/verification.hpp"

namespace aqcist {
namespace {

constexpr int kSearchMaxDimension = 8;

// Bipartite matching of vertices to incident crossing edges (Kuhn's
// augmenting paths). owner[e] is the vertex that claimed edge e.
class LeafMatcher {
 public:
  LeafMatcher(const std::vector<std::vector<std::size_t>>& incident,
              std::size_t edge_count)
      : incident_(incident), owner_(edge_count, kFree) {}

  bool match_all(const std::vector<Label>& order) {
    for (Label v : order) {
      visited_.assign(owner_.size(), false);
      if (!augment(v)) return false;
    }
    return true;
  }

  const std::vector<Label>& owner() const { return owner_; }

 private:
  static constexpr Label kFree = static_cast<Label>(-1);

  bool augment(Label v) {
    for (std::size_t e : incident_[v]) {
      if (visited_[e]) continue;
      visited_[e] = true;
      if (owner_[e] == kFree || augment(owner_[e])) {
        owner_[e] = v;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<std::size_t>>& incident_;
  std::vector<Label> owner_;
  std::vector<bool> visited_;
};

class PartitionSearch {
 public:
  PartitionSearch(int n, int k, std::uint64_t seed)
      : n_(n), k_(k), cube_(n), size_(cube_.vertex_count()), rng_(seed) {
    for (Label v = 0; v < size_; ++v) adjacency_.push_back(cube_.neighbors(v));
  }

  std::optional<CandidateFamily> attempt() {
    std::uniform_int_distribution<int> pick(0, k_ - 1);
    color_.resize(size_);
    for (Label v = 0; v < size_; ++v) color_[v] = pick(rng_);

    CandidateFamily family{n_, std::vector<std::vector<Edge>>(static_cast<std::size_t>(k_)),
                           Provenance::kSearch};
    for (int c = 0; c < k_; ++c) {
      if (!span_class(c, family.trees[static_cast<std::size_t>(c)])) return std::nullopt;
    }
    for (int i = 0; i < k_; ++i) {
      for (int j = i + 1; j < k_; ++j) {
        if (!hang_leaves(i, j, family)) return std::nullopt;
      }
    }
    return family;
  }

 private:
  // Random spanning tree of the subgraph induced by one color class.
  bool span_class(int c, std::vector<Edge>& out) {
    std::vector<Label> members;
    for (Label v = 0; v < size_; ++v) {
      if (color_[v] == c) members.push_back(v);
    }
    if (members.empty()) return false;
    std::vector<bool> seen(size_, false);
    std::vector<Label> frontier{members[rng_() % members.size()]};
    seen[frontier.front()] = true;
    std::size_t reached = 1;
    while (!frontier.empty()) {
      const std::size_t at = rng_() % frontier.size();
      const Label x = frontier[at];
      std::vector<Label> next;
      for (Label y : adjacency_[x]) {
        if (color_[y] == c && !seen[y]) next.push_back(y);
      }
      if (next.empty()) {
        frontier[at] = frontier.back();
        frontier.pop_back();
        continue;
      }
      const Label y = next[rng_() % next.size()];
      seen[y] = true;
      ++reached;
      out.push_back(make_edge(x, y));
      frontier.push_back(y);
    }
    return reached == members.size();
  }

  // Every vertex of class i needs a leaf edge into class j and vice versa;
  // each crossing edge can serve only one of the two trees.
  bool hang_leaves(int i, int j, CandidateFamily& family) {
    std::vector<Edge> crossing;
    std::vector<std::vector<std::size_t>> incident(size_);
    for (Label v = 0; v < size_; ++v) {
      if (color_[v] != i) continue;
      for (Label w : adjacency_[v]) {
        if (color_[w] == j) {
          incident[v].push_back(crossing.size());
          incident[w].push_back(crossing.size());
          crossing.push_back(make_edge(v, w));
        }
      }
    }
    std::vector<Label> order;
    for (Label v = 0; v < size_; ++v) {
      if (color_[v] == i || color_[v] == j) {
        std::shuffle(incident[v].begin(), incident[v].end(), rng_);
        order.push_back(v);
      }
    }
    std::shuffle(order.begin(), order.end(), rng_);
    LeafMatcher matcher(incident, crossing.size());
    if (!matcher.match_all(order)) return false;
    for (std::size_t e = 0; e < crossing.size(); ++e) {
      const Label owner = matcher.owner()[e];
      if (owner == static_cast<Label>(-1)) continue;
      // The owner is a leaf of the tree of the opposite class.
      const int tree = color_[owner] == i ? j : i;
      family.trees[static_cast<std::size_t>(tree)].push_back(crossing[e]);
    }
    return true;
  }

  int n_;
  int k_;
  AugmentedCube cube_;
  Label size_;
  std::mt19937_64 rng_;
  std::vector<std::vector<Label>> adjacency_;
  std::vector<int> color_;
};

}  // namespace

std::optional<CistFamily> search_family(int n, int k, const SearchOptions& options) {
  if (n < 2 || n > kSearchMaxDimension || k < 2 || k > 2 * n - 1) {
    throw Error(ErrorKind::kInvalidInput,
                "search supports 2 <= n <= " + std::to_string(kSearchMaxDimension) +
                    " and 2 <= k <= 2n-1");
  }
  PartitionSearch search(n, k, options.seed);
  for (std::uint64_t i = 0; i < options.budget; ++i) {
    auto candidate = search.attempt();
    if (!candidate) continue;
    if (verify_characterization(*candidate).pass) {
      return CistFamily::from_candidate(*candidate);
    }
  }
  return std::nullopt;
}

}  // namespace aqcist
