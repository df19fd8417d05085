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

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "aqcist/vertex.hpp"

namespace aqcist {

/// Undirected edge between two raw labels, normalized so that lo < hi.
struct Edge {
  Label lo = 0;
  Label hi = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes endpoint order. Self-loops are representable here; validation
/// happens where edges enter a tree or a family.
constexpr Edge make_edge(Label a, Label b) noexcept {
  return a < b ? Edge{a, b} : Edge{b, a};
}

constexpr std::uint64_t edge_key(const Edge& e) noexcept {
  return (std::uint64_t{e.lo} << 32) | e.hi;
}

enum class EdgeType { kHypercube, kComplement };

/// How an edge of AQ_n arises from the closed-form adjacency rule. split_dim is
/// the 1-based bit position k where the labels start to differ.
struct EdgeKind {
  EdgeType type = EdgeType::kHypercube;
  int split_dim = 1;

  friend bool operator==(const EdgeKind&, const EdgeKind&) = default;
};

/// Closed-form adjacency on raw labels. Two labels are adjacent iff they differ
/// in exactly one bit, or agree on a (possibly empty) prefix and differ on every
/// remaining bit. Both tests depend only on a ^ b, so the dimension is implied
/// by the labels themselves.
constexpr bool labels_adjacent(Label a, Label b) noexcept {
  const Label d = a ^ b;
  if (d == 0) return false;
  return (d & (d - 1)) == 0 || (d & (d + 1)) == 0;
}

bool are_adjacent(const VertexId& u, const VertexId& v);

/// Sorted neighbor set, 2n-1 entries.
std::vector<VertexId> neighbors(const VertexId& u);

EdgeKind classify_edge(const VertexId& u, const VertexId& v);

/// Inverse of classify_edge: the neighbor of u reached through `kind`.
VertexId apply_edge_kind(const VertexId& u, const EdgeKind& kind);

struct GraphStats {
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  int degree = 0;

  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

GraphStats graph_stats(int n);

/// AQ_n with adjacency computed on demand. Holds no edge storage.
class AugmentedCube {
 public:
  explicit AugmentedCube(int n);

  int dimension() const noexcept { return n_; }
  std::uint64_t vertex_count() const noexcept { return std::uint64_t{1} << n_; }
  std::uint64_t edge_count() const noexcept { return edge_count_; }
  int degree() const noexcept { return 2 * n_ - 1; }

  bool contains(Label v) const noexcept { return v < vertex_count(); }
  bool adjacent(Label a, Label b) const noexcept {
    return contains(a) && contains(b) && labels_adjacent(a, b);
  }

  /// Sorted raw neighbor labels of v.
  std::vector<Label> neighbors(Label v) const;

  /// Every edge, sorted by (lo, hi). Capped at `max_n` to bound memory.
  std::vector<Edge> edges(int max_n = kDefaultBuildCap) const;

 private:
  int n_;
  std::uint64_t edge_count_;
};

/// Independent construction by repeated doubling: two prefixed copies of
/// AQ_{m-1} joined by the equal-suffix and complemented-suffix matchings.
/// Returned sorted by (lo, hi).
std::vector<Edge> build_recursive(int n, int max_n = kDefaultBuildCap);

}  // namespace aqcist
