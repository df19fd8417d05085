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

#include <utility>

#include "aqcist/family.hpp"
#include "aqcist/vertex.hpp"

namespace aqcist {

inline constexpr int kDefaultConstructCap = 14;

/// Joins the two copies of a tree at its center: (0c, 1c) in AQ_{n+1}.
/// Throws Error(kInvalidInput) if the tree has diameter < 2.
std::pair<VertexId, VertexId> connector_edge(const SpanningTree& tree);

SpanningTree lift_tree(const SpanningTree& tree);

struct LiftOptions {
  /// Permit lifting families on AQ_3 and AQ_4.
  bool allow_small_base = false;
};

/// Lifts every tree of a verified family one dimension up. The input is
/// re-verified with the characterization and rejected if it fails.
CistFamily lift_family(const CistFamily& family, const LiftOptions& options = {});

struct ConstructOptions {
  int max_n = kDefaultConstructCap;
};

/// n in {3,4,5}: the base family (n-1 trees). n >= 6: the AQ_5 family lifted
/// n-5 times (4 trees with diameters 2n-3, 2n-3, 2n-5, 2n-5).
CistFamily construct_cists(int n, const ConstructOptions& options = {});

}  // namespace aqcist
