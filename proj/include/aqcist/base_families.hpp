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
#include <optional>

#include "aqcist/family.hpp"

namespace aqcist {

/// Hard-coded base families: four trees on AQ_5 (text tables), two on AQ_3 and
/// three on AQ_4 (decoded from the drawings). Every family is verified before
/// it is returned; if a drawn family ever failed, the search fallback would
/// supply one instead and mark it Provenance::kSearch.
CistFamily base_family(int n);

/// The transcribed edge lists, unvalidated.
CandidateFamily base_candidate(int n);

struct SearchOptions {
  /// Number of vertex-partition attempts.
  std::uint64_t budget = 10'000;
  std::uint64_t seed = 1;
};

/// Randomized search for k CISTs on AQ_n. Each attempt partitions the vertices
/// into k candidate internal sets (so every vertex is internal in at most one
/// tree by construction), spans each set with a tree of its induced subgraph,
/// and hangs every other vertex as a leaf via a matching of crossing edges.
/// Deterministic for a fixed seed. Returns nullopt when the budget runs out.
std::optional<CistFamily> search_family(int n, int k,
                                        const SearchOptions& options = {});

}  // namespace aqcist
