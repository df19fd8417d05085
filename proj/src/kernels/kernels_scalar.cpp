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

#include "aqcist/kernels.hpp"
#include "aqcist/topology.hpp"

namespace aqcist::kernels::scalar {

void adjacency_row(Label u, std::span<const Label> candidates,
                   std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    out[i] = labels_adjacent(u, candidates[i]) ? 1 : 0;
  }
}

std::size_t first_shared_internal(
    std::span<const std::span<const std::uint8_t>> degree_tables) {
  if (degree_tables.size() < 2) return kNotFound;
  const std::size_t length = degree_tables.front().size();
  for (std::size_t v = 0; v < length; ++v) {
    int internal = 0;
    for (const auto& table : degree_tables) {
      if (table[v] >= 2 && ++internal == 2) return v;
    }
  }
  return kNotFound;
}

std::size_t count_internal(std::span<const std::uint8_t> degrees) {
  return static_cast<std::size_t>(
      std::count_if(degrees.begin(), degrees.end(), [](std::uint8_t d) { return d >= 2; }));
}

}  // namespace aqcist::kernels::scalar
