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

#include "aqcist/base_families.hpp"

#include <array>
#include <string>

#include "aqcist/verification.hpp"

namespace aqcist {
namespace {

// Edge lists use 0-based values: vertex number k in the printed tables is the
// label with value k - 1, so the printed edge <1, 2> is {0, 1}.

// Four CISTs on AQ_5.
constexpr std::array<std::array<Edge, 31>, 4> kAq5Trees = {{
    {{
        {0, 1}, {0, 2}, {0, 4}, {0, 15}, {0, 16}, {3, 4}, {4, 6}, {4, 11},
        {4, 20}, {4, 27}, {5, 6}, {6, 7}, {6, 9}, {8, 24}, {10, 26}, {12, 15},
        {13, 15}, {14, 15}, {16, 17}, {16, 19}, {16, 23}, {16, 24}, {18, 26},
        {21, 26}, {22, 30}, {24, 26}, {25, 26}, {26, 30}, {28, 30}, {29, 30},
        {30, 31},
    }},
    {{
        {0, 3}, {1, 2}, {1, 3}, {1, 5}, {1, 9}, {3, 7}, {3, 11}, {3, 12},
        {3, 28}, {4, 7}, {6, 22}, {7, 15}, {7, 23}, {7, 24}, {8, 9}, {9, 10},
        {9, 14}, {9, 22}, {13, 29}, {16, 20}, {17, 22}, {18, 29}, {19, 20},
        {20, 22}, {20, 27}, {21, 22}, {22, 25}, {25, 29}, {25, 30}, {26, 29},
        {29, 31},
    }},
    {{
        {0, 8}, {1, 14}, {2, 13}, {3, 19}, {4, 12}, {5, 13}, {6, 14}, {7, 8},
        {8, 10}, {8, 11}, {8, 12}, {8, 15}, {9, 13}, {12, 13}, {12, 14},
        {12, 28}, {14, 17}, {14, 30}, {16, 18}, {18, 19}, {18, 21}, {18, 22},
        {19, 23}, {19, 28}, {20, 28}, {24, 28}, {25, 27}, {26, 27}, {27, 28},
        {27, 31}, {28, 29},
    }},
    {{
        {0, 31}, {1, 17}, {2, 3}, {2, 6}, {2, 10}, {4, 5}, {5, 7}, {5, 10},
        {5, 26}, {8, 23}, {9, 11}, {10, 11}, {10, 13}, {10, 14}, {10, 21},
        {11, 12}, {11, 15}, {11, 27}, {16, 31}, {17, 18}, {17, 19}, {17, 21},
        {17, 25}, {17, 30}, {20, 21}, {21, 23}, {21, 29}, {22, 23}, {23, 24},
        {23, 31}, {28, 31},
    }},
}};

// Two CISTs on AQ_3, decoded from the drawing.
constexpr std::array<std::array<Edge, 7>, 2> kAq3Trees = {{
    {{
        {0, 1}, {0, 2}, {0, 4}, {0, 7}, {3, 4}, {4, 5}, {4, 6},
    }},
    {{
        {0, 3}, {1, 3}, {2, 3}, {3, 7}, {4, 7}, {5, 7}, {6, 7},
    }},
}};

// Three CISTs on AQ_4, decoded from the drawing.
constexpr std::array<std::array<Edge, 15>, 3> kAq4Trees = {{
    {{
        {0, 8}, {1, 5}, {2, 5}, {3, 11}, {4, 5}, {4, 7}, {4, 12}, {5, 6},
        {5, 10}, {8, 11}, {8, 15}, {9, 11}, {10, 11}, {10, 13}, {10, 14},
    }},
    {{
        {0, 15}, {1, 2}, {1, 3}, {1, 9}, {1, 14}, {3, 4}, {3, 7}, {3, 12},
        {5, 7}, {6, 9}, {7, 8}, {7, 15}, {9, 10}, {11, 15}, {13, 15},
    }},
    {{
        {0, 2}, {1, 6}, {2, 3}, {2, 10}, {2, 13}, {4, 6}, {5, 13}, {6, 7},
        {6, 14}, {8, 12}, {9, 14}, {11, 12}, {12, 13}, {12, 14}, {14, 15},
    }},
}};

template <std::size_t K, std::size_t E>
CandidateFamily to_candidate(int n, const std::array<std::array<Edge, E>, K>& table,
                             Provenance provenance) {
  CandidateFamily out{n, {}, provenance};
  for (const auto& tree : table) out.trees.emplace_back(tree.begin(), tree.end());
  return out;
}

void check_base_dimension(int n) {
  if (n < 3 || n > 5) {
    throw Error(ErrorKind::kUnsupported,
                "no base family for AQ_" + std::to_string(n) +
                    "; base families exist for n = 3, 4, 5 (use construct_cists "
                    "for n >= 6)");
  }
}

}  // namespace

CandidateFamily base_candidate(int n) {
  check_base_dimension(n);
  switch (n) {
    case 3: return to_candidate(3, kAq3Trees, Provenance::kDrawing);
    case 4: return to_candidate(4, kAq4Trees, Provenance::kDrawing);
    default: return to_candidate(5, kAq5Trees, Provenance::kTable);
  }
}

CistFamily base_family(int n) {
  const CandidateFamily candidate = base_candidate(n);
  if (verify_characterization(candidate).pass) {
    return CistFamily::from_candidate(candidate);
  }
  if (n == 5) {
    throw Error(ErrorKind::kInternal, "embedded AQ_5 family failed verification");
  }
  auto found = search_family(n, n - 1);
  if (!found) {
    throw Error(ErrorKind::kInternal,
                "drawn family for AQ_" + std::to_string(n) +
                    " failed verification and search found no replacement");
  }
  return *std::move(found);
}

}  // namespace aqcist
