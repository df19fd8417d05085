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

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "aqcist/io.hpp"
#include "aqcist/verification.hpp"

namespace aqcist {
namespace {

// Reads the numbered (1..32) edge lists kept alongside the fixtures.
std::vector<std::vector<Edge>> numbered_aq5() {
  std::ifstream in(std::string(AQCIST_FIXTURE_DIR) + "/aq5_numbered.txt");
  EXPECT_TRUE(in) << "missing fixture";
  std::vector<std::vector<Edge>> trees;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    std::string pair;
    std::vector<Edge> edges;
    while (words >> pair) {
      const auto dash = pair.find('-');
      const Label a = VertexId::from_number(std::stoull(pair.substr(0, dash)), 5).bits();
      const Label b = VertexId::from_number(std::stoull(pair.substr(dash + 1)), 5).bits();
      edges.push_back(make_edge(a, b));
    }
    std::sort(edges.begin(), edges.end());
    trees.push_back(std::move(edges));
  }
  return trees;
}

TEST(BaseCandidateTest, Aq5MatchesNumberedLists) {
  const CandidateFamily candidate = base_candidate(5);
  const auto expected = numbered_aq5();
  ASSERT_EQ(candidate.trees.size(), 4u);
  ASSERT_EQ(expected.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    auto edges = candidate.trees[i];
    for (auto& e : edges) e = make_edge(e.lo, e.hi);
    std::sort(edges.begin(), edges.end());
    EXPECT_EQ(edges, expected[i]) << "T" << i + 1;
    EXPECT_EQ(edges.size(), 31u);
  }
  EXPECT_EQ(candidate.provenance, Provenance::kTable);
}

TEST(BaseCandidateTest, Aq5EdgesAreDistinctAugmentedCubeEdges) {
  std::set<Edge> all;
  for (const auto& tree : base_candidate(5).trees) {
    for (const Edge& e : tree) {
      EXPECT_TRUE(labels_adjacent(e.lo, e.hi));
      all.insert(make_edge(e.lo, e.hi));
    }
  }
  EXPECT_EQ(all.size(), 124u);
}

TEST(BaseCandidateTest, NumberingOfDocumentedEdges) {
  // <5, 28> is 00100 - 11011, a complement edge at the first bit.
  const Edge e = make_edge(VertexId::from_number(5, 5).bits(),
                           VertexId::from_number(28, 5).bits());
  EXPECT_EQ(e, (Edge{0b00100, 0b11011}));
  const CandidateFamily aq5 = base_candidate(5);
  const auto& t1 = aq5.trees[0];
  EXPECT_NE(std::find(t1.begin(), t1.end(), e), t1.end());
  EXPECT_EQ(classify_edge(VertexId(e.lo, 5), VertexId(e.hi, 5)),
            (EdgeKind{EdgeType::kComplement, 1}));
  const auto& t4 = aq5.trees[3];
  EXPECT_NE(std::find(t4.begin(), t4.end(), (Edge{0, 31})), t4.end());
}

TEST(BaseFamilyTest, Aq5) {
  const CistFamily family = base_family(5);
  EXPECT_EQ(family.size(), 4u);
  EXPECT_EQ(family.diameters(), (std::vector<int>{8, 8, 6, 6}));
  EXPECT_EQ(family.provenance(), Provenance::kTable);
  EXPECT_TRUE(verify_family(family, VerifyMode::kBoth).pass);
}

TEST(BaseFamilyTest, SmallBases) {
  const CistFamily aq3 = base_family(3);
  EXPECT_EQ(aq3.size(), 2u);
  for (const auto& t : aq3.trees()) EXPECT_EQ(t.edges().size(), 7u);
  EXPECT_TRUE(verify_family(aq3, VerifyMode::kBoth).pass);

  const CistFamily aq4 = base_family(4);
  EXPECT_EQ(aq4.size(), 3u);
  for (const auto& t : aq4.trees()) EXPECT_EQ(t.edges().size(), 15u);
  EXPECT_TRUE(verify_family(aq4, VerifyMode::kBoth).pass);

  // The drawn families verify, so no search substitution happened.
  EXPECT_EQ(aq3.provenance(), Provenance::kDrawing);
  EXPECT_EQ(aq4.provenance(), Provenance::kDrawing);
}

TEST(BaseFamilyTest, UnsupportedDimensions) {
  for (int n : {1, 2, 6, 7}) {
    try {
      base_family(n);
      FAIL() << n;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kUnsupported);
      EXPECT_NE(std::string(e.what()).find("construct"), std::string::npos);
    }
  }
}

TEST(BaseFamilyTest, FixturesMatchEmbeddedFamilies) {
  for (int n = 3; n <= 5; ++n) {
    const auto path = std::string(AQCIST_FIXTURE_DIR) + "/aq" + std::to_string(n) + ".json";
    const CandidateFamily fixture = io::read_family_file(path);
    EXPECT_EQ(CistFamily::from_candidate(fixture), base_family(n)) << path;
  }
}

TEST(SearchTest, FindsVerifiedFamilies) {
  const auto aq3 = search_family(3, 2);
  ASSERT_TRUE(aq3);
  EXPECT_EQ(aq3->size(), 2u);
  EXPECT_EQ(aq3->provenance(), Provenance::kSearch);
  EXPECT_TRUE(verify_family(*aq3, VerifyMode::kBoth).pass);

  const auto aq4 = search_family(4, 3);
  ASSERT_TRUE(aq4);
  EXPECT_EQ(aq4->size(), 3u);
  EXPECT_TRUE(verify_family(*aq4, VerifyMode::kBoth).pass);
}

TEST(SearchTest, DeterministicForSeed) {
  const auto a = search_family(4, 3, {10'000, 42});
  const auto b = search_family(4, 3, {10'000, 42});
  ASSERT_TRUE(a && b);
  EXPECT_EQ(*a, *b);
}

TEST(SearchTest, ZeroBudget) {
  EXPECT_FALSE(search_family(3, 2, {0, 1}));
}

TEST(SearchTest, ArgumentChecks) {
  EXPECT_THROW(search_family(1, 2), Error);
  EXPECT_THROW(search_family(3, 1), Error);
  EXPECT_THROW(search_family(3, 6), Error);
}

}  // namespace
}  // namespace aqcist
