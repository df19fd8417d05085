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

#include "aqcist/verification.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "aqcist/base_families.hpp"
#include "aqcist/lifting.hpp"
#include "corruptions.hpp"
#include "oracles.hpp"

namespace aqcist {
namespace {

using testing::Corruption;

Label num(std::uint64_t number) { return VertexId::from_number(number, 5).bits(); }

CandidateFamily aq5() { return base_candidate(5); }

CheckStatus status_of(const VerificationReport& r, Condition c) {
  const Check* check = r.find(c);
  EXPECT_NE(check, nullptr) << to_string(c);
  return check ? check->status : CheckStatus::kSkipped;
}

// Independent definition check: for every pair and tree pair, the vertex sets
// of the two tree paths (from all-pairs distances) meet only in {u, v} and no
// edge is shared.
bool definition_holds(const CandidateFamily& f) {
  const std::size_t size = std::size_t{1} << f.n;
  std::vector<std::vector<std::vector<int>>> dist;
  std::vector<std::set<Edge>> edge_sets;
  for (const auto& tree : f.trees) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> raw;
    for (const Edge& e : tree) raw.emplace_back(e.lo, e.hi);
    dist.push_back(oracle::all_pairs_distances(size, raw));
    std::set<Edge> es;
    for (const Edge& e : tree) es.insert(make_edge(e.lo, e.hi));
    if (es.size() != size - 1 || tree.size() != size - 1) return false;
    edge_sets.push_back(std::move(es));
  }
  for (const auto& d : dist) {
    if (oracle::max_entry(d) >= static_cast<int>(size)) return false;  // disconnected
  }
  for (const auto& es : edge_sets) {
    for (const Edge& e : es) {
      if (!labels_adjacent(e.lo, e.hi)) return false;
    }
  }
  for (std::uint32_t u = 0; u < size; ++u) {
    for (std::uint32_t v = u + 1; v < size; ++v) {
      for (std::size_t i = 0; i < f.trees.size(); ++i) {
        const auto pi = oracle::path_vertex_set(dist[i], u, v);
        for (std::size_t j = i + 1; j < f.trees.size(); ++j) {
          const auto pj = oracle::path_vertex_set(dist[j], u, v);
          for (std::uint32_t x : pi) {
            if (x != u && x != v && pj.count(x)) return false;
          }
          // Internally disjoint paths can only share the edge uv itself.
          if (dist[i][u][v] == 1 && dist[j][u][v] == 1) return false;
        }
      }
    }
  }
  return true;
}

TEST(CharacterizationTest, Aq5Passes) {
  const auto r = verify_characterization(aq5());
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.n, 5);
  EXPECT_EQ(r.k, 4);
  EXPECT_EQ(r.first_failure(), nullptr);
  EXPECT_EQ(r.diameters, (std::vector<std::optional<int>>{8, 8, 6, 6}));
  EXPECT_EQ(r.internal_counts, (std::vector<std::optional<int>>{8, 8, 8, 8}));
  EXPECT_EQ(exit_code(r), 0);
}

TEST(CharacterizationTest, DuplicatedEdgeAcrossTrees) {
  auto f = aq5();
  f.trees[1].push_back({num(1), num(2)});
  const auto r = verify_characterization(f);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(exit_code(r), 1);
  const Check* c = r.find(Condition::kEdgeDisjoint);
  ASSERT_EQ(c->status, CheckStatus::kFail);
  EXPECT_EQ(c->witness->edge, (Edge{num(1), num(2)}));
  EXPECT_EQ(c->witness->trees, (std::vector<int>{0, 1}));
}

TEST(CharacterizationTest, IdenticalTrees) {
  auto f = aq5();
  f.trees = {f.trees[0], f.trees[0]};
  const auto r = verify_characterization(f);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(status_of(r, Condition::kEdgeDisjoint), CheckStatus::kFail);
  EXPECT_EQ(r.first_failure()->condition, Condition::kEdgeDisjoint);
}

TEST(CharacterizationTest, SharedInternalVertex) {
  // Make 17 internal in T_2 as well: it is a leaf of T_2 hanging from 21;
  // reattach leaf 19 of T_2 (hanging from 30) to 17 via the AQ edge 17-19.
  auto f = aq5();
  auto& t2 = f.trees[1];
  const Edge old = make_edge(num(19), num(30));
  const auto it = std::find_if(t2.begin(), t2.end(),
                               [&](const Edge& e) { return make_edge(e.lo, e.hi) == old; });
  ASSERT_NE(it, t2.end());
  ASSERT_TRUE(labels_adjacent(num(17), num(19)));
  *it = make_edge(num(17), num(19));
  // 17-19 is also a T_3 edge, so edge-disjointness fails too.
  const auto r = verify_characterization(f);
  EXPECT_FALSE(r.pass);
  const Check* c = r.find(Condition::kInternalOverlap);
  ASSERT_EQ(c->status, CheckStatus::kFail);
  EXPECT_EQ(c->witness->vertex, num(17));
  EXPECT_EQ(c->witness->trees, (std::vector<int>{0, 1}));
}

TEST(CharacterizationTest, EveryConditionIsReported) {
  const auto r = verify_characterization(aq5());
  std::vector<Condition> order;
  for (const Check& c : r.checks) order.push_back(c.condition);
  EXPECT_EQ(order, (std::vector<Condition>{Condition::kSpanning, Condition::kAcyclic,
                                           Condition::kSubgraph, Condition::kEdgeDisjoint,
                                           Condition::kInternalOverlap}));
}

TEST(BruteForceTest, BaseFamiliesPass) {
  for (int n = 3; n <= 5; ++n) {
    const auto r = verify_bruteforce(base_candidate(n));
    EXPECT_TRUE(r.pass) << n;
    EXPECT_EQ(status_of(r, Condition::kPathVertexIntersection), CheckStatus::kPass);
    EXPECT_EQ(status_of(r, Condition::kPathEdgeIntersection), CheckStatus::kPass);
  }
}

TEST(BruteForceTest, SharedEdgeOnPaths) {
  // Leaf 2 of T_4 hangs from 18; hang it from 1 instead, reusing T_1's edge 1-2.
  auto f = aq5();
  auto& t4 = f.trees[3];
  const Edge old = make_edge(num(2), num(18));
  auto it = std::find_if(t4.begin(), t4.end(),
                         [&](const Edge& e) { return make_edge(e.lo, e.hi) == old; });
  ASSERT_NE(it, t4.end());
  *it = make_edge(num(1), num(2));
  ASSERT_TRUE(verify_characterization(f).find(Condition::kEdgeDisjoint)->status ==
              CheckStatus::kFail);
  const auto r = verify_bruteforce(f);
  ASSERT_FALSE(r.pass);
  const Check* c = r.find(Condition::kPathEdgeIntersection);
  ASSERT_EQ(c->status, CheckStatus::kFail);
  EXPECT_EQ(c->witness->pair, (std::pair{num(1), num(2)}));
  EXPECT_EQ(c->witness->trees, (std::vector<int>{0, 3}));
}

TEST(BruteForceTest, PathWitnessReplays) {
  // Leaf moves keep every tree spanning, so the path checks run.
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 20; ++trial) {
    const auto f = testing::corrupt(aq5(), Corruption::kReattachLeaf, rng);
    const auto r = verify_bruteforce(f);
    const Check* c = r.find(Condition::kPathVertexIntersection);
    if (c->status != CheckStatus::kFail) continue;
    ++checked;
    const Witness& w = *c->witness;
    ASSERT_EQ(w.trees.size(), 2u);
    ASSERT_EQ(w.paths.size(), 2u);
    const auto [u, v] = *w.pair;
    const auto ti = SpanningTree::from_edges(5, f.trees[w.trees[0]]);
    const auto tj = SpanningTree::from_edges(5, f.trees[w.trees[1]]);
    EXPECT_EQ(ti.path(VertexId(u, 5), VertexId(v, 5)).vertices, w.paths[0]);
    EXPECT_EQ(tj.path(VertexId(u, 5), VertexId(v, 5)).vertices, w.paths[1]);
    const Label x = *w.vertex;
    EXPECT_NE(x, u);
    EXPECT_NE(x, v);
    EXPECT_NE(std::find(w.paths[0].begin(), w.paths[0].end(), x), w.paths[0].end());
    EXPECT_NE(std::find(w.paths[1].begin(), w.paths[1].end(), x), w.paths[1].end());
  }
  EXPECT_GE(checked, 5);
}

TEST(BruteForceTest, ThreadCountDoesNotChangeTheReport) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = testing::corrupt(aq5(), testing::random_corruption(rng), rng);
    const auto one = verify_bruteforce(f, {6, 1});
    const auto four = verify_bruteforce(f, {6, 4});
    const auto seven = verify_bruteforce(f, {6, 7});
    EXPECT_EQ(one.checks, four.checks);
    EXPECT_EQ(one.checks, seven.checks);
    EXPECT_EQ(verify_bruteforce(f, {6, 4}).checks, four.checks);
  }
}

TEST(BruteForceTest, Cap) {
  const auto f = construct_cists(7).to_candidate();
  try {
    verify_bruteforce(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnsupported);
    EXPECT_NE(std::string(e.what()).find("characterization"), std::string::npos);
  }
  EXPECT_TRUE(verify_bruteforce(f, {7, 0}).pass);
}

TEST(ModeAgreementTest, RandomCorruptionsMatchAndMatchDefinition) {
  std::mt19937_64 rng(2024);
  std::map<std::string, int> kinds;
  int failing = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Corruption kind = testing::random_corruption(rng);
    const auto f = testing::corrupt(aq5(), kind, rng);
    const bool by_characterization = verify_characterization(f).pass;
    const bool by_paths = verify_bruteforce(f).pass;
    ASSERT_EQ(by_characterization, by_paths) << "trial " << trial << " " << to_string(kind);
    if (trial < 40) ASSERT_EQ(by_characterization, definition_holds(f)) << "trial " << trial;
    ++kinds[to_string(kind)];
    failing += !by_characterization;
  }
  EXPECT_EQ(kinds.size(), 5u);
  EXPECT_GT(failing, 100);
}

TEST(ModeAgreementTest, Aq3Corruptions) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = testing::corrupt(base_candidate(3), testing::random_corruption(rng), rng);
    const bool by_characterization = verify_characterization(f).pass;
    ASSERT_EQ(by_characterization, verify_bruteforce(f).pass) << trial;
    ASSERT_EQ(by_characterization, definition_holds(f)) << trial;
  }
}

TEST(MonotoneCorruptionTest, DeletionAlwaysFailsSpanning) {
  for (int n = 3; n <= 5; ++n) {
    const auto base = base_candidate(n);
    for (std::size_t i = 0; i < base.trees.size(); ++i) {
      for (std::size_t x = 0; x < base.trees[i].size(); ++x) {
        auto f = base;
        f.trees[i].erase(f.trees[i].begin() + static_cast<std::ptrdiff_t>(x));
        const auto r = verify_characterization(f);
        ASSERT_FALSE(r.pass);
        ASSERT_EQ(status_of(r, Condition::kSpanning), CheckStatus::kFail);
        ASSERT_EQ(r.first_failure()->condition, Condition::kSpanning);
        ASSERT_EQ(r.find(Condition::kSpanning)->witness->trees, std::vector<int>{static_cast<int>(i)});
      }
    }
  }
}

TEST(MonotoneCorruptionTest, CycleClosingSwapFailsAcyclic) {
  // Replace an edge by a non-tree AQ edge whose endpoints lie on the same side
  // of the removed edge: the result has a cycle.
  const auto base = aq5();
  std::mt19937_64 rng(8);
  int tested = 0;
  for (int trial = 0; trial < 400 && tested < 60; ++trial) {
    const std::size_t i = rng() % 4;
    auto f = base;
    auto& edges = f.trees[i];
    const std::size_t x = rng() % edges.size();
    const Edge removed = edges[x];
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(x));
    const auto tree = SpanningTree::from_edges(5, base.trees[i]);
    // Component of removed.lo after deletion: vertices whose tree path to lo avoids hi.
    const auto d = tree.distances_from(removed.lo);
    const auto dh = tree.distances_from(removed.hi);
    const Label a = static_cast<Label>(rng() % 32);
    if (d[a] > dh[a]) continue;  // a on lo's side
    Label b = 32;
    for (Label w : AugmentedCube(5).neighbors(a)) {
      if (d[w] < dh[w] && !tree.contains_edge(make_edge(a, w))) {
        b = w;
        break;
      }
    }
    if (b == 32) continue;
    edges.push_back(make_edge(a, b));
    const auto r = verify_characterization(f);
    ASSERT_EQ(status_of(r, Condition::kAcyclic), CheckStatus::kFail);
    const Edge w = *r.find(Condition::kAcyclic)->witness->edge;
    EXPECT_TRUE(labels_adjacent(w.lo, w.hi));
    ++tested;
  }
  EXPECT_GE(tested, 30);
}

TEST(WitnessTest, StructuralWitnessesReplay) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = testing::corrupt(aq5(), testing::random_corruption(rng), rng);
    const auto r = verify_characterization(f);
    if (const Check* c = r.find(Condition::kEdgeDisjoint); c->status == CheckStatus::kFail) {
      const Edge e = *c->witness->edge;
      for (int t : c->witness->trees) {
        const auto& tree = f.trees[t];
        EXPECT_TRUE(std::any_of(tree.begin(), tree.end(),
                                [&](const Edge& x) { return make_edge(x.lo, x.hi) == e; }));
      }
    }
    if (const Check* c = r.find(Condition::kInternalOverlap); c->status == CheckStatus::kFail) {
      const Label v = *c->witness->vertex;
      EXPECT_GE(c->witness->trees.size(), 2u);
      for (int t : c->witness->trees) {
        int degree = 0;
        for (const Edge& x : f.trees[t]) degree += (x.lo == v) + (x.hi == v);
        EXPECT_GE(degree, 2);
      }
    }
    if (const Check* c = r.find(Condition::kSpanning); c->status == CheckStatus::kFail) {
      const Label v = *c->witness->vertex;
      const auto& tree = f.trees[c->witness->trees[0]];
      std::vector<std::pair<std::uint32_t, std::uint32_t>> raw;
      for (const Edge& x : tree) raw.emplace_back(x.lo, x.hi);
      const auto d = oracle::all_pairs_distances(32, raw);
      EXPECT_GE(d[0][v], 32) << "witness vertex is reachable from 0";
    }
  }
}

TEST(DeterminismTest, SameInputSameReport) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = testing::corrupt(aq5(), testing::random_corruption(rng), rng);
    const auto a = verify_family(f, VerifyMode::kBoth);
    // Reordering edges within a tree does not change the report.
    for (auto& tree : f.trees) std::reverse(tree.begin(), tree.end());
    const auto b = verify_family(f, VerifyMode::kBoth);
    EXPECT_EQ(a.checks, b.checks);
    EXPECT_EQ(a.pass, b.pass);
  }
}

TEST(VerifyFamilyTest, Modes) {
  const auto both = verify_family(base_family(5), VerifyMode::kBoth);
  EXPECT_TRUE(both.pass);
  EXPECT_EQ(both.mode, VerifyMode::kBoth);
  EXPECT_EQ(both.checks.size(), 7u);
  EXPECT_TRUE(verify_family(construct_cists(8), VerifyMode::kCharacterization).pass);
  EXPECT_EQ(default_mode(6), VerifyMode::kBoth);
  EXPECT_EQ(default_mode(7), VerifyMode::kCharacterization);
  EXPECT_EQ(parse_verify_mode("bruteforce"), VerifyMode::kBruteForce);
  EXPECT_FALSE(parse_verify_mode("fast"));
}

TEST(StructuralErrorTest, UninterpretableInput) {
  auto expect_structural = [](const CandidateFamily& f) {
    for (VerifyMode mode : {VerifyMode::kCharacterization, VerifyMode::kBruteForce,
                            VerifyMode::kBoth}) {
      try {
        verify_family(f, mode);
        ADD_FAILURE() << "expected a structural error";
      } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::kStructural);
      }
    }
  };
  CandidateFamily empty{5, {}, Provenance::kSearch};
  expect_structural(empty);
  auto out_of_range = aq5();
  out_of_range.trees[2].push_back({3, 32});
  expect_structural(out_of_range);
  auto loop = aq5();
  loop.trees[0][0] = {4, 4};
  expect_structural(loop);
  CandidateFamily bad_n{0, {{{0, 1}}}, Provenance::kSearch};
  expect_structural(bad_n);
}

}  // namespace
}  // namespace aqcist
