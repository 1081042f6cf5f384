// Copyright 2026 The Labyrinth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "labyrinth/grid_graph.hpp"

#include <map>
#include <set>

#include "gtest/gtest.h"
#include "labyrinth/config_io.hpp"
#include "labyrinth/error.hpp"
#include "labyrinth/solver.hpp"
#include "test_support.hpp"

namespace labyrinth {
namespace {

using testing::relaxed_distances;

std::size_t interior_count(Dims d) {
  return static_cast<std::size_t>(d.height * (d.width - 1) + d.width * (d.height - 1));
}

TEST(GridGraphTest, SingleTileHasNoWalls) {
  const LabyrinthGraph g = generate_perfect({1, 1}, 123);
  EXPECT_EQ(g.walls().count(), 0u);
  EXPECT_TRUE(g.is_connected());
}

TEST(GridGraphTest, CorridorHasNoWalls) {
  for (Seed s = 0; s < 10; ++s) {
    EXPECT_EQ(generate_perfect({5, 1}, s).walls().count(), 0u);
    EXPECT_EQ(generate_perfect({1, 5}, s).walls().count(), 0u);
  }
}

TEST(GridGraphTest, ThreeByThreeKeepsFourWalls) {
  const LabyrinthGraph g = generate_perfect({3, 3}, 7);
  EXPECT_EQ(interior_count({3, 3}), 12u);
  EXPECT_EQ(g.walls().count(), 4u);
}

TEST(GridGraphTest, PerfectMazesAreSpanningTrees) {
  for (int w = 1; w <= 7; ++w) {
    for (int h = 1; h <= 7; ++h) {
      for (Seed s = 0; s < 5; ++s) {
        const LabyrinthGraph g = generate_perfect({w, h}, s * 31 + 1);
        const auto dist = relaxed_distances(g, {0, 0});
        for (int d : dist) ASSERT_GE(d, 0) << w << "x" << h << " seed " << s;
        EXPECT_TRUE(g.is_connected());
        EXPECT_EQ(g.open_adjacency_count(), static_cast<std::size_t>(w * h - 1));
      }
    }
  }
}

TEST(GridGraphTest, GenerationIsDeterministic) {
  for (Seed s : {0ull, 1ull, 42ull, 0xDEADBEEFull}) {
    EXPECT_EQ(generate_perfect({6, 4}, s).walls(), generate_perfect({6, 4}, s).walls());
  }
  EXPECT_NE(generate_perfect({6, 6}, 1).walls(), generate_perfect({6, 6}, 2).walls());
}

std::map<std::string, int> tree_counts(Dims d, MazeAlgorithm algorithm, int draws) {
  std::map<std::string, int> seen;
  for (Seed s = 0; s < static_cast<Seed>(draws); ++s) {
    ++seen[canonical_text(generate_perfect(d, derive_seed(9, s), algorithm),
                          TaskSpec{Setting::kNavigation, {d.height - 1, 0}, {0, d.width - 1}, {}, {}, {}})];
  }
  return seen;
}

TEST(GridGraphTest, WilsonReachesEveryThreeByThreeTree) {
  const auto seen = tree_counts({3, 3}, MazeAlgorithm::kWilson, 20000);
  EXPECT_NEAR(static_cast<double>(seen.size()), testing::spanning_tree_count({3, 3}), 1e-6);
}

TEST(GridGraphTest, BacktrackerReachesOnlySomeTrees) {
  // Depth-first trees are a strict subset: 88 of the 192 on 3x3.
  EXPECT_EQ(tree_counts({3, 3}, MazeAlgorithm::kBacktracker, 20000).size(), 88u);
}

TEST(GridGraphTest, WilsonIsRoughlyUniform) {
  const auto seen = tree_counts({2, 2}, MazeAlgorithm::kWilson, 8000);
  ASSERT_EQ(seen.size(), 4u);
  for (const auto& [text, n] : seen) {
    EXPECT_NEAR(n, 2000, 200) << text;
  }
}

TEST(GridGraphTest, AlgorithmNames) {
  for (MazeAlgorithm a : {MazeAlgorithm::kWilson, MazeAlgorithm::kBacktracker}) {
    EXPECT_EQ(parse_algorithm(algorithm_name(a)), a);
  }
  EXPECT_THROW(parse_algorithm("prim"), Error);
}

TEST(GridGraphTest, MatrixTreeOracleCountsThreeByThree) {
  EXPECT_NEAR(testing::spanning_tree_count({3, 3}), 192.0, 1e-6);
  EXPECT_NEAR(testing::spanning_tree_count({2, 2}), 4.0, 1e-9);
}

TEST(GridGraphTest, MoveRespectsWallsAndBorder) {
  LabyrinthGraph g = LabyrinthGraph::open_grid({2, 2});
  EXPECT_FALSE(g.move({0, 0}, Action::kUp).has_value());
  EXPECT_FALSE(g.move({0, 0}, Action::kLeft).has_value());
  EXPECT_EQ(*g.move({0, 0}, Action::kRight), (Position{0, 1}));
  g = g.with_wall({0, 0}, {0, 1}, true);
  EXPECT_FALSE(g.move({0, 0}, Action::kRight).has_value());
  EXPECT_FALSE(g.move({0, 1}, Action::kLeft).has_value());
  EXPECT_EQ(g.neighbors({0, 0}), (std::vector<Position>{{1, 0}}));
}

TEST(GridGraphTest, NeighborOrderIsUpDownRightLeft) {
  const LabyrinthGraph g = LabyrinthGraph::open_grid({3, 3});
  EXPECT_EQ(g.neighbors({1, 1}),
            (std::vector<Position>{{0, 1}, {2, 1}, {1, 2}, {1, 0}}));
}

TEST(BraidTest, TwoByTwoBecomesCycle) {
  for (Seed s = 0; s < 20; ++s) {
    const LabyrinthGraph perfect = generate_perfect({2, 2}, s);
    ASSERT_EQ(perfect.walls().count(), 1u);
    const LabyrinthGraph cycle = braid(perfect, at_least_paths({1, 0}, {0, 1}, 2), s);
    EXPECT_EQ(cycle.walls().count(), 0u);
    EXPECT_EQ(testing::brute_force_paths(cycle, {1, 0}, {0, 1}).size(), 2u);
  }
}

TEST(BraidTest, SatisfiedGraphIsUnchanged) {
  const LabyrinthGraph open = LabyrinthGraph::open_grid({3, 3});
  EXPECT_EQ(braid(open, at_least_paths({2, 0}, {0, 2}, 2), 5), open);
  const LabyrinthGraph g = generate_perfect({4, 4}, 3);
  EXPECT_EQ(braid(g, walls_removed(g, 0), 5), g);
}

TEST(BraidTest, CorridorIsUnsatisfiable) {
  const LabyrinthGraph corridor = generate_perfect({3, 1}, 0);
  try {
    braid(corridor, at_least_paths({0, 0}, {0, 2}, 2), 1);
    FAIL() << "expected UNSATISFIABLE";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsatisfiable);
  }
}

TEST(BraidTest, OnlyRemovesWalls) {
  for (Seed s = 0; s < 30; ++s) {
    const LabyrinthGraph before = generate_perfect({5, 5}, s);
    const LabyrinthGraph after = braid(before, walls_removed(before, 1 + s % 6), s + 100);
    EXPECT_EQ(after.walls().count() + 1 + s % 6, before.walls().count());
    for (const Adjacency& a : interior_adjacencies({5, 5})) {
      if (after.walls().between(a.first, a.second)) {
        EXPECT_TRUE(before.walls().between(a.first, a.second));
      }
    }
    EXPECT_TRUE(after.is_connected());
  }
}

TEST(BraidTest, IsDeterministic) {
  const LabyrinthGraph g = generate_perfect({5, 5}, 11);
  EXPECT_EQ(braid(g, walls_removed(g, 4), 3), braid(g, walls_removed(g, 4), 3));
}

TEST(HashTest, CanonicalTextSeparatesWalls) {
  const TaskSpec task{Setting::kNavigation, {2, 0}, {0, 2}, {}, {}, {}};
  const LabyrinthGraph a = generate_perfect({3, 3}, 1);
  const Adjacency first = interior_adjacencies({3, 3}).front();
  const LabyrinthGraph b =
      a.with_wall(first.first, first.second, !a.walls().between(first.first, first.second));
  EXPECT_NE(canonical_text(a, task), canonical_text(b, task));
  EXPECT_NE(structure_hash(a, task), structure_hash(b, task));
  EXPECT_EQ(structure_hash(a, task), structure_hash(a, task));
}

TEST(HashTest, DigestIsShaOfCanonicalText) {
  const TaskSpec task{Setting::kNavigation, {2, 0}, {0, 2}, {}, {}, {}};
  const LabyrinthGraph g = generate_perfect({3, 3}, 4);
  EXPECT_EQ(structure_hash(g, task), sha256(canonical_text(g, task)));
  EXPECT_EQ(to_hex(sha256("abc")),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(RandomTest, DerivedSeedsDiffer) {
  std::set<Seed> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(5, i));
  EXPECT_EQ(seen.size(), 1000u);
}

TEST(RandomTest, UniformStaysInRange) {
  Rng rng(3);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) ++hits[rng.uniform(7)];
  for (int h : hits) EXPECT_GT(h, 800);
}

}  // namespace
}  // namespace labyrinth
