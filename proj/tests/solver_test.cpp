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

#include "labyrinth/solver.hpp"

#include <set>

#include "gtest/gtest.h"
#include "labyrinth/config_io.hpp"
#include "labyrinth/error.hpp"
#include "test_support.hpp"

namespace labyrinth {
namespace {

LabyrinthGraph listing_graph() { return parse(testing::kNavigationListing).graph; }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(AllPathsTest, OpenTwoByTwoHasTwoPaths) {
  const auto paths = all_paths(LabyrinthGraph::open_grid({2, 2}), {1, 0}, {0, 1});
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(paths[0], (Path{{1, 0}, {0, 0}, {0, 1}}));
  EXPECT_EQ(paths[1], (Path{{1, 0}, {1, 1}, {0, 1}}));
}

TEST(AllPathsTest, OpenThreeByThreeHasTwelvePaths) {
  const LabyrinthGraph g = LabyrinthGraph::open_grid({3, 3});
  EXPECT_EQ(testing::brute_force_paths(g, {2, 0}, {0, 2}).size(), 12u);
  EXPECT_EQ(all_paths(g, {2, 0}, {0, 2}).size(), 12u);
}

TEST(AllPathsTest, ListingHasUniquePath) {
  const auto paths = all_paths(listing_graph(), {2, 0}, {0, 2});
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0], (Path{{2, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 2}}));
}

TEST(AllPathsTest, MatchesBruteForce) {
  for (int w = 2; w <= 4; ++w) {
    for (int h = 2; h <= 4; ++h) {
      for (Seed s = 0; s < 8; ++s) {
        LabyrinthGraph g = generate_perfect({w, h}, s);
        g = braid(g, walls_removed(g, s % 4 == 0 ? 0 : std::min<std::size_t>(s, g.walls().count())),
                  s + 1);
        const Position src{h - 1, 0};
        const Position dst{0, w - 1};
        const auto got = all_paths(g, src, dst);
        const std::set<Path> as_set(got.begin(), got.end());
        EXPECT_EQ(as_set.size(), got.size()) << "duplicate path";
        EXPECT_EQ(as_set, testing::brute_force_paths(g, src, dst));
      }
    }
  }
}

TEST(AllPathsTest, OrderIsDepthFirstUpDownRightLeft) {
  const auto paths = all_paths(LabyrinthGraph::open_grid({3, 3}), {2, 0}, {0, 2});
  // Up first, then down beats right once the top row is reached.
  EXPECT_EQ(paths.front(),
            (Path{{2, 0}, {1, 0}, {0, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 2}, {1, 2}, {0, 2}}));
  EXPECT_TRUE(std::is_sorted(paths.begin(), paths.end(), [](const Path& a, const Path& b) {
    auto rank = [](const Path& p) {
      std::vector<int> r;
      for (Action a : path_actions(p)) {
        r.push_back(a == Action::kUp ? 0 : a == Action::kDown ? 1 : a == Action::kRight ? 2 : 3);
      }
      return r;
    };
    return rank(a) < rank(b);
  }));
}

TEST(AllPathsTest, Errors) {
  const LabyrinthGraph open = LabyrinthGraph::open_grid({2, 2});
  EXPECT_EQ(code_of([&] { all_paths(open, {0, 0}, {0, 0}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { all_paths(open, {0, 0}, {5, 5}); }), ErrorCode::kInvalidArgument);
  const LabyrinthGraph cut = open.with_wall({0, 0}, {0, 1}, true).with_wall({0, 0}, {1, 0}, true);
  EXPECT_EQ(code_of([&] { all_paths(cut, {0, 0}, {1, 1}); }), ErrorCode::kNoPath);
  EXPECT_EQ(code_of([&] { all_paths(LabyrinthGraph::open_grid({4, 4}), {3, 0}, {0, 3}, 10); }),
            ErrorCode::kCapExceeded);
}

TEST(ShortestPathTest, Corridor) {
  const LabyrinthGraph g = generate_perfect({5, 1}, 0);
  EXPECT_EQ(path_actions(shortest_path(g, {0, 0}, {0, 4})).size(), 4u);
  EXPECT_EQ(path_actions(shortest_path(g, {0, 1}, {0, 2})).size(), 1u);
}

TEST(ShortestPathTest, Listing) {
  const Path p = shortest_path(listing_graph(), {2, 0}, {0, 2});
  EXPECT_EQ(path_actions(p),
            (std::vector<Action>{Action::kUp, Action::kRight, Action::kUp, Action::kRight}));
}

TEST(ShortestPathTest, TieBreakPrefersUp) {
  const Path p = shortest_path(LabyrinthGraph::open_grid({2, 2}), {1, 0}, {0, 1});
  EXPECT_EQ(p, (Path{{1, 0}, {0, 0}, {0, 1}}));
}

TEST(ShortestPathTest, LengthEqualsOracleDistance) {
  for (Seed s = 0; s < 40; ++s) {
    LabyrinthGraph g = generate_perfect({5, 4}, s);
    g = braid(g, walls_removed(g, s % 5), s);
    Rng rng(s);
    const Position a{static_cast<int>(rng.uniform(4)), static_cast<int>(rng.uniform(5))};
    const Position b{static_cast<int>(rng.uniform(4)), static_cast<int>(rng.uniform(5))};
    if (a == b) continue;
    const Path p = shortest_path(g, a, b);
    EXPECT_EQ(static_cast<int>(p.size()) - 1, testing::relaxed_distance(g, a, b));
    EXPECT_EQ(static_cast<int>(p.size()) - 1, distance_map(g, b)[a]);
    for (std::size_t i = 1; i < p.size(); ++i) {
      EXPECT_TRUE(testing::adjacent_open(g, p[i - 1], p[i]));
    }
  }
}

TEST(ShortestPathTest, BlockedTilesAreAvoided) {
  const LabyrinthGraph g = LabyrinthGraph::open_grid({3, 3});
  TileMask blocked(9, false);
  blocked[4] = true;
  blocked[3] = true;
  const Path p = shortest_path(g, {2, 0}, {0, 0}, &blocked);
  EXPECT_EQ(p.size(), 7u);
}

TEST(DistanceMapTest, Corridor) {
  const DistanceMap d = distance_map(generate_perfect({5, 1}, 0), {0, 4});
  EXPECT_EQ(d.values(), (std::vector<int>{4, 3, 2, 1, 0}));
}

TEST(DistanceMapTest, ListingStartIsFourAway) {
  const DistanceMap d = distance_map(listing_graph(), {0, 2});
  EXPECT_EQ((d[Position{0, 2}]), 0);
  EXPECT_EQ((d[Position{2, 0}]), 4);
  EXPECT_EQ(d.values(), testing::relaxed_distances(listing_graph(), {0, 2}));
}

TEST(DistanceMapTest, UnreachableSentinel) {
  const LabyrinthGraph g = LabyrinthGraph::open_grid({2, 1}).with_wall({0, 0}, {0, 1}, true);
  EXPECT_FALSE(distance_map(g, {0, 1}).reachable({0, 0}));
  EXPECT_EQ((distance_map(g, {0, 1})[Position{0, 0}]), DistanceMap::kUnreachable);
}

TEST(OptimalActionTest, Basics) {
  EXPECT_EQ(optimal_action(generate_perfect({5, 1}, 0), {0, 3}, {0, 4}), Action::kRight);
  EXPECT_EQ(optimal_action(LabyrinthGraph::open_grid({2, 2}), {1, 0}, {0, 1}), Action::kUp);
  EXPECT_EQ(code_of([] { optimal_action(LabyrinthGraph::open_grid({2, 2}), {1, 0}, {1, 0}); }),
            ErrorCode::kAtTarget);
}

TEST(OptimalActionTest, GreedyDescentReachesTarget) {
  for (Seed s = 0; s < 20; ++s) {
    LabyrinthGraph g = generate_perfect({6, 5}, s);
    g = braid(g, walls_removed(g, s % 7), s);
    const Position target{0, 5};
    const auto oracle = testing::relaxed_distances(g, target);
    for (int t = 0; t < 30; ++t) {
      Position p = g.position(t);
      const int expected = oracle[static_cast<std::size_t>(t)];
      int steps = 0;
      while (p != target) {
        p = *g.move(p, optimal_action(g, p, target));
        ++steps;
        ASSERT_LE(steps, 30);
      }
      EXPECT_EQ(steps, expected);
    }
  }
}

}  // namespace
}  // namespace labyrinth
