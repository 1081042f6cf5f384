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

#ifndef LABYRINTH_SOLVER_HPP_
#define LABYRINTH_SOLVER_HPP_

#include <cstddef>
#include <vector>

#include "labyrinth/grid_graph.hpp"

namespace labyrinth {

/// Simple path, source first and target last.
using Path = std::vector<Position>;

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

/// Exact BFS distances (in actions) from every tile to one target.
class DistanceMap {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMap(Dims dims, Position target, std::vector<int> distances)
      : dims_(dims), target_(target), distances_(std::move(distances)) {}

  Dims dims() const noexcept { return dims_; }
  Position target() const noexcept { return target_; }
  int operator[](Position p) const {
    return distances_[static_cast<std::size_t>(p.row * dims_.width + p.col)];
  }
  bool reachable(Position p) const { return (*this)[p] != kUnreachable; }
  const std::vector<int>& values() const noexcept { return distances_; }

 private:
  Dims dims_;
  Position target_;
  std::vector<int> distances_;
};

/// Every simple path from source to target, each exactly once, in depth-first
/// order with neighbors expanded up, down, right, left.
///
/// Throws kNoPath when target is unreachable and kCapExceeded when more than
/// `cap` paths exist.
std::vector<Path> all_paths(const LabyrinthGraph& graph, Position source,
                            Position target, std::size_t cap = kDefaultPathCap);

/// Number of simple source-target paths, counting stops once `limit` is
/// reached.
std::size_t count_paths(const LabyrinthGraph& graph, Position source,
                        Position target, std::size_t limit);

/// The shortest path first reached by BFS from source (neighbor order up,
/// down, right, left). Tiles set in `blocked` are never entered.
Path shortest_path(const LabyrinthGraph& graph, Position source,
                   Position target, const TileMask* blocked = nullptr);

DistanceMap distance_map(const LabyrinthGraph& graph, Position target,
                         const TileMask* blocked = nullptr);

/// First action in up, down, right, left order that strictly decreases the
/// distance to the map's target.
Action optimal_action(const LabyrinthGraph& graph, const DistanceMap& distances,
                      Position pos);
Action optimal_action(const LabyrinthGraph& graph, Position pos,
                      Position target);

/// Actions that walk along consecutive path tiles.
std::vector<Action> path_actions(const Path& path);

}  // namespace labyrinth

#endif  // LABYRINTH_SOLVER_HPP_
