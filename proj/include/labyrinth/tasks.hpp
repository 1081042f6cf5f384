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

#ifndef LABYRINTH_TASKS_HPP_
#define LABYRINTH_TASKS_HPP_

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "labyrinth/grid_graph.hpp"
#include "labyrinth/random.hpp"

namespace labyrinth {

enum class Setting { kNavigation, kOccluded, kKeyDoor, kIce };

std::string_view setting_name(Setting s);
/// Accepts "navigation", "occluded", "key_door" and "ice".
Setting parse_setting(std::string_view name);

struct TaskSpec {
  Setting setting = Setting::kNavigation;
  Position start;
  Position goal;
  std::optional<Position> key;
  std::optional<Position> door;
  std::vector<Position> ice;  // sorted, unique

  bool is_ice(Position p) const;
  bool operator==(const TaskSpec&) const = default;
};

/// Biased: start lower-left, goal upper-right. Unbiased: random pair at a
/// minimum Manhattan distance. UserDefined: caller supplies both tiles.
enum class PlacementKind { kUserDefined, kBiased, kUnbiased };

struct PlacementMode {
  PlacementKind kind = PlacementKind::kBiased;
  int min_distance = 0;  // unbiased only; 0 selects the default
  Position start{};      // user-defined only
  Position goal{};       // user-defined only
};

std::string_view placement_name(PlacementKind k);
PlacementKind parse_placement(std::string_view name);

/// ceil((width + height) / 2), capped at the largest distance the grid has.
int default_min_distance(Dims dims);

std::pair<Position, Position> place_biased(Dims dims);
std::pair<Position, Position> place_unbiased(Dims dims, int min_distance,
                                             Seed seed);

struct KeyDoor {
  Position key;
  Position door;
};

/// Door: the tile shared by every start-goal path (start and goal excluded)
/// that lies farthest from start. Key: seeded-uniform choice among tiles on
/// no start-goal path that start can reach while the door is closed.
KeyDoor place_key_and_door(const LabyrinthGraph& graph, Position start,
                           Position goal, Seed seed);

/// Freezes the tiles unique to one randomly chosen start-goal path. Returns
/// them sorted.
std::vector<Position> place_ice(const LabyrinthGraph& graph, Position start,
                                Position goal, Seed seed);

/// Tiles on at least one simple start-goal path (row-major order).
std::vector<Position> path_union(const LabyrinthGraph& graph, Position start,
                                 Position goal);

/// Key candidates for a fixed door, in row-major order.
std::vector<Position> key_candidates(const LabyrinthGraph& graph,
                                     Position start, Position goal,
                                     Position door);

TileMask mask_of(Dims dims, const std::vector<Position>& tiles);

/// Checks every TaskSpec invariant against `graph`; throws kInvalidPlacement
/// naming the first one violated.
void validate_task(const LabyrinthGraph& graph, const TaskSpec& task);

TaskSpec change_start(const LabyrinthGraph& graph, const TaskSpec& task,
                      Position new_start);
TaskSpec change_start_and_goal(const LabyrinthGraph& graph,
                               const TaskSpec& task, Position new_start,
                               Position new_goal);

}  // namespace labyrinth

#endif  // LABYRINTH_TASKS_HPP_
