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

#include "labyrinth/tasks.hpp"

#include <algorithm>
#include <string>

#include "labyrinth/error.hpp"
#include "labyrinth/solver.hpp"

namespace labyrinth {

std::string_view setting_name(Setting s) {
  switch (s) {
    case Setting::kNavigation: return "navigation";
    case Setting::kOccluded: return "occluded";
    case Setting::kKeyDoor: return "key_door";
    case Setting::kIce: return "ice";
  }
  return "?";
}

Setting parse_setting(std::string_view name) {
  if (name == "navigation") return Setting::kNavigation;
  if (name == "occluded") return Setting::kOccluded;
  if (name == "key_door") return Setting::kKeyDoor;
  if (name == "ice") return Setting::kIce;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown setting '" + std::string(name) + "'");
}

std::string_view placement_name(PlacementKind k) {
  switch (k) {
    case PlacementKind::kUserDefined: return "user_defined";
    case PlacementKind::kBiased: return "biased";
    case PlacementKind::kUnbiased: return "unbiased";
  }
  return "?";
}

PlacementKind parse_placement(std::string_view name) {
  if (name == "user_defined") return PlacementKind::kUserDefined;
  if (name == "biased") return PlacementKind::kBiased;
  if (name == "unbiased") return PlacementKind::kUnbiased;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown placement mode '" + std::string(name) + "'");
}

bool TaskSpec::is_ice(Position p) const {
  return std::binary_search(ice.begin(), ice.end(), p);
}

int default_min_distance(Dims dims) {
  const int wanted = (dims.width + dims.height + 1) / 2;
  return std::min(wanted, (dims.width - 1) + (dims.height - 1));
}

std::pair<Position, Position> place_biased(Dims dims) {
  if (dims.tiles() < 2) {
    throw Error(ErrorCode::kDegenerate, "a 1x1 maze has no distinct goal");
  }
  return {{dims.height - 1, 0}, {0, dims.width - 1}};
}

std::pair<Position, Position> place_unbiased(Dims dims, int min_distance,
                                             Seed seed) {
  if (min_distance < 1) {
    throw Error(ErrorCode::kInvalidArgument, "min_distance must be >= 1");
  }
  if (min_distance > (dims.width - 1) + (dims.height - 1)) {
    throw Error(ErrorCode::kUnsatisfiable,
                "min_distance " + std::to_string(min_distance) +
                    " exceeds the largest distance in the grid");
  }
  std::vector<std::pair<Position, Position>> pairs;
  for (int a = 0; a < dims.tiles(); ++a) {
    for (int b = 0; b < dims.tiles(); ++b) {
      const Position pa{a / dims.width, a % dims.width};
      const Position pb{b / dims.width, b % dims.width};
      if (manhattan(pa, pb) >= min_distance) pairs.emplace_back(pa, pb);
    }
  }
  Rng rng(seed);
  return pairs[rng.uniform(pairs.size())];
}

TileMask mask_of(Dims dims, const std::vector<Position>& tiles) {
  TileMask mask(static_cast<std::size_t>(dims.tiles()), false);
  for (const Position& p : tiles) {
    mask[static_cast<std::size_t>(p.row * dims.width + p.col)] = true;
  }
  return mask;
}

std::vector<Position> path_union(const LabyrinthGraph& graph, Position start,
                                 Position goal) {
  std::vector<bool> seen(static_cast<std::size_t>(graph.dims().tiles()), false);
  for (const Path& path : all_paths(graph, start, goal)) {
    for (const Position& p : path) {
      seen[static_cast<std::size_t>(graph.index(p))] = true;
    }
  }
  std::vector<Position> out;
  for (int i = 0; i < graph.dims().tiles(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) out.push_back(graph.position(i));
  }
  return out;
}

std::vector<Position> key_candidates(const LabyrinthGraph& graph,
                                     Position start, Position goal,
                                     Position door) {
  const std::vector<Position> on_path = path_union(graph, start, goal);
  const TileMask door_mask = mask_of(graph.dims(), {door});
  // Distances are symmetric, so a map rooted at start gives reachability.
  const DistanceMap from_start = distance_map(graph, start, &door_mask);
  std::vector<Position> out;
  for (int i = 0; i < graph.dims().tiles(); ++i) {
    const Position p = graph.position(i);
    if (std::binary_search(on_path.begin(), on_path.end(), p)) continue;
    if (from_start.reachable(p)) out.push_back(p);
  }
  return out;
}

KeyDoor place_key_and_door(const LabyrinthGraph& graph, Position start,
                           Position goal, Seed seed) {
  const std::vector<Path> paths = all_paths(graph, start, goal);
  const auto n = static_cast<std::size_t>(graph.dims().tiles());
  std::vector<std::size_t> hits(n, 0);
  for (const Path& path : paths) {
    for (const Position& p : path) ++hits[static_cast<std::size_t>(graph.index(p))];
  }

  const DistanceMap from_start = distance_map(graph, start);
  std::optional<Position> door;
  for (std::size_t i = 0; i < n; ++i) {
    const Position p = graph.position(static_cast<int>(i));
    if (hits[i] != paths.size() || p == start || p == goal) continue;
    if (!door || from_start[p] > from_start[*door]) door = p;
  }
  if (!door) {
    throw Error(ErrorCode::kNoSharedTile,
                "start-goal paths share no tile besides start and goal");
  }

  const std::vector<Position> candidates =
      key_candidates(graph, start, goal, *door);
  if (candidates.empty()) {
    throw Error(ErrorCode::kNoKeyCandidate,
                "no off-path tile is reachable before the door");
  }
  Rng rng(seed);
  return {candidates[rng.uniform(candidates.size())], *door};
}

std::vector<Position> place_ice(const LabyrinthGraph& graph, Position start,
                                Position goal, Seed seed) {
  const std::vector<Path> paths = all_paths(graph, start, goal);
  if (paths.size() < 2) {
    throw Error(ErrorCode::kNeedsBraiding,
                "ice needs at least two start-goal paths");
  }
  const auto n = static_cast<std::size_t>(graph.dims().tiles());
  std::vector<std::size_t> hits(n, 0);
  for (const Path& path : paths) {
    for (const Position& p : path) ++hits[static_cast<std::size_t>(graph.index(p))];
  }

  std::vector<std::vector<Position>> unique_sets;
  for (const Path& path : paths) {
    std::vector<Position> unique;
    for (const Position& p : path) {
      if (hits[static_cast<std::size_t>(graph.index(p))] == 1) {
        unique.push_back(p);
      }
    }
    if (!unique.empty()) {
      std::sort(unique.begin(), unique.end());
      unique_sets.push_back(std::move(unique));
    }
  }
  if (unique_sets.empty()) {
    throw Error(ErrorCode::kNoUniqueTiles,
                "every path's tiles also lie on another path");
  }
  Rng rng(seed);
  return unique_sets[rng.uniform(unique_sets.size())];
}

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidPlacement, what);
}

}  // namespace

void validate_task(const LabyrinthGraph& graph, const TaskSpec& task) {
  const Dims dims = graph.dims();
  if (!graph.is_connected()) invalid("graph is not connected");
  if (!graph.in_bounds(task.start)) invalid("start out of bounds");
  if (!graph.in_bounds(task.goal)) invalid("goal out of bounds");
  if (task.start == task.goal) invalid("start equals goal");

  const bool key_door = task.setting == Setting::kKeyDoor;
  if (key_door != task.key.has_value() || key_door != task.door.has_value()) {
    invalid("key and door must be present exactly in the key_door setting");
  }
  if ((task.setting == Setting::kIce) == task.ice.empty()) {
    invalid("ice must be non-empty exactly in the ice setting");
  }

  if (key_door) {
    const Position key = *task.key;
    const Position door = *task.door;
    if (!graph.in_bounds(key) || !graph.in_bounds(door)) {
      invalid("key or door out of bounds");
    }
    if (door == task.start || door == task.goal) {
      invalid("door on start or goal");
    }
    if (key == task.start || key == task.goal || key == door) {
      invalid("key on start, goal or door");
    }
    const TileMask door_mask = mask_of(dims, {door});
    const DistanceMap closed = distance_map(graph, task.start, &door_mask);
    if (closed.reachable(task.goal)) {
      invalid("goal reachable without passing the door");
    }
    if (!closed.reachable(key)) {
      invalid("key unreachable while the door is closed");
    }
    const std::vector<Position> on_path = path_union(graph, task.start, task.goal);
    if (std::binary_search(on_path.begin(), on_path.end(), key)) {
      invalid("key lies on a start-goal path");
    }
  }

  if (!task.ice.empty()) {
    if (!std::is_sorted(task.ice.begin(), task.ice.end()) ||
        std::adjacent_find(task.ice.begin(), task.ice.end()) != task.ice.end()) {
      invalid("ice tiles must be sorted and unique");
    }
    for (const Position& p : task.ice) {
      if (!graph.in_bounds(p)) invalid("ice tile out of bounds");
    }
    if (task.is_ice(task.start) || task.is_ice(task.goal)) {
      invalid("start or goal on ice");
    }
    const TileMask ice_mask = mask_of(dims, task.ice);
    if (!distance_map(graph, task.goal, &ice_mask).reachable(task.start)) {
      invalid("no ice-free start-goal path");
    }
  }
}

TaskSpec change_start(const LabyrinthGraph& graph, const TaskSpec& task,
                      Position new_start) {
  return change_start_and_goal(graph, task, new_start, task.goal);
}

TaskSpec change_start_and_goal(const LabyrinthGraph& graph,
                               const TaskSpec& task, Position new_start,
                               Position new_goal) {
  TaskSpec out = task;
  out.start = new_start;
  out.goal = new_goal;
  validate_task(graph, out);
  return out;
}

}  // namespace labyrinth
