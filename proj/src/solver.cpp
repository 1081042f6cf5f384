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

#include <algorithm>
#include <deque>

#include "labyrinth/error.hpp"

namespace labyrinth {
namespace {

void check_endpoints(const LabyrinthGraph& graph, Position source,
                     Position target) {
  if (!graph.in_bounds(source) || !graph.in_bounds(target)) {
    throw Error(ErrorCode::kInvalidArgument, "endpoint out of bounds");
  }
  if (source == target) {
    throw Error(ErrorCode::kInvalidArgument, "source equals target");
  }
}

bool is_blocked(const LabyrinthGraph& graph, const TileMask* blocked,
                Position p) {
  return blocked != nullptr &&
         (*blocked)[static_cast<std::size_t>(graph.index(p))];
}

// Backtracking enumeration shared by all_paths and count_paths. `emit` returns
// false to stop the search.
template <typename Emit>
class PathSearch {
 public:
  PathSearch(const LabyrinthGraph& graph, Position target, Emit emit)
      : graph_(graph),
        target_(target),
        emit_(std::move(emit)),
        on_path_(static_cast<std::size_t>(graph.dims().tiles()), false) {}

  void run(Position source) {
    path_.push_back(source);
    on_path_[idx(source)] = true;
    expand(source);
  }

 private:
  std::size_t idx(Position p) const {
    return static_cast<std::size_t>(graph_.index(p));
  }

  // Returns false once the caller asked to stop.
  bool expand(Position cur) {
    for (Action a : kActionOrder) {
      const auto next = graph_.move(cur, a);
      if (!next || on_path_[idx(*next)]) continue;
      path_.push_back(*next);
      if (*next == target_) {
        const bool more = emit_(path_);
        path_.pop_back();
        if (!more) return false;
        continue;
      }
      on_path_[idx(*next)] = true;
      const bool more = expand(*next);
      on_path_[idx(*next)] = false;
      path_.pop_back();
      if (!more) return false;
    }
    return true;
  }

  const LabyrinthGraph& graph_;
  Position target_;
  Emit emit_;
  std::vector<bool> on_path_;
  Path path_;
};

}  // namespace

std::vector<Path> all_paths(const LabyrinthGraph& graph, Position source,
                            Position target, std::size_t cap) {
  check_endpoints(graph, source, target);
  if (!distance_map(graph, target).reachable(source)) {
    throw Error(ErrorCode::kNoPath, "target unreachable from source");
  }
  std::vector<Path> paths;
  bool exceeded = false;
  PathSearch search(graph, target, [&](const Path& p) {
    if (paths.size() == cap) {
      exceeded = true;
      return false;
    }
    paths.push_back(p);
    return true;
  });
  search.run(source);
  if (exceeded) {
    throw Error(ErrorCode::kCapExceeded,
                "more than " + std::to_string(cap) + " simple paths");
  }
  return paths;
}

std::size_t count_paths(const LabyrinthGraph& graph, Position source,
                        Position target, std::size_t limit) {
  check_endpoints(graph, source, target);
  std::size_t count = 0;
  if (limit == 0) return 0;
  PathSearch search(graph, target, [&](const Path&) {
    return ++count < limit;
  });
  search.run(source);
  return count;
}

DistanceMap distance_map(const LabyrinthGraph& graph, Position target,
                         const TileMask* blocked) {
  if (!graph.in_bounds(target)) {
    throw Error(ErrorCode::kInvalidArgument, "target out of bounds");
  }
  std::vector<int> dist(static_cast<std::size_t>(graph.dims().tiles()),
                        DistanceMap::kUnreachable);
  std::deque<Position> queue{target};
  dist[static_cast<std::size_t>(graph.index(target))] = 0;
  while (!queue.empty()) {
    const Position cur = queue.front();
    queue.pop_front();
    const int d = dist[static_cast<std::size_t>(graph.index(cur))];
    for (const Position& next : graph.neighbors(cur)) {
      auto& slot = dist[static_cast<std::size_t>(graph.index(next))];
      if (slot != DistanceMap::kUnreachable || is_blocked(graph, blocked, next)) {
        continue;
      }
      slot = d + 1;
      queue.push_back(next);
    }
  }
  return DistanceMap(graph.dims(), target, std::move(dist));
}

Path shortest_path(const LabyrinthGraph& graph, Position source,
                   Position target, const TileMask* blocked) {
  check_endpoints(graph, source, target);
  const auto n = static_cast<std::size_t>(graph.dims().tiles());
  std::vector<int> parent(n, -2);
  parent[static_cast<std::size_t>(graph.index(source))] = -1;
  std::deque<Position> queue{source};
  while (!queue.empty() && parent[static_cast<std::size_t>(graph.index(target))] == -2) {
    const Position cur = queue.front();
    queue.pop_front();
    for (const Position& next : graph.neighbors(cur)) {
      auto& slot = parent[static_cast<std::size_t>(graph.index(next))];
      if (slot != -2 || is_blocked(graph, blocked, next)) continue;
      slot = graph.index(cur);
      queue.push_back(next);
    }
  }
  if (parent[static_cast<std::size_t>(graph.index(target))] == -2) {
    throw Error(ErrorCode::kNoPath, "target unreachable from source");
  }
  Path path;
  for (int i = graph.index(target); i != -1;
       i = parent[static_cast<std::size_t>(i)]) {
    path.push_back(graph.position(i));
  }
  std::reverse(path.begin(), path.end());
  return path;
}

Action optimal_action(const LabyrinthGraph& graph, const DistanceMap& distances,
                      Position pos) {
  if (pos == distances.target()) {
    throw Error(ErrorCode::kAtTarget, "agent already at target");
  }
  const int d = distances[pos];
  if (d == DistanceMap::kUnreachable) {
    throw Error(ErrorCode::kNoPath, "target unreachable from position");
  }
  for (Action a : kActionOrder) {
    const auto next = graph.move(pos, a);
    if (next && distances[*next] == d - 1) return a;
  }
  throw Error(ErrorCode::kNoPath, "distance map inconsistent with graph");
}

Action optimal_action(const LabyrinthGraph& graph, Position pos,
                      Position target) {
  if (pos == target) {
    throw Error(ErrorCode::kAtTarget, "agent already at target");
  }
  return optimal_action(graph, distance_map(graph, target), pos);
}

std::vector<Action> path_actions(const Path& path) {
  std::vector<Action> actions;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const Position a = path[i - 1];
    const Position b = path[i];
    for (Action act : kActionOrder) {
      if (step_toward(a, act) == b) {
        actions.push_back(act);
        break;
      }
    }
  }
  return actions;
}

}  // namespace labyrinth
