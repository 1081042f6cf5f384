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

#include <algorithm>
#include <array>
#include <string>

#include "labyrinth/error.hpp"
#include "labyrinth/solver.hpp"

namespace labyrinth {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kUnsatisfiable: return "UNSATISFIABLE";
    case ErrorCode::kNoPath: return "NO_PATH";
    case ErrorCode::kCapExceeded: return "CAP_EXCEEDED";
    case ErrorCode::kAtTarget: return "AT_TARGET";
    case ErrorCode::kDegenerate: return "DEGENERATE";
    case ErrorCode::kNoSharedTile: return "NO_SHARED_TILE";
    case ErrorCode::kNoKeyCandidate: return "NO_KEY_CANDIDATE";
    case ErrorCode::kNeedsBraiding: return "NEEDS_BRAIDING";
    case ErrorCode::kNoUniqueTiles: return "NO_UNIQUE_TILES";
    case ErrorCode::kInvalidPlacement: return "INVALID_PLACEMENT";
    case ErrorCode::kEpisodeOver: return "EPISODE_OVER";
    case ErrorCode::kSizeTooSmall: return "SIZE_TOO_SMALL";
    case ErrorCode::kBadHeader: return "BAD_HEADER";
    case ErrorCode::kBadGeometry: return "BAD_GEOMETRY";
    case ErrorCode::kBadTiles: return "BAD_TILES";
    case ErrorCode::kMutualExclusion: return "MUTUAL_EXCLUSION";
    case ErrorCode::kIo: return "IO";
    case ErrorCode::kExhausted: return "EXHAUSTED";
    case ErrorCode::kEmptyInput: return "EMPTY_INPUT";
    case ErrorCode::kBadDistribution: return "BAD_DISTRIBUTION";
  }
  return "UNKNOWN";
}

const char* action_name(Action a) noexcept {
  switch (a) {
    case Action::kUp: return "up";
    case Action::kDown: return "down";
    case Action::kRight: return "right";
    case Action::kLeft: return "left";
  }
  return "?";
}

WallSet::WallSet(Dims dims, bool filled)
    : dims_(dims),
      vertical_(static_cast<std::size_t>(dims.height * (dims.width - 1)),
                filled),
      horizontal_(static_cast<std::size_t>((dims.height - 1) * dims.width),
                  filled) {
  if (dims.width < 1 || dims.height < 1) {
    throw Error(ErrorCode::kInvalidArgument, "dims must be at least 1x1");
  }
}

bool WallSet::between(Position a, Position b) const {
  if (b < a) std::swap(a, b);
  if (a.row == b.row && b.col == a.col + 1) return vertical(a.row, a.col);
  if (a.col == b.col && b.row == a.row + 1) return horizontal(a.row, a.col);
  throw Error(ErrorCode::kInvalidArgument, "tiles are not adjacent");
}

void WallSet::set(Position a, Position b, bool wall) {
  if (b < a) std::swap(a, b);
  if (a.row < 0 || a.col < 0 || b.row >= dims_.height ||
      b.col >= dims_.width) {
    throw Error(ErrorCode::kInvalidArgument, "wall outside the grid");
  }
  if (a.row == b.row && b.col == a.col + 1) {
    vertical_[static_cast<std::size_t>(a.row * (dims_.width - 1) + a.col)] =
        wall;
  } else if (a.col == b.col && b.row == a.row + 1) {
    horizontal_[static_cast<std::size_t>(a.row * dims_.width + a.col)] = wall;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "tiles are not adjacent");
  }
}

std::size_t WallSet::count() const noexcept {
  return static_cast<std::size_t>(
      std::count(vertical_.begin(), vertical_.end(), true) +
      std::count(horizontal_.begin(), horizontal_.end(), true));
}

std::vector<Adjacency> interior_adjacencies(Dims dims) {
  std::vector<Adjacency> out;
  for (int r = 0; r < dims.height; ++r) {
    for (int c = 0; c < dims.width; ++c) {
      if (c + 1 < dims.width) out.push_back({{r, c}, {r, c + 1}});
      if (r + 1 < dims.height) out.push_back({{r, c}, {r + 1, c}});
    }
  }
  return out;
}

LabyrinthGraph::LabyrinthGraph(Dims dims, WallSet walls)
    : dims_(dims), walls_(std::move(walls)) {
  if (walls_.dims() != dims_) {
    throw Error(ErrorCode::kInvalidArgument, "wall set dims mismatch");
  }
}

LabyrinthGraph LabyrinthGraph::open_grid(Dims dims) {
  return LabyrinthGraph(dims, WallSet(dims, false));
}

std::optional<Position> LabyrinthGraph::move(Position p, Action a) const {
  const Position q = step_toward(p, a);
  if (!in_bounds(q) || walls_.between(p, q)) return std::nullopt;
  return q;
}

std::vector<Position> LabyrinthGraph::neighbors(Position p) const {
  std::vector<Position> out;
  out.reserve(4);
  for (Action a : kActionOrder) {
    if (auto q = move(p, a)) out.push_back(*q);
  }
  return out;
}

bool LabyrinthGraph::is_connected() const {
  const DistanceMap d = distance_map(*this, {0, 0});
  for (int i = 0; i < dims_.tiles(); ++i) {
    if (!d.reachable(position(i))) return false;
  }
  return true;
}

std::size_t LabyrinthGraph::open_adjacency_count() const {
  const auto total = static_cast<std::size_t>(
      dims_.height * (dims_.width - 1) + dims_.width * (dims_.height - 1));
  return total - walls_.count();
}

LabyrinthGraph LabyrinthGraph::with_wall(Position a, Position b,
                                         bool wall) const {
  WallSet w = walls_;
  w.set(a, b, wall);
  return LabyrinthGraph(dims_, std::move(w));
}

std::string_view algorithm_name(MazeAlgorithm a) {
  return a == MazeAlgorithm::kWilson ? "wilson" : "backtracker";
}

MazeAlgorithm parse_algorithm(std::string_view name) {
  if (name == "wilson") return MazeAlgorithm::kWilson;
  if (name == "backtracker") return MazeAlgorithm::kBacktracker;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown maze algorithm '" + std::string(name) + "'");
}

namespace {

LabyrinthGraph generate_wilson(Dims dims, Rng& rng) {
  WallSet walls(dims, true);
  const int n = dims.tiles();
  std::vector<bool> in_tree(static_cast<std::size_t>(n), false);
  // next[i]: tile the walk last left i for from tile i during the current walk.
  std::vector<int> next(static_cast<std::size_t>(n), -1);
  auto neighbors = [&](int i) {
    std::array<int, 4> out{};
    std::size_t count = 0;
    const Position p{i / dims.width, i % dims.width};
    for (Action a : kActionOrder) {
      const Position q = step_toward(p, a);
      if (q.row >= 0 && q.row < dims.height && q.col >= 0 && q.col < dims.width) {
        out[count++] = q.row * dims.width + q.col;
      }
    }
    return std::pair{out, count};
  };

  in_tree[rng.uniform(static_cast<std::uint64_t>(n))] = true;
  for (int start = 0; start < n; ++start) {
    if (in_tree[static_cast<std::size_t>(start)]) continue;
    // Random walk until the tree is hit; overwriting exits erases loops.
    for (int i = start; !in_tree[static_cast<std::size_t>(i)];) {
      const auto [opts, count] = neighbors(i);
      next[static_cast<std::size_t>(i)] = opts[rng.uniform(count)];
      i = next[static_cast<std::size_t>(i)];
    }
    for (int i = start; !in_tree[static_cast<std::size_t>(i)];) {
      const int j = next[static_cast<std::size_t>(i)];
      walls.set({i / dims.width, i % dims.width}, {j / dims.width, j % dims.width}, false);
      in_tree[static_cast<std::size_t>(i)] = true;
      i = j;
    }
  }
  return LabyrinthGraph(dims, std::move(walls));
}

LabyrinthGraph generate_backtracker(Dims dims, Rng& rng) {
  WallSet walls(dims, true);
  const int n = dims.tiles();
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  auto idx = [&](Position p) {
    return static_cast<std::size_t>(p.row * dims.width + p.col);
  };
  auto in_bounds = [&](Position p) {
    return p.row >= 0 && p.row < dims.height && p.col >= 0 &&
           p.col < dims.width;
  };

  const auto first = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(n)));
  std::vector<Position> stack{{first / dims.width, first % dims.width}};
  visited[idx(stack.back())] = true;
  while (!stack.empty()) {
    const Position cur = stack.back();
    std::array<Position, 4> options{};
    std::size_t count = 0;
    for (Action a : kActionOrder) {
      const Position q = step_toward(cur, a);
      if (in_bounds(q) && !visited[idx(q)]) options[count++] = q;
    }
    if (count == 0) {
      stack.pop_back();
      continue;
    }
    const Position next = options[rng.uniform(count)];
    walls.set(cur, next, false);
    visited[idx(next)] = true;
    stack.push_back(next);
  }
  return LabyrinthGraph(dims, std::move(walls));
}

}  // namespace

LabyrinthGraph generate_perfect(Dims dims, Seed seed, MazeAlgorithm algorithm) {
  Rng rng(seed);
  return algorithm == MazeAlgorithm::kWilson ? generate_wilson(dims, rng)
                                             : generate_backtracker(dims, rng);
}

LabyrinthGraph braid(const LabyrinthGraph& graph, const GraphPredicate& done,
                     Seed seed) {
  LabyrinthGraph current = graph;
  if (done(current)) return current;

  std::vector<Adjacency> candidates;
  for (const Adjacency& adj : interior_adjacencies(graph.dims())) {
    if (graph.walls().between(adj.first, adj.second)) {
      candidates.push_back(adj);
    }
  }
  Rng rng(seed);
  rng.shuffle(std::span<Adjacency>(candidates));
  for (const Adjacency& adj : candidates) {
    current = current.with_wall(adj.first, adj.second, false);
    if (done(current)) return current;
  }
  throw Error(ErrorCode::kUnsatisfiable,
              "stopping condition does not hold even with every interior "
              "wall removed");
}

GraphPredicate at_least_paths(Position source, Position target,
                              std::size_t count) {
  return [=](const LabyrinthGraph& g) {
    return count_paths(g, source, target, count) >= count;
  };
}

GraphPredicate walls_removed(const LabyrinthGraph& graph, std::size_t count) {
  const std::size_t before = graph.walls().count();
  const std::size_t target = count >= before ? 0 : before - count;
  return [=](const LabyrinthGraph& g) { return g.walls().count() <= target; };
}

}  // namespace labyrinth
