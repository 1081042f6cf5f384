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

#ifndef LABYRINTH_GRID_GRAPH_HPP_
#define LABYRINTH_GRID_GRAPH_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "labyrinth/random.hpp"

namespace labyrinth {

struct Dims {
  int width = 1;
  int height = 1;

  int tiles() const noexcept { return width * height; }
  bool operator==(const Dims&) const = default;
};

/// Tile coordinate. Row 0 is the top row; the lower-left tile of a maze is
/// (height - 1, 0).
struct Position {
  int row = 0;
  int col = 0;

  auto operator<=>(const Position&) const = default;
};

inline int manhattan(Position a, Position b) noexcept {
  const int dr = a.row - b.row;
  const int dc = a.col - b.col;
  return (dr < 0 ? -dr : dr) + (dc < 0 ? -dc : dc);
}

/// Agent actions. The numeric encoding is part of the dataset format.
enum class Action : int { kUp = 0, kDown = 1, kRight = 2, kLeft = 3 };

/// Neighbor order used wherever a deterministic tie-break is needed.
inline constexpr std::array<Action, 4> kActionOrder = {
    Action::kUp, Action::kDown, Action::kRight, Action::kLeft};

inline Position step_toward(Position p, Action a) noexcept {
  switch (a) {
    case Action::kUp: return {p.row - 1, p.col};
    case Action::kDown: return {p.row + 1, p.col};
    case Action::kRight: return {p.row, p.col + 1};
    case Action::kLeft: return {p.row, p.col - 1};
  }
  return p;
}

const char* action_name(Action a) noexcept;

/// Per-tile boolean, indexed row-major. Used for blocked-tile overlays
/// (locked door, ice) during search.
using TileMask = std::vector<bool>;

/// Interior walls of a width x height grid.
///
/// Stored as two bit arrays: vertical walls separate (r, c) from (r, c + 1)
/// and are indexed r * (width - 1) + c; horizontal walls separate (r, c) from
/// (r + 1, c) and are indexed r * width + c. The outer border is always walled
/// and never stored.
class WallSet {
 public:
  WallSet() = default;
  explicit WallSet(Dims dims, bool filled = false);

  Dims dims() const noexcept { return dims_; }

  /// Wall between two orthogonally adjacent in-bounds tiles.
  bool between(Position a, Position b) const;
  void set(Position a, Position b, bool wall);

  bool vertical(int row, int col) const {
    return vertical_[static_cast<std::size_t>(row * (dims_.width - 1) + col)];
  }
  bool horizontal(int row, int col) const {
    return horizontal_[static_cast<std::size_t>(row * dims_.width + col)];
  }
  const std::vector<bool>& vertical_bits() const noexcept { return vertical_; }
  const std::vector<bool>& horizontal_bits() const noexcept {
    return horizontal_;
  }

  std::size_t count() const noexcept;

  bool operator==(const WallSet&) const = default;

 private:
  Dims dims_{};
  std::vector<bool> vertical_;
  std::vector<bool> horizontal_;
};

/// An unordered pair of adjacent tiles, first < second.
struct Adjacency {
  Position first;
  Position second;

  auto operator<=>(const Adjacency&) const = default;
};

/// All interior adjacencies of a grid, in row-major order of the first tile
/// (vertical-wall adjacency before horizontal for the same tile).
std::vector<Adjacency> interior_adjacencies(Dims dims);

/// The maze: tiles are nodes, open adjacencies are edges. Immutable.
class LabyrinthGraph {
 public:
  LabyrinthGraph() = default;
  LabyrinthGraph(Dims dims, WallSet walls);

  /// A grid with no interior walls.
  static LabyrinthGraph open_grid(Dims dims);

  Dims dims() const noexcept { return dims_; }
  int width() const noexcept { return dims_.width; }
  int height() const noexcept { return dims_.height; }
  const WallSet& walls() const noexcept { return walls_; }

  bool in_bounds(Position p) const noexcept {
    return p.row >= 0 && p.row < dims_.height && p.col >= 0 &&
           p.col < dims_.width;
  }
  int index(Position p) const noexcept { return p.row * dims_.width + p.col; }
  Position position(int index) const noexcept {
    return {index / dims_.width, index % dims_.width};
  }

  /// The tile reached by moving from p, or nullopt if the border or a wall
  /// blocks the move.
  std::optional<Position> move(Position p, Action a) const;

  /// Open neighbors in up, down, right, left order.
  std::vector<Position> neighbors(Position p) const;

  bool is_connected() const;
  std::size_t open_adjacency_count() const;

  LabyrinthGraph with_wall(Position a, Position b, bool wall) const;

  bool operator==(const LabyrinthGraph&) const = default;

 private:
  Dims dims_{};
  WallSet walls_;
};

enum class MazeAlgorithm {
  kWilson,       // uniform over all spanning trees
  kBacktracker,  // randomized DFS; reaches only a subset of the trees
};

std::string_view algorithm_name(MazeAlgorithm a);
MazeAlgorithm parse_algorithm(std::string_view name);

/// Perfect maze driven by Rng(seed). Wilson's algorithm samples a uniform
/// spanning tree by loop-erased random walks; the backtracker carves with a
/// randomized depth-first search.
LabyrinthGraph generate_perfect(Dims dims, Seed seed,
                                MazeAlgorithm algorithm = MazeAlgorithm::kWilson);

using GraphPredicate = std::function<bool(const LabyrinthGraph&)>;

/// Removes interior walls one at a time, in an order shuffled by Rng(seed),
/// until `done` holds. Throws kUnsatisfiable when the walls run out first.
LabyrinthGraph braid(const LabyrinthGraph& graph, const GraphPredicate& done,
                     Seed seed);

/// Stopping condition "at least `count` simple paths from source to target".
GraphPredicate at_least_paths(Position source, Position target,
                              std::size_t count);

/// Stopping condition "at least `count` walls removed relative to `graph`".
GraphPredicate walls_removed(const LabyrinthGraph& graph, std::size_t count);

}  // namespace labyrinth

#endif  // LABYRINTH_GRID_GRAPH_HPP_
