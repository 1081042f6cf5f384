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

#ifndef LABYRINTH_OBSERVE_HPP_
#define LABYRINTH_OBSERVE_HPP_

#include "labyrinth/env.hpp"
#include "labyrinth/image.hpp"

namespace labyrinth {

namespace palette {
inline constexpr Rgb kStart{255, 0, 0};
inline constexpr Rgb kGoal{0, 0, 255};
inline constexpr Rgb kAgent{0, 255, 0};
inline constexpr Rgb kWall{0, 0, 0};
inline constexpr Rgb kFloor{255, 255, 255};
inline constexpr Rgb kOccluded{128, 128, 128};
inline constexpr Rgb kKey{255, 255, 0};
inline constexpr Rgb kDoor{139, 69, 19};
inline constexpr Rgb kIce{173, 216, 230};
}  // namespace palette

inline constexpr int kDefaultImageSize = 600;

/// Square size x size RGB image of the whole maze.
///
/// Tile (r, c) covers rows [r * size / height, (r + 1) * size / height) and
/// columns [c * size / width, (c + 1) * size / width). Special tiles are
/// filled with their palette colour (the key as a centred square of 40% of
/// the tile), the agent is a green diamond spanning the central 60% of its
/// tile, and walls are black bands max(1, size / 200) pixels thick centred on
/// tile boundaries. A collected key and an unlocked
/// door are drawn as floor. Throws kSizeTooSmall when size < 8 * max(dims).
Image render_full(const LabyrinthGraph& graph, const TaskSpec& task,
                  const EnvState& state, int size = kDefaultImageSize);
Image render_full(const EnvConfig& config, const EnvState& state,
                  int size = kDefaultImageSize);

/// As render_full, but only tiles within Chebyshev distance `radius` of the
/// agent, the start and the goal are visible, together with the walls that
/// touch them. Everything else is palette::kOccluded.
Image render_occluded(const LabyrinthGraph& graph, const TaskSpec& task,
                      const EnvState& state, int size = kDefaultImageSize,
                      int radius = 1);
Image render_occluded(const EnvConfig& config, const EnvState& state,
                      int size = kDefaultImageSize, int radius = 1);

/// Layout:
///   [agent_row, agent_col, start_row, start_col, goal_row, goal_col]
///   ++ vertical wall bits, row-major, height * (width - 1)
///   ++ horizontal wall bits, row-major, (height - 1) * width
///   ++ key_door: [key_row, key_col, door_row, door_col, has_key]
///   ++ ice: ice bitmask, row-major, width * height
VectorObservation encode_vector(const LabyrinthGraph& graph,
                                const TaskSpec& task, const EnvState& state);
VectorObservation encode_vector(const EnvConfig& config, const EnvState& state);

int vector_length(Dims dims, Setting setting);

}  // namespace labyrinth

#endif  // LABYRINTH_OBSERVE_HPP_
