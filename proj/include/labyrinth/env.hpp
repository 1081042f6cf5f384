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

#ifndef LABYRINTH_ENV_HPP_
#define LABYRINTH_ENV_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "labyrinth/grid_graph.hpp"
#include "labyrinth/image.hpp"
#include "labyrinth/random.hpp"
#include "labyrinth/solver.hpp"
#include "labyrinth/tasks.hpp"

namespace labyrinth {

/// 40 * width * height. A run that never reaches the goal then collects a
/// return of exactly -4 on any grid size.
int default_step_limit(Dims dims);

/// Actions on an optimal episode. Key/door tasks count start -> key with the
/// door closed plus key -> goal with it open; ice tasks route around ice.
int optimal_episode_length(const LabyrinthGraph& graph, const TaskSpec& task);

struct EnvConfig {
  LabyrinthGraph graph;
  TaskSpec task;
  int step_limit = 0;
  int shortest_len = 0;
  std::string canonical;

  Dims dims() const noexcept { return graph.dims(); }
};

/// Validates the task and fills the derived fields.
EnvConfig make_env_config(LabyrinthGraph graph, TaskSpec task,
                          std::optional<int> step_limit = std::nullopt);

struct EnvState {
  Position agent;
  bool has_key = false;
  int steps_taken = 0;
  bool terminated = false;
  bool truncated = false;
  bool reached_goal = false;
  bool fell_through_ice = false;

  bool done() const noexcept { return terminated || truncated; }
  bool operator==(const EnvState&) const = default;
};

EnvState initial_state(const EnvConfig& config);

/// Per-step penalty 0.1 / (width * height).
double step_penalty(Dims dims);

/// -penalty off the goal; 1 + (shortest_len - 1) * penalty on arrival, which
/// makes an optimal episode sum to exactly 1.
double reward_of(const EnvConfig& config, bool reached_goal);

struct Transition {
  EnvState next;
  double reward = 0.0;
};

/// Pure step function. Moves are no-ops into walls, the border or a locked
/// door. Throws kEpisodeOver once the episode has ended.
Transition transition(const EnvConfig& config, const EnvState& state,
                      Action action);

enum class ObservationKind { kImage, kVector, kNone };

struct RenderOptions {
  ObservationKind kind = ObservationKind::kImage;
  int size = 600;
  int view_radius = 1;
};

using Observation = std::variant<std::monostate, Image, VectorObservation>;

struct StepInfo {
  std::string config;  // canonical text
  bool reached_goal = false;
  bool fell_through_ice = false;
  bool has_key = false;
  int steps_taken = 0;
};

struct ResetResult {
  Observation observation;
  StepInfo info;
};

struct StepOutcome {
  Observation observation;
  double reward = 0.0;
  bool terminated = false;
  bool truncated = false;
  StepInfo info;
};

enum class SolveMode { kAll, kShortest };

/// Single-owner stateful environment with a gym-style surface.
class Environment {
 public:
  explicit Environment(EnvConfig config, RenderOptions options = {});

  ResetResult reset();
  StepOutcome step(Action action);

  const EnvConfig& config() const noexcept { return config_; }
  const EnvState& state() const noexcept { return state_; }
  const RenderOptions& options() const noexcept { return options_; }

  Observation observe() const;
  std::vector<Path> solve(SolveMode mode) const;

  /// Replaces the whole configuration, setting included, and resets.
  void load(const std::filesystem::path& path, Seed seed = 0);
  void save(const std::filesystem::path& path) const;

  void change_start(Position start);
  void change_start_and_goal(Position start, Position goal);

 private:
  StepInfo info() const;

  EnvConfig config_;
  RenderOptions options_;
  EnvState state_;
};

struct TrajectoryStep {
  Position agent;  // state before the action
  bool has_key = false;
  Action action = Action::kUp;
  double reward = 0.0;
  bool episode_start = false;
};

/// One episode.
struct Trajectory {
  std::vector<TrajectoryStep> steps;
  EnvState final_state;
};

double episode_return(const Trajectory& trajectory);
bool success(const Trajectory& trajectory);

}  // namespace labyrinth

#endif  // LABYRINTH_ENV_HPP_
