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

#include "labyrinth/env.hpp"

#include <string>

#include "labyrinth/config_io.hpp"
#include "labyrinth/error.hpp"
#include "labyrinth/observe.hpp"

namespace labyrinth {

int default_step_limit(Dims dims) { return 40 * dims.width * dims.height; }

int optimal_episode_length(const LabyrinthGraph& graph, const TaskSpec& task) {
  switch (task.setting) {
    case Setting::kNavigation:
    case Setting::kOccluded:
      return distance_map(graph, task.goal)[task.start];
    case Setting::kIce: {
      const TileMask ice = mask_of(graph.dims(), task.ice);
      return distance_map(graph, task.goal, &ice)[task.start];
    }
    case Setting::kKeyDoor: {
      const TileMask door = mask_of(graph.dims(), {*task.door});
      const int to_key = distance_map(graph, *task.key, &door)[task.start];
      const int to_goal = distance_map(graph, task.goal)[*task.key];
      return to_key + to_goal;
    }
  }
  return 0;
}

EnvConfig make_env_config(LabyrinthGraph graph, TaskSpec task,
                          std::optional<int> step_limit) {
  validate_task(graph, task);
  EnvConfig config;
  config.shortest_len = optimal_episode_length(graph, task);
  config.step_limit = step_limit.value_or(default_step_limit(graph.dims()));
  if (config.step_limit < config.shortest_len) {
    throw Error(ErrorCode::kInvalidArgument,
                "step limit " + std::to_string(config.step_limit) +
                    " is below the optimal episode length " +
                    std::to_string(config.shortest_len));
  }
  config.canonical = canonical_text(graph, task);
  config.graph = std::move(graph);
  config.task = std::move(task);
  return config;
}

EnvState initial_state(const EnvConfig& config) {
  EnvState s;
  s.agent = config.task.start;
  return s;
}

double step_penalty(Dims dims) { return 0.1 / (dims.width * dims.height); }

double reward_of(const EnvConfig& config, bool reached_goal) {
  const double p = step_penalty(config.dims());
  if (!reached_goal) return -p;
  return 1.0 + (config.shortest_len - 1) * p;
}

Transition transition(const EnvConfig& config, const EnvState& state,
                      Action action) {
  if (state.done()) {
    throw Error(ErrorCode::kEpisodeOver, "step called after the episode ended");
  }
  const TaskSpec& task = config.task;
  const bool key_door = task.setting == Setting::kKeyDoor;

  Transition t{state, 0.0};
  EnvState& s = t.next;
  ++s.steps_taken;
  if (auto target = config.graph.move(s.agent, action)) {
    const bool locked = key_door && !s.has_key && *target == *task.door;
    if (!locked) s.agent = *target;
  }
  if (key_door && s.agent == *task.key) s.has_key = true;

  if (task.setting == Setting::kIce && task.is_ice(s.agent)) {
    s.terminated = true;
    s.fell_through_ice = true;
    t.reward = reward_of(config, false);
  } else if (s.agent == task.goal && (!key_door || s.has_key)) {
    s.terminated = true;
    s.reached_goal = true;
    t.reward = reward_of(config, true);
  } else {
    t.reward = reward_of(config, false);
  }
  if (!s.terminated && s.steps_taken >= config.step_limit) s.truncated = true;
  return t;
}

Environment::Environment(EnvConfig config, RenderOptions options)
    : config_(std::move(config)),
      options_(options),
      state_(initial_state(config_)) {}

StepInfo Environment::info() const {
  StepInfo i;
  i.config = config_.canonical;
  i.reached_goal = state_.reached_goal;
  i.fell_through_ice = state_.fell_through_ice;
  i.has_key = state_.has_key;
  i.steps_taken = state_.steps_taken;
  return i;
}

Observation Environment::observe() const {
  switch (options_.kind) {
    case ObservationKind::kImage:
      if (config_.task.setting == Setting::kOccluded) {
        return render_occluded(config_, state_, options_.size,
                               options_.view_radius);
      }
      return render_full(config_, state_, options_.size);
    case ObservationKind::kVector:
      return encode_vector(config_, state_);
    case ObservationKind::kNone:
      break;
  }
  return std::monostate{};
}

ResetResult Environment::reset() {
  state_ = initial_state(config_);
  return {observe(), info()};
}

StepOutcome Environment::step(Action action) {
  const Transition t = transition(config_, state_, action);
  state_ = t.next;
  return {observe(), t.reward, state_.terminated, state_.truncated, info()};
}

std::vector<Path> Environment::solve(SolveMode mode) const {
  if (mode == SolveMode::kShortest) {
    return {shortest_path(config_.graph, state_.agent, config_.task.goal)};
  }
  return all_paths(config_.graph, state_.agent, config_.task.goal);
}

void Environment::load(const std::filesystem::path& path, Seed seed) {
  config_ = labyrinth::load(path, seed);
  state_ = initial_state(config_);
}

void Environment::save(const std::filesystem::path& path) const {
  labyrinth::save(path, config_);
}

void Environment::change_start(Position start) {
  change_start_and_goal(start, config_.task.goal);
}

void Environment::change_start_and_goal(Position start, Position goal) {
  TaskSpec task = labyrinth::change_start_and_goal(config_.graph, config_.task,
                                                   start, goal);
  config_ = make_env_config(config_.graph, std::move(task), config_.step_limit);
  state_ = initial_state(config_);
}

double episode_return(const Trajectory& trajectory) {
  double total = 0.0;
  for (const TrajectoryStep& s : trajectory.steps) total += s.reward;
  return total;
}

bool success(const Trajectory& trajectory) {
  return trajectory.final_state.terminated &&
         trajectory.final_state.reached_goal;
}

}  // namespace labyrinth
