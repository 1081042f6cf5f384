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

#include <algorithm>

#include "gtest/gtest.h"
#include "labyrinth/config_io.hpp"
#include "labyrinth/datagen.hpp"
#include "labyrinth/error.hpp"
#include "test_support.hpp"

namespace labyrinth {
namespace {

EnvConfig listing_config(const char* text) {
  const ConfigDocument doc = parse(text);
  return make_env_config(doc.graph, task_from(doc));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(RewardTest, PenaltyValues) {
  EXPECT_DOUBLE_EQ(step_penalty({5, 5}), 0.004);
  EXPECT_DOUBLE_EQ(step_penalty({3, 3}), 0.1 / 9);
  const EnvConfig c = listing_config(testing::kNavigationListing);
  EXPECT_DOUBLE_EQ(reward_of(c, false), -0.1 / 9);
  EXPECT_DOUBLE_EQ(reward_of(c, true), 1 + 3 * 0.1 / 9);
  EXPECT_EQ(default_step_limit({5, 5}), 1000);
}

TEST(RewardTest, FiveByFiveOptimalEpisodeSumsToOne) {
  const TaskSpec task{Setting::kNavigation, {4, 0}, {0, 4}, {}, {}, {}};
  const EnvConfig c = make_env_config(LabyrinthGraph::open_grid({5, 5}), task);
  ASSERT_EQ(c.shortest_len, 8);
  EXPECT_NEAR(7 * reward_of(c, false), -0.028, 1e-15);
  EXPECT_NEAR(reward_of(c, true), 1.028, 1e-15);
  EXPECT_NEAR(episode_return(expert_rollout(c)), 1.0, 1e-12);
}

TEST(EnvTest, ListingExpertRollout) {
  const EnvConfig c = listing_config(testing::kNavigationListing);
  const Trajectory t = expert_rollout(c);
  const double p = 0.1 / 9;
  ASSERT_EQ(t.steps.size(), 4u);
  const std::vector<Action> expected{Action::kUp, Action::kRight, Action::kUp, Action::kRight};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(t.steps[i].action, expected[i]);
    EXPECT_DOUBLE_EQ(t.steps[i].reward, i < 3 ? -p : 1 + 3 * p);
    EXPECT_EQ(t.steps[i].episode_start, i == 0);
  }
  EXPECT_NEAR(episode_return(t), 1.0, 1e-12);
  EXPECT_TRUE(success(t));
}

TEST(EnvTest, ExpertReturnsOneInEverySetting) {
  for (Setting setting : {Setting::kNavigation, Setting::kOccluded, Setting::kKeyDoor, Setting::kIce}) {
    for (PlacementKind mode : {PlacementKind::kBiased, PlacementKind::kUnbiased}) {
      GenerateOptions o;
      o.dims = {5, 4};
      o.setting = setting;
      o.mode.kind = mode;
      int done = 0;
      for (Seed s = 0; done < 15; ++s) {
        std::optional<EnvConfig> c;
        try {
          c = generate_config(o, s);
        } catch (const Error&) {
          continue;
        }
        ++done;
        const Trajectory t = expert_rollout(*c);
        EXPECT_NEAR(episode_return(t), 1.0, 1e-9) << setting_name(setting);
        EXPECT_TRUE(success(t));
        EXPECT_EQ(static_cast<int>(t.steps.size()), c->shortest_len);
      }
    }
  }
}

TEST(EnvTest, ShortestLenMatchesOracle) {
  const EnvConfig kd = listing_config(testing::kKeyDoorListing);
  const int to_key = testing::relaxed_distance(kd.graph, {2, 0}, {2, 1}, {{0, 1}});
  const int to_goal = testing::relaxed_distance(kd.graph, {2, 1}, {0, 2});
  EXPECT_EQ(to_key, 5);
  EXPECT_EQ(to_goal, 5);
  EXPECT_EQ(kd.shortest_len, 10);

  const EnvConfig ice = listing_config(testing::kIceListing);
  EXPECT_EQ(ice.shortest_len, 4);
}

TEST(EnvTest, WallBumpCostsTime) {
  const EnvConfig c = listing_config(testing::kNavigationListing);
  const EnvState s0 = initial_state(c);
  const Transition t = transition(c, s0, Action::kRight);  // wall
  EXPECT_EQ(t.next.agent, s0.agent);
  EXPECT_EQ(t.next.steps_taken, 1);
  EXPECT_DOUBLE_EQ(t.reward, -0.1 / 9);
  const Transition border = transition(c, s0, Action::kDown);
  EXPECT_EQ(border.next.agent, s0.agent);
}

TEST(EnvTest, TruncationFloor) {
  for (Dims d : {Dims{3, 3}, Dims{4, 4}, Dims{5, 5}, Dims{6, 3}}) {
    GenerateOptions o;
    o.dims = d;
    const EnvConfig c = generate_config(o, 3);
    const Trajectory t = rollout(c, constant_policy(Action::kLeft));
    EXPECT_NEAR(episode_return(t), -4.0, 1e-9);
    EXPECT_FALSE(success(t));
    EXPECT_TRUE(t.final_state.truncated);
    EXPECT_FALSE(t.final_state.terminated);
    EXPECT_EQ(t.final_state.steps_taken, 40 * d.tiles());
  }
}

TEST(EnvTest, NoStepsAfterEpisodeEnds) {
  const EnvConfig c = listing_config(testing::kNavigationListing);
  EnvState s = initial_state(c);
  for (Action a : {Action::kUp, Action::kRight, Action::kUp, Action::kRight}) {
    s = transition(c, s, a).next;
  }
  EXPECT_TRUE(s.terminated);
  EXPECT_TRUE(s.reached_goal);
  EXPECT_EQ(code_of([&] { transition(c, s, Action::kUp); }), ErrorCode::kEpisodeOver);
}

TEST(EnvTest, DoorIsAWallUntilKey) {
  const EnvConfig c = listing_config(testing::kKeyDoorListing);
  EnvState s = initial_state(c);
  for (Action a : {Action::kUp, Action::kRight, Action::kUp}) s = transition(c, s, a).next;
  EXPECT_EQ(s.agent, (Position{1, 1}));  // door (0,1) refused the move
  // Fetch the key at (2,1) and come back through the door.
  for (Action a : {Action::kRight, Action::kDown, Action::kLeft}) s = transition(c, s, a).next;
  EXPECT_TRUE(s.has_key);
  for (Action a : {Action::kRight, Action::kUp, Action::kLeft, Action::kUp}) {
    s = transition(c, s, a).next;
  }
  EXPECT_EQ(s.agent, (Position{0, 1}));
  const Transition last = transition(c, s, Action::kRight);
  EXPECT_TRUE(last.next.reached_goal);
  EXPECT_DOUBLE_EQ(last.reward, reward_of(c, true));
}

TEST(EnvTest, KeyVisitedBeforeDoorOnSuccess) {
  GenerateOptions o;
  o.dims = {5, 5};
  o.setting = Setting::kKeyDoor;
  for (Seed s = 0; s < 30; ++s) {
    EnvConfig c;
    try {
      c = generate_config(o, s);
    } catch (const Error&) {
      continue;
    }
    for (const Policy& p : {expert_policy(), random_policy(s)}) {
      const Trajectory t = rollout(c, p);
      if (!success(t)) continue;
      std::vector<Position> visited;
      for (const auto& step : t.steps) visited.push_back(step.agent);
      visited.push_back(t.final_state.agent);
      const auto key = std::find(visited.begin(), visited.end(), *c.task.key);
      const auto door = std::find(visited.begin(), visited.end(), *c.task.door);
      EXPECT_LT(key, door);
    }
  }
}

TEST(EnvTest, IceBreaksWithOrdinaryPenalty) {
  const EnvConfig c = listing_config(testing::kIceListing);
  const Transition t = transition(c, initial_state(c), Action::kRight);
  EXPECT_EQ(t.next.agent, (Position{2, 1}));
  EXPECT_TRUE(t.next.terminated);
  EXPECT_TRUE(t.next.fell_through_ice);
  EXPECT_FALSE(t.next.reached_goal);
  EXPECT_DOUBLE_EQ(t.reward, -0.1 / 9);
}

TEST(EnvTest, SuboptimalSuccessStaysPositive) {
  const EnvConfig c = listing_config(testing::kNavigationListing);
  EnvState s = initial_state(c);
  double total = 0;
  for (int i = 0; i < 80; ++i) {  // bumps, still far below 1/p = 90
    const Transition t = transition(c, s, Action::kDown);
    total += t.reward;
    s = t.next;
  }
  while (!s.done()) {
    const Transition t = transition(c, s, expert_action(c, s));
    total += t.reward;
    s = t.next;
  }
  EXPECT_TRUE(s.reached_goal);
  EXPECT_GT(total, 0.0);
  EXPECT_NEAR(total, 1.0 - 80 * 0.1 / 9, 1e-12);
}

TEST(EnvTest, EmptyTrajectory) {
  Trajectory t;
  EXPECT_EQ(episode_return(t), 0.0);
  EXPECT_FALSE(success(t));
}

TEST(EnvTest, StepLimitBelowOptimumRejected) {
  const ConfigDocument doc = parse(testing::kNavigationListing);
  EXPECT_EQ(code_of([&] { make_env_config(doc.graph, task_from(doc), 3); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(make_env_config(doc.graph, task_from(doc), 4).step_limit, 4);
}

TEST(EnvironmentTest, ResetAndStep) {
  Environment env(listing_config(testing::kNavigationListing));
  const ResetResult r = env.reset();
  EXPECT_EQ(env.state().agent, (Position{2, 0}));
  ASSERT_TRUE(std::holds_alternative<Image>(r.observation));
  EXPECT_EQ(std::get<Image>(r.observation).width, 600);
  EXPECT_EQ(std::get<Image>(r.observation).height, 600);
  EXPECT_EQ(r.info.config, env.config().canonical);
  EXPECT_EQ(std::get<Image>(env.reset().observation), std::get<Image>(r.observation));

  const StepOutcome o = env.step(Action::kUp);
  EXPECT_FALSE(o.terminated);
  EXPECT_EQ(o.info.steps_taken, 1);
  EXPECT_NE(std::get<Image>(o.observation), std::get<Image>(r.observation));
}

TEST(EnvironmentTest, VectorAndNoneObservations) {
  Environment vec(listing_config(testing::kNavigationListing), {ObservationKind::kVector});
  EXPECT_TRUE(std::holds_alternative<VectorObservation>(vec.reset().observation));
  Environment none(listing_config(testing::kNavigationListing), {ObservationKind::kNone});
  EXPECT_TRUE(std::holds_alternative<std::monostate>(none.reset().observation));
}

TEST(EnvironmentTest, SolveFromCurrentPosition) {
  Environment env(listing_config(testing::kIceListing), {ObservationKind::kNone});
  EXPECT_EQ(env.solve(SolveMode::kAll).size(), 2u);
  EXPECT_EQ(env.solve(SolveMode::kShortest).front().size(), 5u);
}

TEST(EnvironmentTest, LoadOverwritesSetting) {
  const auto dir = testing::scratch_dir("env_load");
  write_text_file(dir / "kd.labyrinth", testing::kKeyDoorListing);
  Environment env(listing_config(testing::kIceListing), {ObservationKind::kNone});
  ASSERT_EQ(env.config().task.setting, Setting::kIce);
  env.step(Action::kUp);
  env.load(dir / "kd.labyrinth");
  EXPECT_EQ(env.config().task.setting, Setting::kKeyDoor);
  EXPECT_EQ(env.config().task.door, (Position{0, 1}));
  EXPECT_EQ(env.config().task.key, (Position{2, 1}));
  EXPECT_EQ(env.state().steps_taken, 0);

  env.save(dir / "copy.labyrinth");
  EXPECT_EQ(read_text_file(dir / "copy.labyrinth"), env.config().canonical);
  EXPECT_EQ(code_of([&] { env.load(dir / "missing.labyrinth"); }), ErrorCode::kIo);
  std::filesystem::remove_all(dir);
}

TEST(EnvironmentTest, ChangeStartKeepsLimit) {
  Environment env(listing_config(testing::kNavigationListing), {ObservationKind::kNone});
  const int limit = env.config().step_limit;
  env.change_start({0, 0});
  EXPECT_EQ(env.state().agent, (Position{0, 0}));
  EXPECT_EQ(env.config().step_limit, limit);
  EXPECT_EQ(env.config().shortest_len, 4);
  env.change_start_and_goal({0, 2}, {2, 0});
  EXPECT_EQ(env.config().task.goal, (Position{2, 0}));
  EXPECT_EQ(code_of([&] { env.change_start_and_goal({1, 1}, {1, 1}); }),
            ErrorCode::kInvalidPlacement);
}

}  // namespace
}  // namespace labyrinth
