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

#ifndef LABYRINTH_DATAGEN_HPP_
#define LABYRINTH_DATAGEN_HPP_

#include <array>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "labyrinth/config_io.hpp"
#include "labyrinth/env.hpp"

namespace labyrinth {

inline constexpr int kDatasetFormatVersion = 1;
inline constexpr std::array<const char*, 3> kSplitNames = {"train", "eval",
                                                          "test"};

struct SplitCounts {
  int train = 0;
  int eval = 0;
  int test = 0;

  int operator[](std::size_t i) const { return i == 0 ? train : i == 1 ? eval : test; }
};

struct GenerateOptions {
  Dims dims{5, 5};
  SplitCounts counts;
  Setting setting = Setting::kNavigation;
  PlacementMode mode;
  Seed seed = 0;
  int braid = 0;  // extra walls removed after generation
  MazeAlgorithm algorithm = MazeAlgorithm::kWilson;
  int max_attempts = 1000;  // consecutive rejections per slot
};

/// One candidate environment from a per-item seed. Throws the placement
/// errors (kNoSharedTile, kNoKeyCandidate, kNoUniqueTiles, ...) when the
/// structure cannot host the setting.
EnvConfig generate_config(const GenerateOptions& options, Seed item_seed);

struct SplitEntry {
  EnvConfig config;
  Digest digest{};
  Seed seed = 0;
};

struct SplitSet {
  GenerateOptions options;
  std::array<std::vector<SplitEntry>, 3> splits;  // train, eval, test
};

/// Distinct structures across all three splits. Item seeds are
/// derive_seed(options.seed, k) for k = 0, 1, ...; a slot fails with
/// kExhausted after options.max_attempts consecutive rejections.
SplitSet generate_splits(const GenerateOptions& options);

/// Optimal action for the current sub-goal: the key while it is missing
/// (door closed), then the goal. Ice tiles are never entered.
Action expert_action(const EnvConfig& config, const EnvState& state);

using Policy = std::function<Action(const EnvConfig&, const EnvState&)>;

Policy expert_policy();
Policy constant_policy(Action action);
/// Uniform random actions from Rng(seed); the stream is shared by all
/// episodes the policy plays.
Policy random_policy(Seed seed);

/// Plays one episode from the start state until termination or truncation.
Trajectory rollout(const EnvConfig& config, const Policy& policy);
Trajectory expert_rollout(const EnvConfig& config);

struct EvalResult {
  double aer_mean = 0.0;
  double aer_std = 0.0;  // population
  double success_ratio = 0.0;
  int episodes = 0;
  std::vector<double> returns;
};

/// A policy that throws ends its episode as a failure with the return
/// accumulated so far.
EvalResult evaluate(const Policy& policy, std::span<const EnvConfig> configs,
                    int episodes_per_config = 1);

struct DatasetRecord {
  std::string obs;
  int action = 0;  // -1 on the terminal record of an episode
  double reward = 0.0;
  bool episode_start = false;
  std::string info;
};

struct DatasetOptions {
  int image_size = 600;
  bool write_images = true;
};

struct DatasetManifest {
  std::filesystem::path root;
  std::array<std::size_t, 3> records{};
  std::array<std::size_t, 3> episodes{};
};

/// Layout under out_dir:
///   metadata.json
///   train.jsonl, eval.jsonl, test.jsonl  (one DatasetRecord per line)
///   images/<split>/<episode>_<step>.png
/// Every episode is the expert rollout plus a terminal record for the goal
/// state carrying action -1 and the goal reward.
DatasetManifest write_dataset(const SplitSet& splits,
                              const std::filesystem::path& out_dir,
                              const DatasetOptions& options = {});

std::vector<DatasetRecord> read_split(const std::filesystem::path& jsonl);

/// Groups contiguous records into episodes using episode_start.
std::vector<std::vector<DatasetRecord>> episodes_of(
    const std::vector<DatasetRecord>& records);

/// Rebuilds the environment from the first record's info text.
EnvConfig config_of(const std::vector<DatasetRecord>& episode);

/// Replays the stored actions. Throws Error(kInvalidArgument) on the first
/// reward or terminal-state mismatch.
Trajectory replay_episode(const std::vector<DatasetRecord>& episode);

}  // namespace labyrinth

#endif  // LABYRINTH_DATAGEN_HPP_
