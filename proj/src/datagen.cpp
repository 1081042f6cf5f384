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

#include "labyrinth/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>

#include "json.hpp"

#include "labyrinth/error.hpp"
#include "labyrinth/observe.hpp"

namespace labyrinth {

using json = nlohmann::json;

EnvConfig generate_config(const GenerateOptions& options, Seed item_seed) {
  const Dims dims = options.dims;
  LabyrinthGraph graph = generate_perfect(dims, derive_seed(item_seed, 0), options.algorithm);
  if (options.braid > 0) {
    graph = braid(graph,
                  walls_removed(graph, static_cast<std::size_t>(options.braid)),
                  derive_seed(item_seed, 1));
  }

  TaskSpec task;
  task.setting = options.setting;
  switch (options.mode.kind) {
    case PlacementKind::kBiased:
      std::tie(task.start, task.goal) = place_biased(dims);
      break;
    case PlacementKind::kUnbiased: {
      const int min_distance = options.mode.min_distance > 0
                                   ? options.mode.min_distance
                                   : default_min_distance(dims);
      std::tie(task.start, task.goal) =
          place_unbiased(dims, min_distance, derive_seed(item_seed, 2));
      break;
    }
    case PlacementKind::kUserDefined:
      task.start = options.mode.start;
      task.goal = options.mode.goal;
      break;
  }

  if (options.setting == Setting::kKeyDoor) {
    const KeyDoor kd =
        place_key_and_door(graph, task.start, task.goal, derive_seed(item_seed, 3));
    task.key = kd.key;
    task.door = kd.door;
  } else if (options.setting == Setting::kIce) {
    if (count_paths(graph, task.start, task.goal, 2) < 2) {
      graph = braid(graph, at_least_paths(task.start, task.goal, 2),
                    derive_seed(item_seed, 4));
    }
    task.ice = place_ice(graph, task.start, task.goal, derive_seed(item_seed, 3));
  }
  return make_env_config(std::move(graph), std::move(task));
}

namespace {

bool is_rejection(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnsatisfiable:
    case ErrorCode::kNoSharedTile:
    case ErrorCode::kNoKeyCandidate:
    case ErrorCode::kNeedsBraiding:
    case ErrorCode::kNoUniqueTiles:
    case ErrorCode::kCapExceeded:
    case ErrorCode::kInvalidPlacement:
      return true;
    default:
      return false;
  }
}

}  // namespace

SplitSet generate_splits(const GenerateOptions& options) {
  for (std::size_t s = 0; s < 3; ++s) {
    if (options.counts[s] < 0) {
      throw Error(ErrorCode::kInvalidArgument, "split counts must be >= 0");
    }
  }
  SplitSet out;
  out.options = options;

  // Digest -> canonical texts already taken; texts are compared on a digest
  // match so a hash collision can never merge two structures.
  std::map<Digest, std::vector<std::string>> taken;
  std::uint64_t next_item = 0;

  for (std::size_t s = 0; s < 3; ++s) {
    auto& split = out.splits[s];
    split.reserve(static_cast<std::size_t>(options.counts[s]));
    while (static_cast<int>(split.size()) < options.counts[s]) {
      int rejections = 0;
      while (true) {
        if (rejections >= options.max_attempts) {
          throw Error(ErrorCode::kExhausted,
                      "no new unique structure for " + std::string(kSplitNames[s]) +
                          " slot " + std::to_string(split.size()) + " after " +
                          std::to_string(options.max_attempts) + " attempts");
        }
        const Seed item_seed = derive_seed(options.seed, next_item++);
        std::optional<EnvConfig> config;
        try {
          config = generate_config(options, item_seed);
        } catch (const Error& e) {
          if (!is_rejection(e.code())) throw;
          ++rejections;
          continue;
        }
        const Digest digest = sha256(config->canonical);
        auto& texts = taken[digest];
        if (std::find(texts.begin(), texts.end(), config->canonical) != texts.end()) {
          ++rejections;
          continue;
        }
        texts.push_back(config->canonical);
        split.push_back({std::move(*config), digest, item_seed});
        break;
      }
    }
  }
  return out;
}

Action expert_action(const EnvConfig& config, const EnvState& state) {
  const TaskSpec& task = config.task;
  const Dims dims = config.dims();
  if (task.setting == Setting::kKeyDoor && !state.has_key) {
    const TileMask door = mask_of(dims, {*task.door});
    return optimal_action(config.graph, distance_map(config.graph, *task.key, &door),
                          state.agent);
  }
  if (task.setting == Setting::kIce) {
    const TileMask ice = mask_of(dims, task.ice);
    return optimal_action(config.graph, distance_map(config.graph, task.goal, &ice),
                          state.agent);
  }
  return optimal_action(config.graph, state.agent, task.goal);
}

Policy expert_policy() { return expert_action; }

Policy constant_policy(Action action) {
  return [action](const EnvConfig&, const EnvState&) { return action; };
}

Policy random_policy(Seed seed) {
  auto rng = std::make_shared<Rng>(seed);
  return [rng](const EnvConfig&, const EnvState&) {
    return static_cast<Action>(rng->uniform(4));
  };
}

Trajectory rollout(const EnvConfig& config, const Policy& policy) {
  Trajectory t;
  EnvState state = initial_state(config);
  while (!state.done()) {
    const Action a = policy(config, state);
    const Transition step = transition(config, state, a);
    t.steps.push_back({state.agent, state.has_key, a, step.reward, t.steps.empty()});
    state = step.next;
  }
  t.final_state = state;
  return t;
}

Trajectory expert_rollout(const EnvConfig& config) {
  return rollout(config, expert_policy());
}

EvalResult evaluate(const Policy& policy, std::span<const EnvConfig> configs,
                    int episodes_per_config) {
  if (configs.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no configurations to evaluate");
  }
  if (episodes_per_config < 1) {
    throw Error(ErrorCode::kInvalidArgument, "episodes_per_config must be >= 1");
  }
  EvalResult result;
  int successes = 0;
  for (const EnvConfig& config : configs) {
    for (int e = 0; e < episodes_per_config; ++e) {
      EnvState state = initial_state(config);
      double total = 0.0;
      try {
        while (!state.done()) {
          const Transition step = transition(config, state, policy(config, state));
          total += step.reward;
          state = step.next;
        }
      } catch (const std::exception&) {
        state.reached_goal = false;
      }
      if (state.reached_goal) ++successes;
      result.returns.push_back(total);
    }
  }
  result.episodes = static_cast<int>(result.returns.size());
  const double n = result.episodes;
  double sum = 0.0;
  for (double r : result.returns) sum += r;
  result.aer_mean = sum / n;
  double sq = 0.0;
  for (double r : result.returns) sq += (r - result.aer_mean) * (r - result.aer_mean);
  result.aer_std = std::sqrt(sq / n);
  result.success_ratio = successes / n;
  return result;
}

namespace {

void make_dirs(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIo, "cannot create '" + dir.string() + "': " + ec.message());
  }
}

Image observation_image(const EnvConfig& config, const EnvState& state, int size) {
  if (config.task.setting == Setting::kOccluded) {
    return render_occluded(config, state, size);
  }
  return render_full(config, state, size);
}

json record_json(const DatasetRecord& r) {
  return json{{"obs", r.obs},
              {"actions", r.action},
              {"rewards", r.reward},
              {"episode_starts", r.episode_start},
              {"info", r.info}};
}

}  // namespace

DatasetManifest write_dataset(const SplitSet& splits,
                              const std::filesystem::path& out_dir,
                              const DatasetOptions& options) {
  DatasetManifest manifest;
  manifest.root = out_dir;
  make_dirs(out_dir);

  for (std::size_t s = 0; s < 3; ++s) {
    const std::string name = kSplitNames[s];
    const std::filesystem::path image_dir = out_dir / "images" / name;
    if (options.write_images) make_dirs(image_dir);

    std::string lines;
    std::size_t episode = 0;
    for (const SplitEntry& entry : splits.splits[s]) {
      const EnvConfig& config = entry.config;
      const Trajectory t = expert_rollout(config);
      EnvState state = initial_state(config);
      auto emit = [&](std::size_t step, int action, double reward) {
        DatasetRecord r;
        const std::string file =
            std::to_string(episode) + "_" + std::to_string(step) + ".png";
        r.obs = "images/" + name + "/" + file;
        r.action = action;
        r.reward = reward;
        r.episode_start = step == 0;
        r.info = config.canonical;
        if (options.write_images) {
          write_png(image_dir / file, observation_image(config, state, options.image_size));
        }
        lines += record_json(r).dump();
        lines += '\n';
        ++manifest.records[s];
      };
      for (std::size_t i = 0; i < t.steps.size(); ++i) {
        emit(i, static_cast<int>(t.steps[i].action), t.steps[i].reward);
        state = transition(config, state, t.steps[i].action).next;
      }
      emit(t.steps.size(), -1, reward_of(config, true));
      ++episode;
    }
    manifest.episodes[s] = episode;
    write_text_file(out_dir / (name + ".jsonl"), lines);
  }

  const GenerateOptions& o = splits.options;
  json meta{
      {"format_version", kDatasetFormatVersion},
      {"width", o.dims.width},
      {"height", o.dims.height},
      {"setting", std::string(setting_name(o.setting))},
      {"mode", std::string(placement_name(o.mode.kind))},
      {"min_distance", o.mode.kind == PlacementKind::kUnbiased
                           ? (o.mode.min_distance > 0 ? o.mode.min_distance
                                                      : default_min_distance(o.dims))
                           : 0},
      {"seed", o.seed},
      {"braid", o.braid},
      {"algorithm", std::string(algorithm_name(o.algorithm))},
      {"counts", {{"train", o.counts.train}, {"eval", o.counts.eval}, {"test", o.counts.test}}},
      {"image_size", options.write_images ? options.image_size : 0},
      {"records",
       {{"train", manifest.records[0]}, {"eval", manifest.records[1]}, {"test", manifest.records[2]}}},
  };
  write_text_file(out_dir / "metadata.json", meta.dump(2) + "\n");
  return manifest;
}

std::vector<DatasetRecord> read_split(const std::filesystem::path& jsonl) {
  std::ifstream in(jsonl);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open '" + jsonl.string() + "' for reading");
  }
  std::vector<DatasetRecord> records;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      DatasetRecord r;
      r.obs = j.at("obs").get<std::string>();
      r.action = j.at("actions").get<int>();
      r.reward = j.at("rewards").get<double>();
      r.episode_start = j.at("episode_starts").get<bool>();
      r.info = j.at("info").get<std::string>();
      records.push_back(std::move(r));
    } catch (const json::exception& e) {
      throw ParseError(ErrorCode::kBadHeader, number, 0,
                       jsonl.string() + ": " + e.what());
    }
  }
  return records;
}

std::vector<std::vector<DatasetRecord>> episodes_of(
    const std::vector<DatasetRecord>& records) {
  std::vector<std::vector<DatasetRecord>> out;
  for (const DatasetRecord& r : records) {
    if (r.episode_start || out.empty()) out.emplace_back();
    out.back().push_back(r);
  }
  return out;
}

EnvConfig config_of(const std::vector<DatasetRecord>& episode) {
  if (episode.empty()) throw Error(ErrorCode::kEmptyInput, "empty episode");
  const ConfigDocument doc = parse(episode.front().info);
  return make_env_config(doc.graph, task_from(doc));
}

Trajectory replay_episode(const std::vector<DatasetRecord>& episode) {
  const EnvConfig config = config_of(episode);
  Trajectory t;
  EnvState state = initial_state(config);
  for (std::size_t i = 0; i < episode.size(); ++i) {
    const DatasetRecord& r = episode[i];
    const bool last = i + 1 == episode.size();
    if (r.action == -1) {
      if (!last || !state.reached_goal || r.reward != reward_of(config, true)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "terminal record " + std::to_string(i) + " does not match the goal state");
      }
      break;
    }
    if (r.action < 0 || r.action > 3) {
      throw Error(ErrorCode::kInvalidArgument, "bad action " + std::to_string(r.action));
    }
    const auto a = static_cast<Action>(r.action);
    const Transition step = transition(config, state, a);
    if (step.reward != r.reward) {
      throw Error(ErrorCode::kInvalidArgument,
                  "reward mismatch at record " + std::to_string(i));
    }
    t.steps.push_back({state.agent, state.has_key, a, step.reward, i == 0});
    state = step.next;
    if (last) {
      throw Error(ErrorCode::kInvalidArgument, "episode lacks its terminal record");
    }
  }
  t.final_state = state;
  return t;
}

}  // namespace labyrinth
