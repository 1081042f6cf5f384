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

// Command-line front end: split generation, solving, rendering, replay,
// dataset analytics and policy evaluation.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "labyrinth/config_io.hpp"
#include "labyrinth/datagen.hpp"
#include "labyrinth/env.hpp"
#include "labyrinth/error.hpp"
#include "labyrinth/metrics.hpp"
#include "labyrinth/observe.hpp"
#include "labyrinth/solver.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace labyrinth;

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json position_json(Position p) { return json::array({p.row, p.col}); }

Position parse_position(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw UsageError("expected ROW,COL but got '" + text + "'");
  }
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("expected ROW,COL but got '" + text + "'");
  }
}

Action parse_action(const std::string& token) {
  if (token == "0" || token == "up") return Action::kUp;
  if (token == "1" || token == "down") return Action::kDown;
  if (token == "2" || token == "right") return Action::kRight;
  if (token == "3" || token == "left") return Action::kLeft;
  throw UsageError("unknown action '" + token + "'");
}

std::vector<Action> parse_actions(const std::string& list) {
  std::vector<Action> out;
  std::stringstream in(list);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (!token.empty()) out.push_back(parse_action(token));
  }
  return out;
}

json vector_json(const VectorObservation& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Image observation_image(const EnvConfig& config, const EnvState& state, int size) {
  if (config.task.setting == Setting::kOccluded) {
    return render_occluded(config, state, size);
  }
  return render_full(config, state, size);
}

struct LoadedDataset {
  json metadata;
  Dims dims;
  std::vector<std::vector<DatasetRecord>> episodes;
};

LoadedDataset load_dataset(const fs::path& dir, const std::string& only_split) {
  LoadedDataset d;
  d.metadata = json::parse(read_text_file(dir / "metadata.json"));
  d.dims = {d.metadata.at("width").get<int>(), d.metadata.at("height").get<int>()};
  for (const char* name : kSplitNames) {
    if (!only_split.empty() && only_split != name) continue;
    for (auto& e : episodes_of(read_split(dir / (std::string(name) + ".jsonl")))) {
      d.episodes.push_back(std::move(e));
    }
  }
  return d;
}

int cmd_generate(const GenerateOptions& options, const fs::path& out,
                 const DatasetOptions& dataset_options) {
  const SplitSet splits = generate_splits(options);
  const DatasetManifest manifest = write_dataset(splits, out, dataset_options);
  for (std::size_t s = 0; s < 3; ++s) {
    const fs::path dir = out / "structures" / kSplitNames[s];
    fs::create_directories(dir);
    for (std::size_t i = 0; i < splits.splits[s].size(); ++i) {
      save(dir / (std::to_string(i) + ".labyrinth"), splits.splits[s][i].config);
    }
  }
  json summary{{"out", out.string()}};
  for (std::size_t s = 0; s < 3; ++s) {
    summary[kSplitNames[s]] = {{"episodes", manifest.episodes[s]},
                               {"records", manifest.records[s]}};
  }
  std::cout << summary.dump() << '\n';
  return 0;
}

int cmd_solve(const fs::path& file, const std::string& mode) {
  const EnvConfig config = load(file);
  std::vector<Path> paths;
  if (mode == "all") {
    paths = all_paths(config.graph, config.task.start, config.task.goal);
  } else if (mode == "shortest") {
    paths = {shortest_path(config.graph, config.task.start, config.task.goal)};
  } else {
    throw UsageError("--mode must be all or shortest");
  }
  json out{{"mode", mode}, {"count", paths.size()}, {"paths", json::array()}};
  for (const Path& p : paths) {
    json path = json::array();
    for (const Position& pos : p) path.push_back(position_json(pos));
    json actions = json::array();
    for (Action a : path_actions(p)) actions.push_back(static_cast<int>(a));
    out["paths"].push_back({{"tiles", path}, {"actions", actions}});
  }
  std::cout << out.dump() << '\n';
  return 0;
}

int cmd_render(const fs::path& file, const fs::path& out, int size) {
  const EnvConfig config = load(file);
  write_png(out, observation_image(config, initial_state(config), size));
  return 0;
}

int cmd_replay(const fs::path& file, const std::string& actions, bool vector,
               const fs::path& images, int size) {
  const EnvConfig config = load(file);
  if (!images.empty()) fs::create_directories(images);
  EnvState state = initial_state(config);
  auto dump_observation = [&](json& line, int step) {
    if (vector) line["observation"] = vector_json(encode_vector(config, state));
    if (!images.empty()) {
      const fs::path png = images / (std::to_string(step) + ".png");
      write_png(png, observation_image(config, state, size));
      line["image"] = png.string();
    }
  };

  json first{{"step", 0}, {"agent", position_json(state.agent)}};
  dump_observation(first, 0);
  std::cout << first.dump() << '\n';

  double total = 0.0;
  int step = 0;
  for (Action a : parse_actions(actions)) {
    const Transition t = transition(config, state, a);
    state = t.next;
    total += t.reward;
    ++step;
    json line{{"step", step},
              {"action", static_cast<int>(a)},
              {"agent", position_json(state.agent)},
              {"reward", t.reward},
              {"terminated", state.terminated},
              {"truncated", state.truncated},
              {"has_key", state.has_key},
              {"fell_through_ice", state.fell_through_ice}};
    dump_observation(line, step);
    std::cout << line.dump() << '\n';
  }
  std::cout << json{{"return", total}, {"success", state.reached_goal}}.dump() << '\n';
  return 0;
}

int cmd_analyze(const fs::path& dir, const fs::path& against) {
  auto summarize = [](const fs::path& d, Dims& dims) {
    const LoadedDataset data = load_dataset(d, "");
    dims = data.dims;
    std::vector<Trajectory> trajectories;
    for (const auto& episode : data.episodes) {
      trajectories.push_back(replay_episode(episode));
    }
    return std::pair{action_distribution(trajectories),
                     tile_distribution(trajectories, data.dims)};
  };
  auto matrix_json = [](const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
      rows.push_back(row);
    }
    return rows;
  };

  Dims dims;
  const auto [actions, tiles] = summarize(dir, dims);
  const Eigen::Vector4d uniform = Eigen::Vector4d::Constant(0.25);
  json out{{"action_distribution", {actions(0), actions(1), actions(2), actions(3)}},
           {"tile_distribution", matrix_json(tiles)},
           {"js_distance_to_uniform", js_distance(actions, uniform)}};
  if (!against.empty()) {
    Dims other_dims;
    const auto [other_actions, other_tiles] = summarize(against, other_dims);
    out["against"] = against.string();
    out["action_js_distance"] = js_distance(actions, other_actions);
    if (other_dims == dims) {
      out["tile_ws_distance"] = ws_distance(tiles, other_tiles);
    } else {
      out["tile_ws_distance"] = nullptr;
    }
  }
  std::cout << out.dump() << '\n';
  return 0;
}

int cmd_evaluate(const fs::path& dir, const std::string& policy_name, int episodes,
                 Seed seed, const std::string& split) {
  const LoadedDataset data = load_dataset(dir, split);
  std::vector<EnvConfig> configs;
  for (const auto& episode : data.episodes) configs.push_back(config_of(episode));

  Policy policy;
  if (policy_name == "expert") {
    policy = expert_policy();
  } else if (policy_name == "random") {
    policy = random_policy(seed);
  } else {
    throw UsageError("--policy must be expert or random");
  }
  const EvalResult r = evaluate(policy, configs, episodes);
  std::cout << json{{"policy", policy_name},
                    {"episodes", r.episodes},
                    {"aer_mean", r.aer_mean},
                    {"aer_std", r.aer_std},
                    {"success_ratio", r.success_ratio}}
                   .dump()
            << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Labyrinth maze environments: generation, solving and datasets"};
  app.require_subcommand(1);

  GenerateOptions gen;
  std::string setting = "navigation";
  std::string mode = "biased";
  std::string start_text;
  std::string goal_text;
  fs::path out_dir;
  DatasetOptions dataset_options;
  bool no_images = false;
  auto* generate = app.add_subcommand("generate", "Generate unique train/eval/test splits");
  generate->add_option("--width", gen.dims.width, "Tile columns")->required();
  generate->add_option("--height", gen.dims.height, "Tile rows")->required();
  generate->add_option("--train", gen.counts.train, "Train split size")->default_val(0);
  generate->add_option("--eval", gen.counts.eval, "Eval split size")->default_val(0);
  generate->add_option("--test", gen.counts.test, "Test split size")->default_val(0);
  generate->add_option("--setting", setting, "navigation|occluded|key_door|ice")
      ->default_val("navigation");
  generate->add_option("--mode", mode, "biased|unbiased|user_defined")->default_val("biased");
  generate->add_option("--seed", gen.seed, "Master seed")->default_val(0);
  generate->add_option("--min-distance", gen.mode.min_distance,
                       "Unbiased minimum Manhattan distance (0 = default)")
      ->default_val(0);
  generate->add_option("--braid", gen.braid, "Extra walls removed per maze")->default_val(0);
  std::string algorithm = "wilson";
  generate->add_option("--algorithm", algorithm, "wilson|backtracker")->default_val("wilson");
  generate->add_option("--start", start_text, "ROW,COL (user_defined mode)");
  generate->add_option("--goal", goal_text, "ROW,COL (user_defined mode)");
  generate->add_option("--out", out_dir, "Output directory")->required();
  generate->add_option("--image-size", dataset_options.image_size, "Observation size in pixels")
      ->default_val(600);
  generate->add_flag("--no-images", no_images, "Skip writing PNG observations");

  fs::path file;
  std::string solve_mode = "all";
  auto* solve = app.add_subcommand("solve", "Enumerate solutions of a .labyrinth file");
  solve->add_option("file", file)->required();
  solve->add_option("--mode", solve_mode, "all|shortest")->default_val("all");

  fs::path png_out;
  int size = kDefaultImageSize;
  auto* render = app.add_subcommand("render", "Render the start state to PNG");
  render->add_option("file", file)->required();
  render->add_option("--out", png_out)->required();
  render->add_option("--size", size)->default_val(kDefaultImageSize);

  std::string actions;
  bool vector = false;
  fs::path images;
  auto* replay = app.add_subcommand("replay", "Step a .labyrinth file through actions");
  replay->add_option("file", file)->required();
  replay->add_option("--actions", actions, "Comma-separated actions (0-3 or names)")
      ->required();
  replay->add_flag("--vector", vector, "Print vector observations");
  replay->add_option("--images", images, "Directory for per-step PNG observations");
  replay->add_option("--size", size)->default_val(kDefaultImageSize);

  fs::path dataset_dir;
  fs::path against;
  auto* analyze = app.add_subcommand("analyze", "Action/tile distributions of a dataset");
  analyze->add_option("dataset", dataset_dir)->required();
  analyze->add_option("--against", against, "Second dataset to compare with");

  std::string policy = "expert";
  int episodes = 1;
  Seed policy_seed = 0;
  std::string split;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "AER and SR of a policy on a dataset");
  evaluate_cmd->add_option("--dataset", dataset_dir)->required();
  evaluate_cmd->add_option("--policy", policy, "expert|random")->default_val("expert");
  evaluate_cmd->add_option("--episodes", episodes, "Episodes per structure")->default_val(1);
  evaluate_cmd->add_option("--seed", policy_seed)->default_val(0);
  evaluate_cmd->add_option("--split", split, "train|eval|test (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (generate->parsed()) {
      gen.setting = parse_setting(setting);
      gen.mode.kind = parse_placement(mode);
      gen.algorithm = parse_algorithm(algorithm);
      if (gen.mode.kind == PlacementKind::kUserDefined) {
        if (start_text.empty() || goal_text.empty()) {
          throw UsageError("user_defined mode needs --start and --goal");
        }
        gen.mode.start = parse_position(start_text);
        gen.mode.goal = parse_position(goal_text);
      }
      dataset_options.write_images = !no_images;
      return cmd_generate(gen, out_dir, dataset_options);
    }
    if (solve->parsed()) return cmd_solve(file, solve_mode);
    if (render->parsed()) return cmd_render(file, png_out, size);
    if (replay->parsed()) return cmd_replay(file, actions, vector, images, size);
    if (analyze->parsed()) return cmd_analyze(dataset_dir, against);
    if (evaluate_cmd->parsed()) {
      return cmd_evaluate(dataset_dir, policy, episodes, policy_seed, split);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidArgument) {
      std::cerr << "usage error: " << e.what() << '\n';
      return kUsageError;
    }
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}
