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

// Reader and writer for .labyrinth files.
//
// A file is three flag lines, a `labyrinth:` line, the grid drawing and a
// closing `end`:
//
//   key_and_lock: False
//   icy_floor: False
//   occlusion: False
//   labyrinth:
//   -------------
//   |   |     E |
//   |   +   + - |
//   |           |
//   |   + - +   |
//   | S |       |
//   -------------
//   end
//
// A width x height grid is drawn with 2 * height + 1 lines of 4 * width + 1
// characters. Tile (r, c) has its glyph (S, E, K, D, I or space) at column
// 4c + 2 of line 2r + 1. A '|' at column 4(c + 1) of that line is a wall
// between (r, c) and (r, c + 1). Any '-' in columns 4c + 1 .. 4c + 3 of line
// 2(r + 1) is a wall between (r, c) and (r + 1, c). Columns 4c of wall lines
// are junctions and carry no information. Text between a pair of `"""` is a
// comment. Leading and trailing whitespace on a line is ignored.

#ifndef LABYRINTH_CONFIG_IO_HPP_
#define LABYRINTH_CONFIG_IO_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "labyrinth/grid_graph.hpp"
#include "labyrinth/random.hpp"
#include "labyrinth/tasks.hpp"

namespace labyrinth {

struct ConfigFlags {
  bool key_and_lock = false;
  bool icy_floor = false;
  bool occlusion = false;

  bool operator==(const ConfigFlags&) const = default;
};

struct ConfigDocument {
  ConfigFlags flags;
  LabyrinthGraph graph;
  Position start;
  Position goal;
  std::optional<Position> key;
  std::optional<Position> door;
  std::vector<Position> ice;  // sorted

  /// Markings dropped because their setting is off. Not part of equality.
  std::vector<std::string> warnings;

  Setting setting() const;

  bool operator==(const ConfigDocument& other) const {
    return flags == other.flags && graph == other.graph &&
           start == other.start && goal == other.goal && key == other.key &&
           door == other.door && ice == other.ice;
  }
};

/// Throws ParseError (kBadHeader, kBadGeometry, kBadTiles, kMutualExclusion).
ConfigDocument parse(std::string_view text);

/// Canonical form: fixed flag order, centered ' - ' horizontal walls, '+'
/// exactly at junctions touched by an interior wall, no comments.
std::string serialize(const ConfigDocument& doc);

ConfigDocument document_from(const LabyrinthGraph& graph, const TaskSpec& task);

/// Builds the task described by a document. When the active setting's special
/// tiles are missing they are placed with the built-in heuristics using
/// `seed`.
TaskSpec task_from(const ConfigDocument& doc, Seed seed = 0);

std::string canonical_text(const LabyrinthGraph& graph, const TaskSpec& task);

using Digest = std::array<std::uint8_t, 32>;

/// SHA-256 of canonical_text. Uniqueness checks must still compare texts when
/// two digests agree.
Digest structure_hash(const LabyrinthGraph& graph, const TaskSpec& task);
Digest sha256(std::string_view bytes);
std::string to_hex(const Digest& digest);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

struct EnvConfig;

void save(const std::filesystem::path& path, const EnvConfig& config);
/// Reads, parses and validates a file. The returned config carries the
/// file's setting regardless of what the caller previously had.
EnvConfig load(const std::filesystem::path& path, Seed seed = 0);

}  // namespace labyrinth

#endif  // LABYRINTH_CONFIG_IO_HPP_
