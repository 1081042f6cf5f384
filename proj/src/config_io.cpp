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

#include "labyrinth/config_io.hpp"

#include <openssl/sha.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "labyrinth/env.hpp"
#include "labyrinth/error.hpp"

namespace labyrinth {
namespace {

constexpr std::string_view kFlagNames[] = {"key_and_lock", "icy_floor",
                                           "occlusion"};

struct SourceLine {
  std::string text;  // trimmed
  int number;        // 1-based
  int indent;        // characters trimmed from the left
};

bool is_space(char c) { return c == ' ' || c == '\t'; }

SourceLine trimmed(std::string_view raw, int number) {
  std::size_t b = 0;
  while (b < raw.size() && is_space(raw[b])) ++b;
  std::size_t e = raw.size();
  while (e > b && is_space(raw[e - 1])) --e;
  return {std::string(raw.substr(b, e - b)), number, static_cast<int>(b)};
}

// CRLF and lone CR become LF; comment bodies are blanked but their newlines
// are kept so line numbers stay true.
std::vector<SourceLine> preprocess(std::string_view text) {
  std::string clean;
  clean.reserve(text.size());
  bool in_comment = false;
  int line = 1;
  int comment_line = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '\r') {
      if (i + 1 < text.size() && text[i + 1] == '\n') continue;
      c = '\n';
    }
    if (text.substr(i, 3) == "\"\"\"") {
      in_comment = !in_comment;
      if (in_comment) comment_line = line;
      i += 2;
      continue;
    }
    if (c == '\n') {
      ++line;
      clean.push_back('\n');
    } else if (!in_comment) {
      clean.push_back(c);
    }
  }
  if (in_comment) {
    throw ParseError(ErrorCode::kBadHeader, comment_line, 0,
                     "unterminated \"\"\" comment");
  }

  std::vector<SourceLine> lines;
  std::size_t start = 0;
  int number = 1;
  while (start <= clean.size()) {
    std::size_t end = clean.find('\n', start);
    if (end == std::string::npos) end = clean.size();
    lines.push_back(trimmed(std::string_view(clean).substr(start, end - start),
                            number++));
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void geometry_error(const SourceLine& line, std::size_t column,
                                 const std::string& what) {
  throw ParseError(ErrorCode::kBadGeometry, line.number,
                   line.indent + static_cast<int>(column) + 1, what);
}

ConfigDocument decode_grid(const std::vector<SourceLine>& grid, int open_line,
                           const ConfigFlags& flags) {
  if (grid.size() < 3 || grid.size() % 2 == 0) {
    throw ParseError(ErrorCode::kBadGeometry, open_line, 0,
                     "grid needs an odd number (>= 3) of lines, got " +
                         std::to_string(grid.size()));
  }
  const std::size_t length = grid.front().text.size();
  if (length < 5 || (length - 1) % 4 != 0) {
    geometry_error(grid.front(), 0,
                   "border width must be 4 * width + 1, got " +
                       std::to_string(length));
  }
  const Dims dims{static_cast<int>((length - 1) / 4),
                  static_cast<int>((grid.size() - 1) / 2)};
  for (const SourceLine& line : grid) {
    if (line.text.size() != length) {
      geometry_error(line, std::min(line.text.size(), length),
                     "line width " + std::to_string(line.text.size()) +
                         " differs from border width " + std::to_string(length));
    }
  }
  for (const SourceLine* border : {&grid.front(), &grid.back()}) {
    const auto bad = border->text.find_first_not_of('-');
    if (bad != std::string::npos) {
      geometry_error(*border, bad, "outer border must be all '-'");
    }
  }

  ConfigDocument doc;
  doc.flags = flags;
  WallSet walls(dims);
  std::vector<Position> starts, goals, keys, doors, ice;

  for (int r = 0; r < dims.height; ++r) {
    const SourceLine& tile_line = grid[static_cast<std::size_t>(2 * r + 1)];
    const std::string& t = tile_line.text;
    if (t.front() != '|') geometry_error(tile_line, 0, "expected '|'");
    if (t.back() != '|') geometry_error(tile_line, length - 1, "expected '|'");
    for (int c = 0; c < dims.width; ++c) {
      const auto base = static_cast<std::size_t>(4 * c);
      for (std::size_t pad : {base + 1, base + 3}) {
        if (t[pad] != ' ') geometry_error(tile_line, pad, "expected ' '");
      }
      const Position p{r, c};
      switch (t[base + 2]) {
        case ' ': break;
        case 'S': starts.push_back(p); break;
        case 'E': goals.push_back(p); break;
        case 'K': keys.push_back(p); break;
        case 'D': doors.push_back(p); break;
        case 'I': ice.push_back(p); break;
        default:
          throw ParseError(ErrorCode::kBadTiles, tile_line.number,
                           tile_line.indent + static_cast<int>(base) + 3,
                           std::string("unknown tile glyph '") + t[base + 2] +
                               "'");
      }
      if (c + 1 < dims.width) {
        const char v = t[base + 4];
        if (v == '|') {
          walls.set(p, {r, c + 1}, true);
        } else if (v != ' ') {
          geometry_error(tile_line, base + 4, "expected '|' or ' '");
        }
      }
    }

    if (r + 1 == dims.height) continue;
    const SourceLine& wall_line = grid[static_cast<std::size_t>(2 * r + 2)];
    const std::string& w = wall_line.text;
    for (std::size_t end : {std::size_t{0}, length - 1}) {
      if (w[end] != '|' && w[end] != '+') {
        geometry_error(wall_line, end, "expected '|' or '+'");
      }
    }
    for (int c = 0; c < dims.width; ++c) {
      const auto base = static_cast<std::size_t>(4 * c);
      bool wall = false;
      for (std::size_t k = base + 1; k <= base + 3; ++k) {
        if (w[k] == '-') {
          wall = true;
        } else if (w[k] != ' ') {
          geometry_error(wall_line, k, "expected '-' or ' '");
        }
      }
      if (wall) walls.set({r, c}, {r + 1, c}, true);
      if (c > 0) {
        const char j = w[base];
        if (j != '+' && j != ' ' && j != '-' && j != '|') {
          geometry_error(wall_line, base, "unexpected junction character");
        }
      }
    }
  }

  const int body_line = grid.front().number;
  auto tiles_error = [&](const std::string& what) {
    throw ParseError(ErrorCode::kBadTiles, body_line, 0, what);
  };
  if (starts.size() != 1) {
    tiles_error("expected exactly one S, found " + std::to_string(starts.size()));
  }
  if (goals.size() != 1) {
    tiles_error("expected exactly one E, found " + std::to_string(goals.size()));
  }
  doc.graph = LabyrinthGraph(dims, std::move(walls));
  doc.start = starts.front();
  doc.goal = goals.front();

  if (flags.key_and_lock) {
    if (keys.size() > 1) tiles_error("more than one K");
    if (doors.size() > 1) tiles_error("more than one D");
    if (!keys.empty()) doc.key = keys.front();
    if (!doors.empty()) doc.door = doors.front();
  } else if (!keys.empty() || !doors.empty()) {
    doc.warnings.push_back("K/D markings ignored: key_and_lock is False");
  }
  if (flags.icy_floor) {
    doc.ice = std::move(ice);
    std::sort(doc.ice.begin(), doc.ice.end());
  } else if (!ice.empty()) {
    doc.warnings.push_back("I markings ignored: icy_floor is False");
  }
  return doc;
}

bool has_wall(const WallSet& w, Dims d, Position a, Position b) {
  if (a.row < 0 || a.col < 0 || b.row < 0 || b.col < 0) return false;
  if (a.row >= d.height || b.row >= d.height || a.col >= d.width ||
      b.col >= d.width) {
    return false;
  }
  return w.between(a, b);
}

}  // namespace

Setting ConfigDocument::setting() const {
  if (flags.key_and_lock) return Setting::kKeyDoor;
  if (flags.icy_floor) return Setting::kIce;
  if (flags.occlusion) return Setting::kOccluded;
  return Setting::kNavigation;
}

ConfigDocument parse(std::string_view text) {
  const std::vector<SourceLine> lines = preprocess(text);
  std::map<std::string, bool, std::less<>> flags;
  std::vector<SourceLine> grid;
  int open_line = 0;
  enum class Stage { kHeader, kGrid, kDone } stage = Stage::kHeader;

  for (const SourceLine& line : lines) {
    switch (stage) {
      case Stage::kHeader: {
        if (line.text.empty()) break;
        if (line.text == "labyrinth:") {
          open_line = line.number;
          stage = Stage::kGrid;
          break;
        }
        const auto colon = line.text.find(':');
        if (colon == std::string::npos) {
          throw ParseError(ErrorCode::kBadHeader, line.number, line.indent + 1,
                           "expected 'key: value' or 'labyrinth:'");
        }
        std::string key = trimmed(line.text.substr(0, colon), 0).text;
        std::string value = trimmed(line.text.substr(colon + 1), 0).text;
        if (std::find(std::begin(kFlagNames), std::end(kFlagNames), key) ==
            std::end(kFlagNames)) {
          throw ParseError(ErrorCode::kBadHeader, line.number, line.indent + 1,
                           "unknown header key '" + key + "'");
        }
        if (flags.contains(key)) {
          throw ParseError(ErrorCode::kBadHeader, line.number, line.indent + 1,
                           "duplicate header key '" + key + "'");
        }
        if (value != "True" && value != "False") {
          throw ParseError(ErrorCode::kBadHeader, line.number,
                           line.indent + static_cast<int>(colon) + 2,
                           "expected True or False, got '" + value + "'");
        }
        flags[key] = value == "True";
        break;
      }
      case Stage::kGrid:
        if (line.text == "end") {
          stage = Stage::kDone;
        } else if (line.text.empty()) {
          throw ParseError(ErrorCode::kBadGeometry, line.number, 0,
                           "blank line inside the grid");
        } else {
          grid.push_back(line);
        }
        break;
      case Stage::kDone:
        if (!line.text.empty()) {
          throw ParseError(ErrorCode::kBadHeader, line.number, line.indent + 1,
                           "content after 'end'");
        }
        break;
    }
  }

  if (stage == Stage::kHeader) {
    throw ParseError(ErrorCode::kBadHeader, lines.back().number, 0,
                     "missing 'labyrinth:' section");
  }
  for (std::string_view name : kFlagNames) {
    if (!flags.contains(name)) {
      throw ParseError(ErrorCode::kBadHeader, open_line, 0,
                       "missing header key '" + std::string(name) + "'");
    }
  }
  if (stage == Stage::kGrid) {
    throw ParseError(ErrorCode::kBadGeometry, lines.back().number, 0,
                     "grid not closed by 'end'");
  }

  ConfigFlags parsed;
  parsed.key_and_lock = flags.find("key_and_lock")->second;
  parsed.icy_floor = flags.find("icy_floor")->second;
  parsed.occlusion = flags.find("occlusion")->second;
  if (int(parsed.key_and_lock) + int(parsed.icy_floor) + int(parsed.occlusion) > 1) {
    throw ParseError(ErrorCode::kMutualExclusion, open_line, 0,
                     "key_and_lock, icy_floor and occlusion are mutually "
                     "exclusive");
  }
  return decode_grid(grid, open_line, parsed);
}

std::string serialize(const ConfigDocument& doc) {
  const Dims d = doc.graph.dims();
  const WallSet& w = doc.graph.walls();
  auto flag = [](bool b) { return b ? "True" : "False"; };

  std::ostringstream out;
  out << "key_and_lock: " << flag(doc.flags.key_and_lock) << '\n'
      << "icy_floor: " << flag(doc.flags.icy_floor) << '\n'
      << "occlusion: " << flag(doc.flags.occlusion) << '\n'
      << "labyrinth:\n";

  const auto length = static_cast<std::size_t>(4 * d.width + 1);
  const std::string border(length, '-');
  out << border << '\n';
  for (int r = 0; r < d.height; ++r) {
    std::string tiles(length, ' ');
    tiles.front() = '|';
    tiles.back() = '|';
    for (int c = 0; c < d.width; ++c) {
      const Position p{r, c};
      char glyph = ' ';
      if (p == doc.start) {
        glyph = 'S';
      } else if (p == doc.goal) {
        glyph = 'E';
      } else if (doc.flags.key_and_lock && doc.key == p) {
        glyph = 'K';
      } else if (doc.flags.key_and_lock && doc.door == p) {
        glyph = 'D';
      } else if (doc.flags.icy_floor &&
                 std::binary_search(doc.ice.begin(), doc.ice.end(), p)) {
        glyph = 'I';
      }
      tiles[static_cast<std::size_t>(4 * c + 2)] = glyph;
      if (c + 1 < d.width && w.vertical(r, c)) {
        tiles[static_cast<std::size_t>(4 * c + 4)] = '|';
      }
    }
    out << tiles << '\n';
    if (r + 1 == d.height) break;

    std::string walls(length, ' ');
    walls.front() = '|';
    walls.back() = '|';
    for (int c = 0; c < d.width; ++c) {
      if (w.horizontal(r, c)) walls[static_cast<std::size_t>(4 * c + 2)] = '-';
      if (c == 0) continue;
      const bool junction = has_wall(w, d, {r, c - 1}, {r, c}) ||
                            has_wall(w, d, {r + 1, c - 1}, {r + 1, c}) ||
                            has_wall(w, d, {r, c - 1}, {r + 1, c - 1}) ||
                            has_wall(w, d, {r, c}, {r + 1, c});
      if (junction) walls[static_cast<std::size_t>(4 * c)] = '+';
    }
    out << walls << '\n';
  }
  out << border << '\n' << "end\n";
  return out.str();
}

ConfigDocument document_from(const LabyrinthGraph& graph, const TaskSpec& task) {
  ConfigDocument doc;
  doc.flags.key_and_lock = task.setting == Setting::kKeyDoor;
  doc.flags.icy_floor = task.setting == Setting::kIce;
  doc.flags.occlusion = task.setting == Setting::kOccluded;
  doc.graph = graph;
  doc.start = task.start;
  doc.goal = task.goal;
  if (doc.flags.key_and_lock) {
    doc.key = task.key;
    doc.door = task.door;
  }
  if (doc.flags.icy_floor) doc.ice = task.ice;
  return doc;
}

TaskSpec task_from(const ConfigDocument& doc, Seed seed) {
  TaskSpec task;
  task.setting = doc.setting();
  task.start = doc.start;
  task.goal = doc.goal;
  if (task.setting == Setting::kKeyDoor) {
    task.key = doc.key;
    task.door = doc.door;
    if (!task.door) {
      const KeyDoor placed =
          place_key_and_door(doc.graph, doc.start, doc.goal, seed);
      task.door = placed.door;
      if (!task.key) task.key = placed.key;
    } else if (!task.key) {
      const auto candidates =
          key_candidates(doc.graph, doc.start, doc.goal, *task.door);
      if (candidates.empty()) {
        throw Error(ErrorCode::kNoKeyCandidate,
                    "no off-path tile is reachable before the door");
      }
      Rng rng(seed);
      task.key = candidates[rng.uniform(candidates.size())];
    }
  } else if (task.setting == Setting::kIce) {
    task.ice = doc.ice.empty() ? place_ice(doc.graph, doc.start, doc.goal, seed)
                               : doc.ice;
  }
  return task;
}

std::string canonical_text(const LabyrinthGraph& graph, const TaskSpec& task) {
  return serialize(document_from(graph, task));
}

Digest sha256(std::string_view bytes) {
  Digest out{};
  SHA256(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(),
         out.data());
  return out;
}

Digest structure_hash(const LabyrinthGraph& graph, const TaskSpec& task) {
  return sha256(canonical_text(graph, task));
}

std::string to_hex(const Digest& digest) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (std::uint8_t b : digest) {
    out.push_back(kHex[b >> 4]);
    out.push_back(kHex[b & 0xF]);
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorCode::kIo, "error reading '" + path.string() + "'");
  }
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw Error(ErrorCode::kIo, "error writing '" + path.string() + "'");
  }
}

void save(const std::filesystem::path& path, const EnvConfig& config) {
  write_text_file(path, config.canonical);
}

EnvConfig load(const std::filesystem::path& path, Seed seed) {
  const std::string text = read_text_file(path);
  const ConfigDocument doc = parse(text);
  TaskSpec task = task_from(doc, seed);
  return make_env_config(doc.graph, std::move(task));
}

}  // namespace labyrinth
