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

#include "labyrinth/observe.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "labyrinth/error.hpp"

namespace labyrinth {
namespace {

struct Rect {
  int x0, y0, x1, y1;
};

enum class Side { kTop, kBottom, kLeft, kRight };

class Layout {
 public:
  Layout(Dims dims, int size)
      : dims_(dims), size_(size), thickness_(std::max(1, size / 200)) {
    if (size < 8 * std::max(dims.width, dims.height)) {
      throw Error(ErrorCode::kSizeTooSmall,
                  "image size " + std::to_string(size) + " is below 8 * " +
                      std::to_string(std::max(dims.width, dims.height)));
    }
  }

  int x(int col) const { return col * size_ / dims_.width; }
  int y(int row) const { return row * size_ / dims_.height; }

  Rect tile(Position p) const {
    return {x(p.col), y(p.row), x(p.col + 1), y(p.row + 1)};
  }

  // Band covering one side of a tile. Bands overhang the side's ends by
  // half a thickness so that corners close up.
  Rect side(Position p, Side s) const {
    const int t = thickness_;
    const int h = t / 2;
    const Rect cell = tile(p);
    // Border bands sit fully inside the image.
    auto band = [&](int at, bool is_first, bool is_last) {
      if (is_first) return std::pair{0, t};
      if (is_last) return std::pair{size_ - t, size_};
      return std::pair{at - h, at - h + t};
    };
    switch (s) {
      case Side::kTop: {
        auto [a, b] = band(cell.y0, p.row == 0, false);
        return {cell.x0 - h, a, cell.x1 - h + t, b};
      }
      case Side::kBottom: {
        auto [a, b] = band(cell.y1, false, p.row == dims_.height - 1);
        return {cell.x0 - h, a, cell.x1 - h + t, b};
      }
      case Side::kLeft: {
        auto [a, b] = band(cell.x0, p.col == 0, false);
        return {a, cell.y0 - h, b, cell.y1 - h + t};
      }
      case Side::kRight: {
        auto [a, b] = band(cell.x1, false, p.col == dims_.width - 1);
        return {a, cell.y0 - h, b, cell.y1 - h + t};
      }
    }
    return cell;
  }

 private:
  Dims dims_;
  int size_;
  int thickness_;
};

bool side_walled(const LabyrinthGraph& g, Position p, Side s) {
  const Action a = s == Side::kTop      ? Action::kUp
                   : s == Side::kBottom ? Action::kDown
                   : s == Side::kLeft   ? Action::kLeft
                                        : Action::kRight;
  return !g.move(p, a).has_value();
}

constexpr Side kSides[] = {Side::kTop, Side::kBottom, Side::kLeft, Side::kRight};

void fill(Image& img, const Rect& r, Rgb c) {
  img.fill_rect(r.x0, r.y0, r.x1, r.y1, c);
}

void draw_diamond(Image& img, const Rect& cell, Rgb c) {
  const double cx = (cell.x0 + cell.x1) / 2.0;
  const double cy = (cell.y0 + cell.y1) / 2.0;
  const double ax = 0.3 * (cell.x1 - cell.x0);
  const double ay = 0.3 * (cell.y1 - cell.y0);
  for (int y = cell.y0; y < cell.y1; ++y) {
    for (int x = cell.x0; x < cell.x1; ++x) {
      const double dx = std::abs(x + 0.5 - cx) / ax;
      const double dy = std::abs(y + 0.5 - cy) / ay;
      if (dx + dy <= 1.0) img.set(x, y, c);
    }
  }
}

}  // namespace

Image render_full(const LabyrinthGraph& graph, const TaskSpec& task,
                  const EnvState& state, int size) {
  const Layout layout(graph.dims(), size);
  Image img(size, size, palette::kFloor);

  for (const Position& p : task.ice) fill(img, layout.tile(p), palette::kIce);
  fill(img, layout.tile(task.start), palette::kStart);
  fill(img, layout.tile(task.goal), palette::kGoal);
  if (task.setting == Setting::kKeyDoor && task.door && task.key) {
    if (!state.has_key) {
      fill(img, layout.tile(*task.door), palette::kDoor);
      const Rect cell = layout.tile(*task.key);
      const int w = cell.x1 - cell.x0;
      const int h = cell.y1 - cell.y0;
      fill(img,
           {cell.x0 + w * 3 / 10, cell.y0 + h * 3 / 10, cell.x1 - w * 3 / 10,
            cell.y1 - h * 3 / 10},
           palette::kKey);
    }
  }
  draw_diamond(img, layout.tile(state.agent), palette::kAgent);

  for (int i = 0; i < graph.dims().tiles(); ++i) {
    const Position p = graph.position(i);
    for (Side s : kSides) {
      if (side_walled(graph, p, s)) fill(img, layout.side(p, s), palette::kWall);
    }
  }
  return img;
}

Image render_full(const EnvConfig& config, const EnvState& state, int size) {
  return render_full(config.graph, config.task, state, size);
}

Image render_occluded(const LabyrinthGraph& graph, const TaskSpec& task,
                      const EnvState& state, int size, int radius) {
  Image img = render_full(graph, task, state, size);
  const Layout layout(graph.dims(), size);

  std::vector<bool> shown(static_cast<std::size_t>(size) *
                              static_cast<std::size_t>(size),
                          false);
  auto mark = [&](const Rect& r) {
    for (int y = std::max(r.y0, 0); y < std::min(r.y1, size); ++y) {
      for (int x = std::max(r.x0, 0); x < std::min(r.x1, size); ++x) {
        shown[static_cast<std::size_t>(y) * static_cast<std::size_t>(size) +
              static_cast<std::size_t>(x)] = true;
      }
    }
  };
  auto visible = [&](Position p) {
    return (std::abs(p.row - state.agent.row) <= radius &&
            std::abs(p.col - state.agent.col) <= radius) ||
           p == task.start || p == task.goal;
  };
  for (int i = 0; i < graph.dims().tiles(); ++i) {
    const Position p = graph.position(i);
    if (!visible(p)) continue;
    mark(layout.tile(p));
    for (Side s : kSides) {
      if (side_walled(graph, p, s)) mark(layout.side(p, s));
    }
  }
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      if (!shown[static_cast<std::size_t>(y) * static_cast<std::size_t>(size) +
                 static_cast<std::size_t>(x)]) {
        img.set(x, y, palette::kOccluded);
      }
    }
  }
  return img;
}

Image render_occluded(const EnvConfig& config, const EnvState& state, int size,
                      int radius) {
  return render_occluded(config.graph, config.task, state, size, radius);
}

int vector_length(Dims dims, Setting setting) {
  int n = 6 + dims.height * (dims.width - 1) + (dims.height - 1) * dims.width;
  if (setting == Setting::kKeyDoor) n += 5;
  if (setting == Setting::kIce) n += dims.tiles();
  return n;
}

VectorObservation encode_vector(const LabyrinthGraph& graph,
                                const TaskSpec& task, const EnvState& state) {
  const Dims d = graph.dims();
  VectorObservation v(vector_length(d, task.setting));
  Eigen::Index i = 0;
  v(i++) = state.agent.row;
  v(i++) = state.agent.col;
  v(i++) = task.start.row;
  v(i++) = task.start.col;
  v(i++) = task.goal.row;
  v(i++) = task.goal.col;
  for (bool bit : graph.walls().vertical_bits()) v(i++) = bit ? 1 : 0;
  for (bool bit : graph.walls().horizontal_bits()) v(i++) = bit ? 1 : 0;
  if (task.setting == Setting::kKeyDoor) {
    v(i++) = task.key->row;
    v(i++) = task.key->col;
    v(i++) = task.door->row;
    v(i++) = task.door->col;
    v(i++) = state.has_key ? 1 : 0;
  } else if (task.setting == Setting::kIce) {
    for (int t = 0; t < d.tiles(); ++t) {
      v(i++) = task.is_ice(graph.position(t)) ? 1 : 0;
    }
  }
  return v;
}

VectorObservation encode_vector(const EnvConfig& config, const EnvState& state) {
  return encode_vector(config.graph, config.task, state);
}

}  // namespace labyrinth
