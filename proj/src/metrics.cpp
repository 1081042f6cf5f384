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

#include "labyrinth/metrics.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace labyrinth {

Eigen::Vector4d action_distribution(std::span<const Trajectory> trajectories) {
  Eigen::Vector4d counts = Eigen::Vector4d::Zero();
  for (const Trajectory& t : trajectories) {
    for (const TrajectoryStep& s : t.steps) {
      counts(static_cast<int>(s.action)) += 1.0;
    }
  }
  const double total = counts.sum();
  if (total == 0.0) {
    throw Error(ErrorCode::kEmptyInput, "no actions to count");
  }
  return counts / total;
}

Eigen::MatrixXd tile_distribution(std::span<const Trajectory> trajectories,
                                  Dims dims) {
  Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(dims.height, dims.width);
  for (const Trajectory& t : trajectories) {
    for (const TrajectoryStep& s : t.steps) counts(s.agent.row, s.agent.col) += 1.0;
    if (!t.steps.empty()) {
      counts(t.final_state.agent.row, t.final_state.agent.col) += 1.0;
    }
  }
  const double total = counts.sum();
  if (total == 0.0) {
    throw Error(ErrorCode::kEmptyInput, "no visited tiles to count");
  }
  return counts / total;
}

namespace {

// Successive-shortest-path min-cost flow on the bipartite transport network
// source -> surplus tiles -> deficit tiles -> sink. Bellman-Ford is enough at
// these sizes and copes with the negative reverse edges directly.
class TransportSolver {
 public:
  explicit TransportSolver(int nodes) : adjacency_(static_cast<std::size_t>(nodes)) {}

  void add_edge(int from, int to, double capacity, double cost) {
    adjacency_[static_cast<std::size_t>(from)].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, capacity, cost});
    adjacency_[static_cast<std::size_t>(to)].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, 0.0, -cost});
  }

  double solve(int source, int sink, double eps) {
    const auto n = adjacency_.size();
    double total = 0.0;
    while (true) {
      std::vector<double> dist(n, std::numeric_limits<double>::infinity());
      std::vector<int> via(n, -1);
      dist[static_cast<std::size_t>(source)] = 0.0;
      for (std::size_t round = 0; round + 1 < n; ++round) {
        bool changed = false;
        for (std::size_t u = 0; u < n; ++u) {
          if (dist[u] == std::numeric_limits<double>::infinity()) continue;
          for (int e : adjacency_[u]) {
            const Edge& edge = edges_[static_cast<std::size_t>(e)];
            if (edge.capacity <= eps) continue;
            const double candidate = dist[u] + edge.cost;
            auto& slot = dist[static_cast<std::size_t>(edge.to)];
            if (candidate < slot - 1e-12) {
              slot = candidate;
              via[static_cast<std::size_t>(edge.to)] = e;
              changed = true;
            }
          }
        }
        if (!changed) break;
      }
      if (via[static_cast<std::size_t>(sink)] == -1) return total;

      double push = std::numeric_limits<double>::infinity();
      for (int v = sink; v != source;) {
        const int e = via[static_cast<std::size_t>(v)];
        push = std::min(push, edges_[static_cast<std::size_t>(e)].capacity);
        v = edges_[static_cast<std::size_t>(e ^ 1)].to;
      }
      for (int v = sink; v != source;) {
        const int e = via[static_cast<std::size_t>(v)];
        edges_[static_cast<std::size_t>(e)].capacity -= push;
        edges_[static_cast<std::size_t>(e ^ 1)].capacity += push;
        total += push * edges_[static_cast<std::size_t>(e)].cost;
        v = edges_[static_cast<std::size_t>(e ^ 1)].to;
      }
    }
  }

 private:
  struct Edge {
    int to;
    double capacity;
    double cost;
  };
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace

double ws_distance(const Eigen::MatrixXd& mu, const Eigen::MatrixXd& nu) {
  if (mu.rows() != nu.rows() || mu.cols() != nu.cols()) {
    throw Error(ErrorCode::kBadDistribution, "tile distributions differ in shape");
  }
  check_distribution(mu);
  check_distribution(nu);

  const Eigen::MatrixXd diff = mu - nu;
  std::vector<Eigen::Index> surplus;
  std::vector<Eigen::Index> deficit;
  constexpr double kEps = 1e-15;
  for (Eigen::Index i = 0; i < diff.size(); ++i) {
    if (diff(i) > kEps) surplus.push_back(i);
    if (diff(i) < -kEps) deficit.push_back(i);
  }
  if (surplus.empty() || deficit.empty()) return 0.0;

  const auto ns = static_cast<int>(surplus.size());
  const auto nd = static_cast<int>(deficit.size());
  const int source = 0;
  const int sink = ns + nd + 1;
  TransportSolver solver(ns + nd + 2);
  const Eigen::Index rows = mu.rows();
  auto row_of = [&](Eigen::Index i) { return static_cast<double>(i % rows); };
  auto col_of = [&](Eigen::Index i) { return static_cast<double>(i / rows); };
  for (int a = 0; a < ns; ++a) {
    solver.add_edge(source, 1 + a, diff(surplus[static_cast<std::size_t>(a)]), 0.0);
    for (int b = 0; b < nd; ++b) {
      const Eigen::Index s = surplus[static_cast<std::size_t>(a)];
      const Eigen::Index d = deficit[static_cast<std::size_t>(b)];
      const double cost = std::abs(row_of(s) - row_of(d)) + std::abs(col_of(s) - col_of(d));
      solver.add_edge(1 + a, 1 + ns + b, std::numeric_limits<double>::infinity(), cost);
    }
  }
  for (int b = 0; b < nd; ++b) {
    solver.add_edge(1 + ns + b, sink, -diff(deficit[static_cast<std::size_t>(b)]), 0.0);
  }
  return solver.solve(source, sink, kEps);
}

}  // namespace labyrinth
