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

#ifndef LABYRINTH_METRICS_HPP_
#define LABYRINTH_METRICS_HPP_

#include <Eigen/Core>

#include <cmath>
#include <span>

#include "labyrinth/env.hpp"
#include "labyrinth/error.hpp"

namespace labyrinth {

/// Empirical action frequencies (up, down, right, left) over every step.
Eigen::Vector4d action_distribution(std::span<const Trajectory> trajectories);

/// height x width visit frequencies over every visited state, the final
/// state of each episode included.
Eigen::MatrixXd tile_distribution(std::span<const Trajectory> trajectories,
                                  Dims dims);

inline constexpr double kDistributionTolerance = 1e-9;

template <typename Derived>
void check_distribution(const Eigen::DenseBase<Derived>& p) {
  using Scalar = typename Derived::Scalar;
  if (p.size() == 0) {
    throw Error(ErrorCode::kBadDistribution, "empty distribution");
  }
  if (!p.derived().array().isFinite().all() || (p.derived().array() < Scalar(0)).any()) {
    throw Error(ErrorCode::kBadDistribution, "negative or non-finite mass");
  }
  if (std::abs(static_cast<double>(p.sum()) - 1.0) > kDistributionTolerance) {
    throw Error(ErrorCode::kBadDistribution, "mass does not sum to 1");
  }
}

/// Jensen-Shannon divergence in bits, in [0, 1].
template <typename DerivedP, typename DerivedQ>
typename DerivedP::Scalar js_divergence(const Eigen::DenseBase<DerivedP>& p,
                                        const Eigen::DenseBase<DerivedQ>& q) {
  using Scalar = typename DerivedP::Scalar;
  if (p.rows() != q.rows() || p.cols() != q.cols()) {
    throw Error(ErrorCode::kBadDistribution, "distribution shapes differ");
  }
  check_distribution(p);
  check_distribution(q);
  auto kl_to_mid = [](Scalar a, Scalar m) {
    return a > Scalar(0) ? a * std::log2(a / m) : Scalar(0);
  };
  Scalar total(0);
  for (Eigen::Index j = 0; j < p.cols(); ++j) {
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
      const Scalar a = p.derived()(i, j);
      const Scalar b = q.derived()(i, j);
      const Scalar m = (a + b) / Scalar(2);
      total += kl_to_mid(a, m) + kl_to_mid(b, m);
    }
  }
  total /= Scalar(2);
  return total < Scalar(0) ? Scalar(0) : total;
}

/// Square root of the base-2 Jensen-Shannon divergence, in [0, 1].
template <typename DerivedP, typename DerivedQ>
typename DerivedP::Scalar js_distance(const Eigen::DenseBase<DerivedP>& p,
                                      const Eigen::DenseBase<DerivedQ>& q) {
  using std::sqrt;
  return sqrt(js_divergence(p, q));
}

/// Exact Wasserstein-1 distance between two height x width tile
/// distributions under the Manhattan ground metric, by a min-cost
/// transportation solve.
double ws_distance(const Eigen::MatrixXd& mu, const Eigen::MatrixXd& nu);

}  // namespace labyrinth

#endif  // LABYRINTH_METRICS_HPP_
