// Copyright 2026 The approxmaj Authors
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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "approxmaj/distribution.hpp"

namespace approxmaj {

/// True iff every prefix sum of sorted `a` is at least the matching prefix sum
/// of sorted `b`, less `tau`.
bool weakly_majorizes(const WeightedVector& a, const WeightedVector& b, double tau = kDefaultTolerances.tau);

bool majorizes(const Distribution& p, const Distribution& q, double tau = kDefaultTolerances.tau);

/// Smallest Lorenz abscissa l (1-based) at which p's prefix sum falls more
/// than `tau` below q's, or nullopt when p majorizes q.
std::optional<std::size_t> first_violation(const Distribution& p, const Distribution& q,
                                           double tau = kDefaultTolerances.tau);

/// Minimal l1 smoothing that makes p majorize q: 2 max_l sum_{i<=l} (q_i - p_i),
/// clamped at zero when p already majorizes q.
double majorization_distance(const Distribution& p, const Distribution& q);

/// One T-transform: coordinates i and j are replaced by
/// ((1-t) x_i + t x_j, t x_i + (1-t) x_j).
struct TransferStep {
  std::size_t i = 0;
  std::size_t j = 0;
  double t = 0.0;
};

/// A chain of T-transforms and the doubly-stochastic matrix they multiply to.
/// `matrix` is row-major, k x k, and satisfies matrix * p == q on canonical
/// entries.
struct TransferPlan {
  std::vector<TransferStep> steps;
  std::vector<std::vector<double>> matrix;

  std::vector<double> apply(const Distribution& p) const;
};

/// Witness for p majorizing q built from at most k-1 T-transforms.
/// Throws NotMajorized when p does not majorize q within `tau`.
TransferPlan transfer_plan(const Distribution& p, const Distribution& q, double tau = kDefaultTolerances.tau);

}  // namespace approxmaj
