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

#include "approxmaj/distribution.hpp"

namespace approxmaj {

enum class ApproxKind { kSteepest, kFlattest };

/// Construction details of a steepest approximation. `l_star` is the number of
/// leading entries copied from the lifted vector (p_1 + delta/2, p_2, ...);
/// `tail_value` is the entry at position l_star + 1 (1-based).
struct SteepestMeta {
  std::size_t l_star = 0;
  double tail_value = 0.0;
};

/// Construction details of a flattest approximation. Entries 1..l_i (1-based)
/// were cut down to `x_star`; entries l_j..k were raised to `y_star`.
struct FlattestMeta {
  double x_star = 0.0;
  double y_star = 0.0;
  std::size_t l_i = 0;
  std::size_t l_j = 0;
};

/// An extremal delta-approximation together with how it was built. Exactly one
/// of the meta fields is set, and only when `clamped` is false.
struct SmoothedResult {
  Distribution result;
  ApproxKind kind;
  double delta;
  bool clamped;
  std::optional<SteepestMeta> steepest;
  std::optional<FlattestMeta> flattest;
};

/// Solution of a water-filling level equation together with the boundary of
/// the affected index set (both expressed as 1-based Lorenz abscissae).
struct LevelSolution {
  double level = 0.0;
  std::size_t boundary = 0;
};

/// The element of the delta-ball around p that majorizes every other element.
SmoothedResult steepest(const Distribution& p, double delta, const Tolerances& tol = kDefaultTolerances);

/// The element of the delta-ball around p that every other element majorizes.
SmoothedResult flattest(const Distribution& p, double delta, const Tolerances& tol = kDefaultTolerances);

/// Solves sum_{p_i >= x} (p_i - x) = budget for x. `boundary` is |{i : p_i >= x - tau}|.
///
/// The cut function is piecewise linear with breakpoints at the entries of p,
/// so a single pass over the sorted entries finds the segment holding the
/// root. Throws BudgetOutOfRange unless 0 <= budget <= sum(p).
LevelSolution solve_upper_level(const Distribution& p, double budget, const Tolerances& tol = kDefaultTolerances);

/// Solves sum_{p_i <= y} (y - p_i) = budget for y. `boundary` is the smallest
/// 1-based index with p_i <= y + tau. Throws BudgetOutOfRange unless
/// 0 <= budget <= k - sum(p).
LevelSolution solve_lower_level(const Distribution& p, double budget, const Tolerances& tol = kDefaultTolerances);

/// Lorenz curve of steepest(p, delta) from its closed form.
LorenzCurve lorenz_steepest(const Distribution& p, double delta, const Tolerances& tol = kDefaultTolerances);

/// Lorenz curve of flattest(p, delta) from its closed form.
LorenzCurve lorenz_flattest(const Distribution& p, double delta, const Tolerances& tol = kDefaultTolerances);

SmoothedResult approximate(const Distribution& p, double delta, ApproxKind kind,
                           const Tolerances& tol = kDefaultTolerances);

void validate_delta(double delta);

}  // namespace approxmaj
