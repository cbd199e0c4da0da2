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

#include "approxmaj/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace approxmaj {

namespace {

// Beyond this, a negative tail after the cut is a bug rather than rounding.
constexpr double kTailNoiseLimit = 1e-7;

std::vector<std::size_t> canonical_perm(const Distribution& p) {
  return {p.perm().begin(), p.perm().end()};
}

double distance_to_point_mass(const Distribution& p) {
  double d = std::abs(p[0] - 1.0);
  for (std::size_t i = 1; i < p.size(); ++i) d += p[i];
  return d;
}

double distance_to_uniform(const Distribution& p) {
  const double level = 1.0 / static_cast<double>(p.size());
  double d = 0.0;
  for (double v : p.values()) d += std::abs(v - level);
  return d;
}

// Number of leading entries of r = (p_1 + delta/2, p_2, ..., p_k) kept intact,
// or nullopt when the delta-ball already contains the point mass. When every
// prefix of r fits under 1 (only possible for delta ~ 0) the cut falls on the
// last entry, so the result is capped at k - 1.
std::optional<std::size_t> steepest_cut(const Distribution& p, double delta, const Tolerances& tol) {
  if (distance_to_point_mass(p) <= delta) return std::nullopt;
  const std::size_t k = p.size();
  double running = 0.0;
  std::size_t l_star = 0;
  for (std::size_t l = 1; l <= k; ++l) {
    running += p[l - 1] + (l == 1 ? 0.5 * delta : 0.0);
    if (running > 1.0 + tol.tau) break;
    l_star = l;
  }
  if (l_star == 0) throw Error(ErrorCode::kInternal, "lifted largest entry exceeds one outside the point-mass branch");
  return std::min(l_star, k - 1);
}

struct FlattestLevels {
  LevelSolution upper;
  LevelSolution lower;
};

std::optional<FlattestLevels> flattest_levels(const Distribution& p, double delta, const Tolerances& tol) {
  if (distance_to_uniform(p) <= delta) return std::nullopt;
  const double budget = 0.5 * delta;
  return FlattestLevels{solve_upper_level(p, budget, tol), solve_lower_level(p, budget, tol)};
}

}  // namespace

void validate_delta(double delta) {
  if (!(delta >= 0.0 && delta <= 2.0)) {
    throw Error(ErrorCode::kInvalidDelta, "delta = " + std::to_string(delta) + " is outside [0, 2]");
  }
}

LevelSolution solve_upper_level(const Distribution& p, double budget, const Tolerances& tol) {
  const auto values = p.values();
  const double total = std::accumulate(values.begin(), values.end(), 0.0);
  if (!(budget >= 0.0 && budget <= total + tol.tau)) {
    throw Error(ErrorCode::kBudgetOutOfRange, "upper-level budget " + std::to_string(budget) + " not in [0, sum(p)]");
  }
  const std::size_t k = values.size();
  double level = 0.0;
  double head = 0.0;
  // On the segment where the top m entries are cut, eps(x) = S_m - m x; the
  // root is accepted once it falls at or above the next breakpoint p_{m+1}.
  for (std::size_t m = 1; m <= k; ++m) {
    head += values[m - 1];
    const double next = m < k ? values[m] : 0.0;
    level = (head - budget) / static_cast<double>(m);
    if (level >= next) break;
  }
  level = std::max(level, 0.0);
  const auto count = static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [&](double v) { return v >= level - tol.tau; }));
  return {level, count};
}

LevelSolution solve_lower_level(const Distribution& p, double budget, const Tolerances& tol) {
  const auto values = p.values();
  const std::size_t k = values.size();
  const double total = std::accumulate(values.begin(), values.end(), 0.0);
  const double ceiling = static_cast<double>(k) - total;
  if (!(budget >= 0.0 && budget <= ceiling + tol.tau)) {
    throw Error(ErrorCode::kBudgetOutOfRange, "lower-level budget " + std::to_string(budget) + " not in [0, k - sum(p)]");
  }
  double level = 0.0;
  double tail = 0.0;
  for (std::size_t m = 1; m <= k; ++m) {
    tail += values[k - m];
    const double next = m < k ? values[k - m - 1] : 1.0;
    level = (budget + tail) / static_cast<double>(m);
    if (level <= next) break;
  }
  level = std::min(level, 1.0);
  const auto count = static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [&](double v) { return v <= level + tol.tau; }));
  return {level, k - count + 1};
}

SmoothedResult steepest(const Distribution& p, double delta, const Tolerances& tol) {
  validate_delta(delta);
  const std::size_t k = p.size();
  const auto cut = steepest_cut(p, delta, tol);
  if (!cut) {
    std::vector<double> e1(k, 0.0);
    e1[0] = 1.0;
    return {Distribution::from_canonical(std::move(e1), canonical_perm(p), tol), ApproxKind::kSteepest, delta, true,
            std::nullopt, std::nullopt};
  }

  const std::size_t l_star = *cut;
  std::vector<double> values(k, 0.0);
  double kept = 0.0;
  for (std::size_t i = 0; i < l_star; ++i) {
    values[i] = p[i] + (i == 0 ? 0.5 * delta : 0.0);
    kept += values[i];
  }
  double tail = 1.0 - kept;
  bool renormalize = false;
  if (tail < 0.0) {
    if (tail < -kTailNoiseLimit) throw Error(ErrorCode::kInternal, "steepest tail is negative: " + std::to_string(tail));
    tail = 0.0;
    renormalize = true;
  }
  values[l_star] = tail;
  if (renormalize) {
    for (double& v : values) v /= kept;
  }

  return {Distribution::from_canonical(std::move(values), canonical_perm(p), tol),
          ApproxKind::kSteepest,
          delta,
          false,
          SteepestMeta{l_star, tail},
          std::nullopt};
}

SmoothedResult flattest(const Distribution& p, double delta, const Tolerances& tol) {
  validate_delta(delta);
  const std::size_t k = p.size();
  const auto levels = flattest_levels(p, delta, tol);
  if (!levels) {
    return {Distribution::from_canonical(std::vector<double>(k, 1.0 / static_cast<double>(k)), canonical_perm(p), tol),
            ApproxKind::kFlattest, delta, true, std::nullopt, std::nullopt};
  }

  const auto [upper, lower] = *levels;
  std::vector<double> values(p.values().begin(), p.values().end());
  for (std::size_t i = lower.boundary - 1; i < k; ++i) values[i] = lower.level;
  // The cut set wins if the two level sets touch; they can only meet when the
  // levels are within 2 tau of each other.
  for (std::size_t i = 0; i < upper.boundary; ++i) values[i] = upper.level;

  return {Distribution::from_canonical(std::move(values), canonical_perm(p), tol),
          ApproxKind::kFlattest,
          delta,
          false,
          std::nullopt,
          FlattestMeta{upper.level, lower.level, upper.boundary, lower.boundary}};
}

SmoothedResult approximate(const Distribution& p, double delta, ApproxKind kind, const Tolerances& tol) {
  return kind == ApproxKind::kSteepest ? steepest(p, delta, tol) : flattest(p, delta, tol);
}

LorenzCurve lorenz_steepest(const Distribution& p, double delta, const Tolerances& tol) {
  validate_delta(delta);
  const std::size_t k = p.size();
  const std::size_t l_star = steepest_cut(p, delta, tol).value_or(0);
  LorenzCurve curve;
  curve.cumulative.assign(k + 1, 1.0);
  curve.cumulative[0] = 0.0;
  double running = 0.0;
  for (std::size_t l = 1; l <= l_star; ++l) {
    running += p[l - 1];
    curve.cumulative[l] = running + 0.5 * delta;
  }
  return curve;
}

LorenzCurve lorenz_flattest(const Distribution& p, double delta, const Tolerances& tol) {
  validate_delta(delta);
  const std::size_t k = p.size();
  const double kd = static_cast<double>(k);
  LorenzCurve curve;
  curve.cumulative.resize(k + 1);
  const auto levels = flattest_levels(p, delta, tol);
  if (!levels) {
    for (std::size_t l = 0; l <= k; ++l) curve.cumulative[l] = static_cast<double>(l) / kd;
    return curve;
  }
  const auto [upper, lower] = *levels;
  double running = 0.0;
  curve.cumulative[0] = 0.0;
  for (std::size_t l = 1; l <= k; ++l) {
    running += p[l - 1];
    if (l <= upper.boundary) {
      curve.cumulative[l] = static_cast<double>(l) * upper.level;
    } else if (l >= lower.boundary) {
      curve.cumulative[l] = 1.0 - static_cast<double>(k - l) * lower.level;
    } else {
      curve.cumulative[l] = running - 0.5 * delta;
    }
  }
  return curve;
}

}  // namespace approxmaj
