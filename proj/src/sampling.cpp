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

#include "approxmaj/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace approxmaj {

namespace {

std::vector<double> dirichlet(std::size_t k, double concentration, std::mt19937_64& rng) {
  std::gamma_distribution<double> gamma(concentration, 1.0);
  std::vector<double> out(k);
  double sum = 0.0;
  for (double& v : out) {
    v = gamma(rng);
    sum += v;
  }
  // Tiny concentrations can underflow every draw.
  if (!(sum > 0.0)) {
    std::fill(out.begin(), out.end(), 0.0);
    out[std::uniform_int_distribution<std::size_t>(0, k - 1)(rng)] = 1.0;
  }
  return out;
}

std::vector<double> raw_random_vector(std::size_t k, std::mt19937_64& rng) {
  const int mode = std::uniform_int_distribution<int>(0, 19)(rng);
  if (mode < 10) {
    static constexpr double kConcentrations[] = {0.2, 0.5, 1.0, 2.0, 5.0};
    const double c = kConcentrations[std::uniform_int_distribution<int>(0, 4)(rng)];
    return dirichlet(k, c, rng);
  }
  if (mode < 14) {
    // Sparse: Dirichlet(1) on a random support.
    const std::size_t support = std::uniform_int_distribution<std::size_t>(1, k)(rng);
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::shuffle(idx.begin(), idx.end(), rng);
    const std::vector<double> mass = dirichlet(support, 1.0, rng);
    std::vector<double> out(k, 0.0);
    for (std::size_t i = 0; i < support; ++i) out[idx[i]] = mass[i];
    return out;
  }
  if (mode < 19) {
    // Small integer weights: exact ties and zeros.
    std::uniform_int_distribution<int> weight(0, 4);
    std::vector<double> out(k);
    for (double& v : out) v = weight(rng);
    if (std::all_of(out.begin(), out.end(), [](double v) { return v == 0.0; })) out[0] = 1.0;
    return out;
  }
  return std::vector<double>(k, 1.0);
}

void check_delta(double delta) {
  if (!(delta >= 0.0 && delta <= 2.0)) throw Error(ErrorCode::kInvalidDelta, "delta must lie in [0, 2]");
}

constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

Distribution random_distribution(std::size_t k, std::mt19937_64& rng) {
  if (k == 0) throw Error(ErrorCode::kZeroDimension, "random_distribution needs k >= 1");
  const std::vector<double> raw = raw_random_vector(k, rng);
  return make_distribution(raw, InputPolicy::kRenormalize);
}

Distribution random_distribution(std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_distribution(k, rng);
}

Distribution sample_delta_ball(const Distribution& p, double delta, std::uint64_t seed) {
  check_delta(delta);
  const std::size_t k = p.size();
  std::mt19937_64 rng(seed);
  std::vector<double> target = random_distribution(k, rng).in_input_order();
  std::shuffle(target.begin(), target.end(), rng);

  double step = 0.0;
  for (std::size_t i = 0; i < k; ++i) step += std::abs(target[i] - p[i]);

  // Margin covers rounding in the step and in l1_distance itself.
  const double budget = std::max(0.0, delta * (1.0 - 1e-12) - 8.0 * static_cast<double>(k) * kEps);
  double t = step > 0.0 ? std::min(1.0, budget / step) : 0.0;
  // Half of the draws land on the sphere of radius delta, the rest inside.
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) t *= std::uniform_real_distribution<double>(0.0, 1.0)(rng);

  std::vector<double> moved(k);
  for (std::size_t i = 0; i < k; ++i) moved[i] = p[i] + t * (target[i] - p[i]);
  return make_distribution(moved);
}

Distribution apply_permutation_mixture(const Distribution& p, std::span<const std::vector<std::size_t>> perms,
                                       std::span<const double> weights) {
  if (perms.size() != weights.size() || perms.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "need one weight per permutation");
  }
  const std::size_t k = p.size();
  std::vector<double> out(k, 0.0);
  for (std::size_t m = 0; m < perms.size(); ++m) {
    if (perms[m].size() != k) throw Error(ErrorCode::kDimensionMismatch, "permutation size differs from k");
    if (!(weights[m] >= 0.0)) throw Error(ErrorCode::kNegativeEntry, "mixture weight must be >= 0");
    for (std::size_t i = 0; i < k; ++i) out[perms[m][i]] += weights[m] * p[i];
  }
  return make_distribution(out, InputPolicy::kRenormalize);
}

std::pair<Distribution, Distribution> sample_majorized_pair(std::size_t k, std::uint64_t seed) {
  if (k == 0) throw Error(ErrorCode::kZeroDimension, "sample_majorized_pair needs k >= 1");
  std::mt19937_64 rng(seed);
  Distribution p = random_distribution(k, rng);

  const std::size_t count = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  std::vector<std::vector<std::size_t>> perms(count, std::vector<std::size_t>(k));
  for (auto& perm : perms) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
  }
  std::vector<double> weights = dirichlet(count, 0.5, rng);
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double& w : weights) w /= total;

  Distribution q = apply_permutation_mixture(p, perms, weights);
  return {std::move(p), std::move(q)};
}

}  // namespace approxmaj
