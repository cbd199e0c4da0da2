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

#include "approxmaj/majorization.hpp"

#include <algorithm>
#include <functional>

namespace approxmaj {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw Error(ErrorCode::kDimensionMismatch, std::string(what) + ": vectors differ in length");
}

std::optional<std::size_t> first_prefix_violation(std::span<const double> a, std::span<const double> b, double tau) {
  double sum_a = 0.0;
  double sum_b = 0.0;
  for (std::size_t l = 0; l < a.size(); ++l) {
    sum_a += a[l];
    sum_b += b[l];
    if (sum_a < sum_b - tau) return l + 1;
  }
  return std::nullopt;
}

}  // namespace

bool weakly_majorizes(const WeightedVector& a, const WeightedVector& b, double tau) {
  require_same_size(a.size(), b.size(), "weakly_majorizes");
  std::vector<double> sa(a.values().begin(), a.values().end());
  std::vector<double> sb(b.values().begin(), b.values().end());
  std::sort(sa.begin(), sa.end(), std::greater<>());
  std::sort(sb.begin(), sb.end(), std::greater<>());
  return !first_prefix_violation(sa, sb, tau).has_value();
}

bool majorizes(const Distribution& p, const Distribution& q, double tau) {
  return !first_violation(p, q, tau).has_value();
}

std::optional<std::size_t> first_violation(const Distribution& p, const Distribution& q, double tau) {
  require_same_size(p.size(), q.size(), "majorizes");
  return first_prefix_violation(p.values(), q.values(), tau);
}

double majorization_distance(const Distribution& p, const Distribution& q) {
  require_same_size(p.size(), q.size(), "majorization_distance");
  double gap = 0.0;
  double worst = 0.0;
  // The full sums agree by normalization; only proper prefixes count.
  for (std::size_t l = 0; l + 1 < p.size(); ++l) {
    gap += q[l] - p[l];
    worst = std::max(worst, gap);
  }
  return 2.0 * worst;
}

std::vector<double> TransferPlan::apply(const Distribution& p) const {
  require_same_size(matrix.size(), p.size(), "TransferPlan::apply");
  std::vector<double> out(p.size(), 0.0);
  for (std::size_t r = 0; r < matrix.size(); ++r) {
    for (std::size_t c = 0; c < p.size(); ++c) out[r] += matrix[r][c] * p[c];
  }
  return out;
}

TransferPlan transfer_plan(const Distribution& p, const Distribution& q, double tau) {
  require_same_size(p.size(), q.size(), "transfer_plan");
  if (!majorizes(p, q, tau)) throw Error(ErrorCode::kNotMajorized, "p does not majorize q");

  const std::size_t k = p.size();
  TransferPlan plan;
  plan.matrix.assign(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) plan.matrix[i][i] = 1.0;

  std::vector<double> current(p.values().begin(), p.values().end());
  const std::span<const double> target = q.values();

  // Each pass moves mass from the first surplus coordinate to the first deficit
  // after it, and lands one of the two exactly on its target. A landed
  // coordinate is never touched again, so at most k-1 passes run.
  while (true) {
    std::size_t rich = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (current[i] - target[i] > tau) {
        rich = i;
        break;
      }
    }
    if (rich == k) break;
    std::size_t poor = k;
    for (std::size_t j = rich + 1; j < k; ++j) {
      if (target[j] - current[j] > tau) {
        poor = j;
        break;
      }
    }
    if (poor == k) break;

    const double surplus = current[rich] - target[rich];
    const double deficit = target[poor] - current[poor];
    const double moved = std::min(surplus, deficit);
    const double t = moved / (current[rich] - current[poor]);

    if (surplus <= deficit) {
      current[rich] = target[rich];
      current[poor] += moved;
    } else {
      current[poor] = target[poor];
      current[rich] -= moved;
    }

    auto& row_rich = plan.matrix[rich];
    auto& row_poor = plan.matrix[poor];
    for (std::size_t c = 0; c < k; ++c) {
      const double a = row_rich[c];
      const double b = row_poor[c];
      row_rich[c] = (1.0 - t) * a + t * b;
      row_poor[c] = t * a + (1.0 - t) * b;
    }
    plan.steps.push_back({rich, poor, t});
  }
  return plan;
}

}  // namespace approxmaj
