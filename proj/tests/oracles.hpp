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

// Test-only reference routes. None of these call into the code paths they are
// used to check.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "approxmaj/distribution.hpp"

namespace approxmaj::oracle {

inline std::vector<double> to_vector(const Distribution& d) { return {d.values().begin(), d.values().end()}; }

/// p majorizes q iff sum_i (p_i - t)^+ >= sum_i (q_i - t)^+ for every threshold t;
/// the extreme points of that family sit at the entries of either vector, so
/// checking those thresholds suffices. Independent of prefix-sum comparisons.
inline bool majorizes_by_thresholds(const std::vector<double>& p, const std::vector<double>& q, double tau) {
  std::vector<double> thresholds = p;
  thresholds.insert(thresholds.end(), q.begin(), q.end());
  for (double t : thresholds) {
    double sp = 0.0;
    double sq = 0.0;
    for (double v : p) sp += std::max(v - t, 0.0);
    for (double v : q) sq += std::max(v - t, 0.0);
    if (sp < sq - tau) return false;
  }
  return true;
}

/// Cut volume sum_{p_i >= x} (p_i - x).
inline double cut_volume(const std::vector<double>& p, double x) {
  double s = 0.0;
  for (double v : p) s += std::max(v - x, 0.0);
  return s;
}

/// Fill volume sum_{p_i <= y} (y - p_i).
inline double fill_volume(const std::vector<double>& p, double y) {
  double s = 0.0;
  for (double v : p) s += std::max(y - v, 0.0);
  return s;
}

/// Bisection on the monotone cut volume over [0, 1].
inline double bisect_upper_level(const std::vector<double>& p, double budget) {
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (cut_volume(p, mid) > budget ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

inline double bisect_lower_level(const std::vector<double>& p, double budget) {
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (fill_volume(p, mid) < budget ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// Smallest delta in [0, 2] for which `holds(delta)` is true, assuming the
/// predicate is monotone; bracketed to `width`.
inline double bisect_threshold(const std::function<bool(double)>& holds, double width) {
  double lo = 0.0;
  double hi = 2.0;
  if (holds(lo)) return 0.0;
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    (holds(mid) ? hi : lo) = mid;
  }
  return hi;
}

inline double l1(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

}  // namespace approxmaj::oracle
