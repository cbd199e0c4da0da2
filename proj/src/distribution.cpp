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

#include "approxmaj/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace approxmaj {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kNegativeEntry: return "NegativeEntry";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kZeroSum: return "ZeroSum";
    case ErrorCode::kZeroDimension: return "ZeroDimension";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidDelta: return "InvalidDelta";
    case ErrorCode::kNotMajorized: return "NotMajorized";
    case ErrorCode::kBudgetOutOfRange: return "BudgetOutOfRange";
    case ErrorCode::kNegativeAlpha: return "NegativeAlpha";
    case ErrorCode::kAlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::kUnknownFunction: return "UnknownFunction";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNotSchur: return "NotSchur";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool is_permutation_of_range(std::span<const std::size_t> perm) {
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t idx : perm) {
    if (idx >= perm.size() || seen[idx]) return false;
    seen[idx] = true;
  }
  return true;
}

std::vector<std::size_t> identity_perm(std::size_t k) {
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return perm;
}

}  // namespace

Distribution Distribution::from_canonical(std::vector<double> values, std::vector<std::size_t> perm,
                                          const Tolerances& tol) {
  if (values.empty()) throw Error(ErrorCode::kEmptyInput, "distribution has no entries");
  if (perm.size() != values.size() || !is_permutation_of_range(perm)) {
    throw Error(ErrorCode::kInternal, "perm is not a permutation of 0..k-1");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0) {
      throw Error(ErrorCode::kNegativeEntry, "entry " + std::to_string(i) + " is negative or not finite");
    }
    // Order violations up to tau are arithmetic noise; repair them so the
    // stored vector is exactly non-increasing.
    if (i > 0 && values[i] > values[i - 1]) {
      if (values[i] - values[i - 1] > tol.tau) {
        throw Error(ErrorCode::kInternal, "entries are not non-increasing at " + std::to_string(i));
      }
      values[i] = values[i - 1];
    }
    sum += values[i];
  }
  if (std::abs(sum - 1.0) > tol.tau_norm) {
    throw Error(ErrorCode::kNotNormalized, "entries sum to " + std::to_string(sum));
  }
  return Distribution(std::move(values), std::move(perm));
}

std::vector<double> Distribution::in_input_order() const {
  std::vector<double> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[perm_[i]] = values_[i];
  return out;
}

WeightedVector::WeightedVector(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw Error(ErrorCode::kNegativeEntry, "weighted vector entry must be >= 0");
  }
}

Distribution make_distribution(std::span<const double> raw, InputPolicy policy, const Tolerances& tol) {
  if (raw.empty()) throw Error(ErrorCode::kEmptyInput, "no entries given");
  std::vector<double> cleaned(raw.begin(), raw.end());
  for (std::size_t i = 0; i < cleaned.size(); ++i) {
    if (!std::isfinite(cleaned[i]) || cleaned[i] < -tol.tau_entry) {
      throw Error(ErrorCode::kNegativeEntry, "entry " + std::to_string(i) + " = " + std::to_string(cleaned[i]));
    }
    cleaned[i] = std::max(cleaned[i], 0.0);
  }
  const double sum = std::accumulate(cleaned.begin(), cleaned.end(), 0.0);
  if (policy == InputPolicy::kReject) {
    if (std::abs(sum - 1.0) > tol.tau_norm) {
      throw Error(ErrorCode::kNotNormalized, "entries sum to " + std::to_string(sum));
    }
  } else {
    if (!(sum > 0.0)) throw Error(ErrorCode::kZeroSum, "entries sum to zero");
    for (double& v : cleaned) v /= sum;
  }

  std::vector<std::size_t> perm = identity_perm(cleaned.size());
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return cleaned[a] > cleaned[b]; });
  std::vector<double> sorted(cleaned.size());
  for (std::size_t i = 0; i < perm.size(); ++i) sorted[i] = cleaned[perm[i]];
  return Distribution::from_canonical(std::move(sorted), std::move(perm), tol);
}

Distribution uniform(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kZeroDimension, "uniform distribution needs k >= 1");
  return Distribution::from_canonical(std::vector<double>(k, 1.0 / static_cast<double>(k)), identity_perm(k));
}

Distribution point_mass(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kZeroDimension, "point mass needs k >= 1");
  std::vector<double> values(k, 0.0);
  values[0] = 1.0;
  return Distribution::from_canonical(std::move(values), identity_perm(k));
}

double l1_distance(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) throw Error(ErrorCode::kDimensionMismatch, "l1_distance on different k");
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) total += std::abs(p[i] - q[i]);
  return total;
}

LorenzCurve lorenz(const Distribution& p) {
  LorenzCurve curve;
  curve.cumulative.reserve(p.size() + 1);
  curve.cumulative.push_back(0.0);
  double running = 0.0;
  for (double v : p.values()) {
    running += v;
    curve.cumulative.push_back(running);
  }
  return curve;
}

}  // namespace approxmaj
