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
#include <span>
#include <vector>

#include "approxmaj/error.hpp"

namespace approxmaj {

/// Numerical tolerances shared by every operation in the library.
///
/// `tau` governs internal comparisons (prefix-sum checks, level-solver
/// breakpoints, support counting). `tau_norm` is the slack accepted when a
/// vector is checked for unit sum. `tau_entry` bounds how negative an input
/// entry may be before it is rejected rather than clamped to zero.
struct Tolerances {
  double tau = 1e-9;
  double tau_norm = 1e-7;
  double tau_entry = 1e-9;
};

inline constexpr Tolerances kDefaultTolerances{};

enum class InputPolicy { kReject, kRenormalize };

/// A probability vector in canonical form: entries sorted non-increasingly,
/// nonnegative, and summing to one within `tau_norm`.
///
/// `perm()[i]` is the index in the original input of canonical entry `i`.
/// Instances are immutable once constructed.
class Distribution {
 public:
  /// Wraps values that are already canonical. Validates sortedness,
  /// nonnegativity, normalization and the permutation; throws on violation.
  static Distribution from_canonical(std::vector<double> values, std::vector<std::size_t> perm,
                                     const Tolerances& tol = kDefaultTolerances);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  std::span<const std::size_t> perm() const noexcept { return perm_; }
  double operator[](std::size_t i) const { return values_[i]; }

  /// Entries scattered back to the positions they had in the original input.
  std::vector<double> in_input_order() const;

 private:
  Distribution(std::vector<double> values, std::vector<std::size_t> perm)
      : values_(std::move(values)), perm_(std::move(perm)) {}

  std::vector<double> values_;
  std::vector<std::size_t> perm_;
};

/// Nonnegative vector with no normalization requirement.
class WeightedVector {
 public:
  explicit WeightedVector(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

/// Prefix sums of a canonical distribution. `cumulative[l]` is the mass of the
/// `l` largest entries, so `cumulative[0] == 0` and the curve has `k + 1` points.
struct LorenzCurve {
  std::vector<double> cumulative;

  std::size_t size() const noexcept { return cumulative.size(); }
  double operator[](std::size_t l) const { return cumulative[l]; }
};

/// Builds a canonical distribution from raw input using a stable descending sort.
Distribution make_distribution(std::span<const double> raw, InputPolicy policy = InputPolicy::kReject,
                               const Tolerances& tol = kDefaultTolerances);

Distribution uniform(std::size_t k);

/// The distribution (1, 0, ..., 0).
Distribution point_mass(std::size_t k);

/// Sum of absolute differences of the canonical (sorted) entries.
double l1_distance(const Distribution& p, const Distribution& q);

LorenzCurve lorenz(const Distribution& p);

}  // namespace approxmaj
