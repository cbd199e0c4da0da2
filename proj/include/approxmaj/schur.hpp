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
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "approxmaj/distribution.hpp"
#include "approxmaj/smoothing.hpp"

namespace approxmaj {

enum class SchurDirection { kConvex, kConcave };

enum class LogBase { kTwo, kE };

enum class ExtremumMode { kMax, kMin };

/// A symmetric functional on distributions with a declared monotonicity
/// under majorization. The declaration is metadata; `direction_violations`
/// checks it statistically.
struct SchurFunction {
  std::string name;
  SchurDirection direction = SchurDirection::kConvex;
  std::function<double(const Distribution&)> eval;

  double operator()(const Distribution& p) const { return eval(p); }
};

inline constexpr double kInfiniteAlpha = std::numeric_limits<double>::infinity();

/// Renyi entropy H_alpha. alpha = 0 counts entries above `support_tau`,
/// alpha within 1e-6 of 1 is Shannon, alpha = inf is -log p_1.
SchurFunction renyi_entropy(double alpha, LogBase base = LogBase::kTwo, double support_tau = kDefaultTolerances.tau);

SchurFunction shannon_entropy(LogBase base = LogBase::kTwo);

/// p -> sum_i p_i^alpha for alpha > 1.
SchurFunction sum_of_powers(double alpha);

/// Parses "shannon", "renyi:<alpha>" or "sum_powers:<alpha>"; alpha may be "inf".
SchurFunction parse_function_spec(std::string_view spec, LogBase base = LogBase::kTwo);

/// Which approximation attains the requested extremum of f over the delta-ball.
ApproxKind extremal_kind(const SchurFunction& f, ExtremumMode mode);

/// Maximum of f over the l1 ball of radius delta around p.
double smooth_max(const SchurFunction& f, const Distribution& p, double delta,
                  const Tolerances& tol = kDefaultTolerances);

/// Minimum of f over the l1 ball of radius delta around p.
double smooth_min(const SchurFunction& f, const Distribution& p, double delta,
                  const Tolerances& tol = kDefaultTolerances);

double smooth_extremum(const SchurFunction& f, const Distribution& p, double delta, ExtremumMode mode,
                       const Tolerances& tol = kDefaultTolerances);

/// Extremum of f over n random samples of the delta-ball. With
/// `include_extremal` the steepest and flattest approximations join the
/// sample set, which makes the result tight.
double brute_force_extremum(const SchurFunction& f, const Distribution& p, double delta, std::size_t n,
                            std::uint64_t seed, ExtremumMode mode, bool include_extremal = true,
                            const Tolerances& tol = kDefaultTolerances);

/// Count of random majorized pairs (k in 2..8) on which f breaks its declared
/// direction by more than tau.
std::size_t direction_violations(const SchurFunction& f, std::size_t trials, std::uint64_t seed,
                                 double tau = kDefaultTolerances.tau);

/// Named collection of Schur functions. When built with validation on, every
/// registration runs the direction self-test and rejects failures.
class SchurRegistry {
 public:
  explicit SchurRegistry(bool validate = false, std::size_t trials = 1000) : validate_(validate), trials_(trials) {}

  /// Registry preloaded with shannon, renyi:{0,0.5,2,inf} and sum_powers:2.
  static SchurRegistry with_defaults(LogBase base = LogBase::kTwo, bool validate = false);

  void add(SchurFunction f);
  const SchurFunction& at(const std::string& name) const;
  bool contains(const std::string& name) const { return functions_.count(name) > 0; }
  std::vector<std::string> names() const;

 private:
  bool validate_;
  std::size_t trials_;
  std::map<std::string, SchurFunction> functions_;
};

}  // namespace approxmaj
