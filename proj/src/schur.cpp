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

#include "approxmaj/schur.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "approxmaj/sampling.hpp"

namespace approxmaj {

namespace {

constexpr double kShannonWindow = 1e-6;

double log_scale(LogBase base) { return base == LogBase::kTwo ? 1.0 / std::log(2.0) : 1.0; }

std::string format_alpha(double alpha) {
  if (std::isinf(alpha)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", alpha);
  return buf;
}

double shannon_nats(const Distribution& p) {
  double h = 0.0;
  for (double v : p.values()) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

double parse_alpha(std::string_view text, std::string_view spec) {
  const std::string s(text);
  if (s == "inf" || s == "infinity") return kInfiniteAlpha;
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw Error(ErrorCode::kUnknownFunction, "cannot read alpha in '" + std::string(spec) + "'");
  }
  return value;
}

}  // namespace

SchurFunction shannon_entropy(LogBase base) {
  const double scale = log_scale(base);
  return {"shannon", SchurDirection::kConcave, [scale](const Distribution& p) { return scale * shannon_nats(p); }};
}

SchurFunction renyi_entropy(double alpha, LogBase base, double support_tau) {
  if (std::isnan(alpha) || alpha < 0.0) throw Error(ErrorCode::kNegativeAlpha, "renyi alpha must be >= 0");
  const double scale = log_scale(base);
  const std::string name = "renyi:" + format_alpha(alpha);

  if (std::isinf(alpha)) {
    return {name, SchurDirection::kConcave, [scale](const Distribution& p) { return -scale * std::log(p[0]); }};
  }
  if (alpha == 0.0) {
    return {name, SchurDirection::kConcave, [scale, support_tau](const Distribution& p) {
              const auto support = std::count_if(p.values().begin(), p.values().end(),
                                                 [&](double v) { return v > support_tau; });
              return scale * std::log(static_cast<double>(support));
            }};
  }
  if (std::abs(alpha - 1.0) < kShannonWindow) {
    return {name, SchurDirection::kConcave, [scale](const Distribution& p) { return scale * shannon_nats(p); }};
  }
  return {name, SchurDirection::kConcave, [scale, alpha](const Distribution& p) {
            double total = 0.0;
            for (double v : p.values()) {
              if (v > 0.0) total += std::pow(v, alpha);
            }
            return scale * std::log(total) / (1.0 - alpha);
          }};
}

SchurFunction sum_of_powers(double alpha) {
  if (!(alpha > 1.0) || std::isinf(alpha)) {
    throw Error(ErrorCode::kAlphaOutOfRange, "sum_of_powers needs finite alpha > 1");
  }
  return {"sum_powers:" + format_alpha(alpha), SchurDirection::kConvex, [alpha](const Distribution& p) {
            double total = 0.0;
            for (double v : p.values()) total += std::pow(v, alpha);
            return total;
          }};
}

SchurFunction parse_function_spec(std::string_view spec, LogBase base) {
  if (spec == "shannon") return shannon_entropy(base);
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorCode::kUnknownFunction, "unknown function '" + std::string(spec) + "'");
  const std::string_view family = spec.substr(0, colon);
  const double alpha = parse_alpha(spec.substr(colon + 1), spec);
  if (family == "renyi") return renyi_entropy(alpha, base);
  if (family == "sum_powers") return sum_of_powers(alpha);
  throw Error(ErrorCode::kUnknownFunction, "unknown function family '" + std::string(family) + "'");
}

ApproxKind extremal_kind(const SchurFunction& f, ExtremumMode mode) {
  const bool convex = f.direction == SchurDirection::kConvex;
  const bool want_max = mode == ExtremumMode::kMax;
  return convex == want_max ? ApproxKind::kSteepest : ApproxKind::kFlattest;
}

double smooth_extremum(const SchurFunction& f, const Distribution& p, double delta, ExtremumMode mode,
                       const Tolerances& tol) {
  return f(approximate(p, delta, extremal_kind(f, mode), tol).result);
}

double smooth_max(const SchurFunction& f, const Distribution& p, double delta, const Tolerances& tol) {
  return smooth_extremum(f, p, delta, ExtremumMode::kMax, tol);
}

double smooth_min(const SchurFunction& f, const Distribution& p, double delta, const Tolerances& tol) {
  return smooth_extremum(f, p, delta, ExtremumMode::kMin, tol);
}

double brute_force_extremum(const SchurFunction& f, const Distribution& p, double delta, std::size_t n,
                            std::uint64_t seed, ExtremumMode mode, bool include_extremal, const Tolerances& tol) {
  validate_delta(delta);
  if (n == 0) throw Error(ErrorCode::kEmptyInput, "brute_force_extremum needs n >= 1");
  const bool want_max = mode == ExtremumMode::kMax;
  double best = want_max ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
  auto consider = [&](double value) { best = want_max ? std::max(best, value) : std::min(best, value); };

  std::mt19937_64 seeds(seed);
  for (std::size_t i = 0; i < n; ++i) consider(f(sample_delta_ball(p, delta, seeds())));
  if (include_extremal) {
    consider(f(steepest(p, delta, tol).result));
    consider(f(flattest(p, delta, tol).result));
  }
  return best;
}

std::size_t direction_violations(const SchurFunction& f, std::size_t trials, std::uint64_t seed, double tau) {
  std::mt19937_64 seeds(seed);
  std::size_t violations = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t k = 2 + t % 7;
    const auto [p, q] = sample_majorized_pair(k, seeds());
    const double fp = f(p);
    const double fq = f(q);
    const bool ok = f.direction == SchurDirection::kConvex ? fp >= fq - tau : fp <= fq + tau;
    if (!ok) ++violations;
  }
  return violations;
}

SchurRegistry SchurRegistry::with_defaults(LogBase base, bool validate) {
  SchurRegistry registry(validate);
  registry.add(shannon_entropy(base));
  for (double alpha : {0.0, 0.5, 2.0, kInfiniteAlpha}) registry.add(renyi_entropy(alpha, base));
  registry.add(sum_of_powers(2.0));
  return registry;
}

void SchurRegistry::add(SchurFunction f) {
  if (validate_) {
    const std::size_t bad = direction_violations(f, trials_, /*seed=*/0x5c4a2u);
    if (bad > 0) {
      throw Error(ErrorCode::kNotSchur,
                  f.name + " broke its declared direction on " + std::to_string(bad) + " majorized pairs");
    }
  }
  std::string key = f.name;
  functions_.insert_or_assign(std::move(key), std::move(f));
}

const SchurFunction& SchurRegistry::at(const std::string& name) const {
  const auto it = functions_.find(name);
  if (it == functions_.end()) throw Error(ErrorCode::kUnknownFunction, "no function named '" + name + "'");
  return it->second;
}

std::vector<std::string> SchurRegistry::names() const {
  std::vector<std::string> out;
  out.reserve(functions_.size());
  for (const auto& [name, f] : functions_) out.push_back(name);
  return out;
}

}  // namespace approxmaj
