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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "approxmaj/sampling.hpp"

using namespace approxmaj;

namespace {

Distribution dist(std::vector<double> v) { return make_distribution(v); }

const Distribution kRefP = make_distribution(std::vector<double>{0.6, 0.3, 0.1});

}  // namespace

TEST(Renyi, Examples) {
  EXPECT_NEAR(renyi_entropy(1.0)(uniform(4)), 2.0, 1e-12);
  EXPECT_NEAR(renyi_entropy(kInfiniteAlpha)(kRefP), 0.7369655941662062, 1e-12);
  EXPECT_NEAR(renyi_entropy(0.0)(dist({0.8, 0.2, 0.0})), 1.0, 1e-12);
  EXPECT_NEAR(renyi_entropy(0.5)(kRefP), 1.4248340985897248, 1e-12);
  EXPECT_NEAR(renyi_entropy(2.0)(kRefP), 1.120294233717712, 1e-12);
  EXPECT_NEAR(shannon_entropy()(kRefP), 1.295461844238322, 1e-12);
}

TEST(Renyi, NatsAndShannonWindow) {
  EXPECT_NEAR(renyi_entropy(1.0, LogBase::kE)(uniform(4)), std::log(4.0), 1e-12);
  EXPECT_NEAR(renyi_entropy(1.0 + 1e-7)(kRefP), shannon_entropy()(kRefP), 1e-12);
  // Just outside the window the generic formula is used and still close.
  EXPECT_NEAR(renyi_entropy(1.0 + 1e-4)(kRefP), shannon_entropy()(kRefP), 1e-3);
}

TEST(Renyi, ZeroProbabilitiesContributeNothing) {
  EXPECT_NEAR(shannon_entropy()(dist({0.5, 0.5, 0.0})), 1.0, 1e-12);
  EXPECT_NEAR(renyi_entropy(2.0)(dist({0.5, 0.5, 0.0})), 1.0, 1e-12);
}

TEST(Renyi, RejectsNegativeAlpha) {
  try {
    renyi_entropy(-0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNegativeAlpha);
  }
}

TEST(Renyi, NonIncreasingInAlpha) {
  std::mt19937_64 rng(71);
  const std::vector<SchurFunction> family{renyi_entropy(0.0), renyi_entropy(0.5), renyi_entropy(1.0),
                                          renyi_entropy(2.0), renyi_entropy(kInfiniteAlpha)};
  for (int trial = 0; trial < 500; ++trial) {
    const Distribution p = random_distribution(1 + trial % 8, rng);
    for (std::size_t a = 1; a < family.size(); ++a) EXPECT_LE(family[a](p), family[a - 1](p) + 1e-9);
  }
}

TEST(SumOfPowers, Examples) {
  const SchurFunction f = sum_of_powers(2.0);
  EXPECT_NEAR(f(uniform(2)), 0.5, 1e-15);
  EXPECT_NEAR(f(point_mass(2)), 1.0, 1e-15);
  EXPECT_NEAR(f(dist({0.8, 0.2, 0.0})), 0.68, 1e-15);
  EXPECT_EQ(f.direction, SchurDirection::kConvex);
  EXPECT_THROW(sum_of_powers(1.0), Error);
  EXPECT_THROW(sum_of_powers(0.5), Error);
}

TEST(ParseFunctionSpec, KnownAndUnknown) {
  EXPECT_EQ(parse_function_spec("shannon").name, "shannon");
  EXPECT_EQ(parse_function_spec("renyi:inf").name, "renyi:inf");
  EXPECT_EQ(parse_function_spec("renyi:0.5").name, "renyi:0.5");
  EXPECT_EQ(parse_function_spec("sum_powers:2").name, "sum_powers:2");
  for (const char* bad : {"tsallis:2", "renyi", "renyi:abc", "renyi:2x", ""}) {
    try {
      parse_function_spec(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kUnknownFunction) << bad;
    }
  }
  EXPECT_THROW(parse_function_spec("renyi:-1"), Error);
}

TEST(SmoothExtremum, Examples) {
  EXPECT_NEAR(smooth_max(shannon_entropy(), kRefP, 0.4), 1.5709505944546684, 1e-12);
  EXPECT_NEAR(smooth_max(renyi_entropy(0.0), kRefP, 0.4), 1.584962500721156, 1e-12);
  EXPECT_NEAR(smooth_min(renyi_entropy(kInfiniteAlpha), kRefP, 0.4), 0.3219280948873623, 1e-12);
  EXPECT_NEAR(smooth_min(sum_of_powers(2.0), kRefP, 0.4), 0.34, 1e-12);
  for (const auto& f : {shannon_entropy(), renyi_entropy(2.0), sum_of_powers(3.0)}) {
    EXPECT_DOUBLE_EQ(smooth_max(f, kRefP, 0.0), f(kRefP));
    EXPECT_DOUBLE_EQ(smooth_min(f, kRefP, 0.0), f(kRefP));
  }
  EXPECT_THROW(smooth_max(shannon_entropy(), kRefP, 2.5), Error);
}

TEST(SmoothExtremum, PicksApproximationByDirection) {
  EXPECT_EQ(extremal_kind(sum_of_powers(2), ExtremumMode::kMax), ApproxKind::kSteepest);
  EXPECT_EQ(extremal_kind(sum_of_powers(2), ExtremumMode::kMin), ApproxKind::kFlattest);
  EXPECT_EQ(extremal_kind(shannon_entropy(), ExtremumMode::kMax), ApproxKind::kFlattest);
  EXPECT_EQ(extremal_kind(shannon_entropy(), ExtremumMode::kMin), ApproxKind::kSteepest);
}

TEST(BruteForce, Examples) {
  const SchurFunction h = shannon_entropy();
  EXPECT_DOUBLE_EQ(brute_force_extremum(h, kRefP, 0.4, 1, 0, ExtremumMode::kMax), smooth_max(h, kRefP, 0.4));
  EXPECT_NEAR(brute_force_extremum(h, kRefP, 0.4, 2000, 7, ExtremumMode::kMax), 1.5709505944546684, 1e-9);
  EXPECT_NEAR(brute_force_extremum(h, kRefP, 0.0, 50, 7, ExtremumMode::kMax), h(kRefP), 1e-12);
  EXPECT_NEAR(brute_force_extremum(h, kRefP, 0.0, 50, 7, ExtremumMode::kMin), h(kRefP), 1e-12);
  EXPECT_THROW(brute_force_extremum(h, kRefP, -1.0, 5, 0, ExtremumMode::kMax), Error);
}

TEST(BruteForce, SmoothedValuesDominateSamplesAndMatchOracle) {
  std::mt19937_64 rng(73);
  const SchurRegistry registry = SchurRegistry::with_defaults();
  for (int trial = 0; trial < 40; ++trial) {
    const Distribution p = random_distribution(2 + trial % 7, rng);
    const double delta = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
    const std::uint64_t seed = rng();
    for (const auto& name : registry.names()) {
      const SchurFunction& f = registry.at(name);
      const double hi = smooth_max(f, p, delta);
      const double lo = smooth_min(f, p, delta);
      EXPECT_EQ(brute_force_extremum(f, p, delta, 300, seed, ExtremumMode::kMax), hi) << name;
      EXPECT_EQ(brute_force_extremum(f, p, delta, 300, seed, ExtremumMode::kMin), lo) << name;
      EXPECT_GE(hi, brute_force_extremum(f, p, delta, 300, seed, ExtremumMode::kMax, false) - 1e-9) << name;
      EXPECT_LE(lo, brute_force_extremum(f, p, delta, 300, seed, ExtremumMode::kMin, false) + 1e-9) << name;
    }
  }
}

TEST(SmoothExtremum, MonotoneUnderMajorizationForConvexFunctions) {
  const SchurFunction f = sum_of_powers(2.0);
  std::mt19937_64 rng(79);
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto [p, q] = sample_majorized_pair(2 + seed % 7, seed);
    const double delta = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
    EXPECT_GE(smooth_max(f, p, delta), smooth_max(f, q, delta) - 1e-9);
    EXPECT_GE(smooth_min(f, p, delta), smooth_min(f, q, delta) - 1e-9);
  }
}

TEST(Registry, DefaultsPassDirectionSelfTest) {
  const SchurRegistry registry = SchurRegistry::with_defaults(LogBase::kTwo, /*validate=*/true);
  EXPECT_EQ(registry.names().size(), 6u);
  EXPECT_TRUE(registry.contains("renyi:inf"));
  EXPECT_THROW(registry.at("nope"), Error);
}

TEST(Registry, RejectsMisdeclaredDirection) {
  SchurRegistry registry(/*validate=*/true, 200);
  SchurFunction wrong = shannon_entropy();
  wrong.name = "shannon-as-convex";
  wrong.direction = SchurDirection::kConvex;
  try {
    registry.add(wrong);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSchur);
  }
  EXPECT_FALSE(registry.contains("shannon-as-convex"));
  EXPECT_GT(direction_violations(wrong, 200, 1), 0u);
  EXPECT_EQ(direction_violations(shannon_entropy(), 1000, 1), 0u);
}
