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
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "approxmaj/distribution.hpp"

namespace approxmaj {

// Random generators used as test oracles. Each call takes an explicit seed and
// is a pure function of its arguments.

/// Draws a random distribution on k points. The draw mixes Dirichlet samples of
/// varying concentration with occasional sparse and coarsely quantized vectors,
/// so ties and exact zeros show up regularly.
Distribution random_distribution(std::size_t k, std::mt19937_64& rng);
Distribution random_distribution(std::size_t k, std::uint64_t seed);

/// Returns p' = p + t (u - p) for a random distribution u with t chosen so that
/// ||p - p'||_1 <= delta. The result is canonicalized before it is returned.
Distribution sample_delta_ball(const Distribution& p, double delta, std::uint64_t seed);

/// Applies the doubly-stochastic matrix sum_m weights[m] * P_m to canonical p,
/// where P_m sends entry i to position perms[m][i].
Distribution apply_permutation_mixture(const Distribution& p, std::span<const std::vector<std::size_t>> perms,
                                       std::span<const double> weights);

/// Random p and q = D p for a random mixture D of permutations, so p majorizes q.
std::pair<Distribution, Distribution> sample_majorized_pair(std::size_t k, std::uint64_t seed);

}  // namespace approxmaj
