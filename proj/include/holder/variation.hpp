// Copyright 2026 The Holder Arcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "holder/arc.hpp"
#include "holder/spiral.hpp"

namespace holder {

/// Arcs above this many samples are refused by s_variation (O(n^2) time).
inline constexpr std::size_t variation_size_cap = 30000;

/// Largest arc the exhaustive oracle accepts (2^(n-2) partitions).
inline constexpr std::size_t brute_force_size_cap = 16;

struct VariationResult {
    double s = 1.0;
    double value = 0.0;
    /// prefix[i]: s-variation of the sub-arc [0, i]. prefix[0] = 0,
    /// nondecreasing, prefix.back() = value.
    std::vector<double> prefix;
    /// One optimal partition: 0 = b_0 < b_1 < ... < b_k = n-1.
    std::vector<std::size_t> breakpoints;
};

/// Vertex-restricted s-variation
///
///     V = max over partitions 0 = b_0 < ... < b_k = n-1 of
///         sum_i diam([b_{i-1}, b_i])^s
///
/// by dynamic programming over prefixes: V[i] = max_{j<i} V[j] +
/// diam([j,i])^s. The diameters diam([j,i]) are kept in one row that is
/// updated from the suffix maxima of |p_k - p_i| as i advances, so the
/// cost is O(n^2) time and O(n) memory.
///
/// Each V[i] is rounded so that V[i] >= V[j] + diam([j,i])^s holds for the
/// exact real sum, for every j < i. Consequently fl(V[i] - V[j]) is never
/// below diam([j,i])^s, which makes the Hölder certificate of build_param()
/// exact in floating point.
///
/// Among optimal transitions the largest j wins, so the recovered
/// partition has the shortest possible last piece.
///
/// Throws ParameterError for s < 1 and SizeError above `max_points`.
VariationResult s_variation(const SampledArc& arc, double s,
                            std::size_t max_points = variation_size_cap);

/// Exhaustive maximum over all 2^(n-2) vertex-restricted partitions, with
/// diameters from direct pairwise distances. Test oracle for s_variation.
double brute_force_variation(const SampledArc& arc, double s);

/// Sum of diam^s over consecutive breakpoint pairs.
double partition_sum(const SampledArc& arc, const std::vector<std::size_t>& breakpoints, double s);

struct RefinementPoint {
    std::size_t samples_per_turn = 0;
    double value = 0.0;
};

/// s_variation of make_arc(m) for each m in `m_list` (strictly increasing).
std::vector<RefinementPoint>
refinement_study(const std::function<SampledArc(std::size_t)>& make_arc, double s,
                 const std::vector<std::size_t>& m_list);

/// Same, for `spec` generated at each samples-per-turn value. With nested
/// grids (each m dividing the next) the values are nondecreasing.
std::vector<RefinementPoint> refinement_study(const SpiralSpec& spec, double s,
                                              const std::vector<std::size_t>& m_list);

} // namespace holder
