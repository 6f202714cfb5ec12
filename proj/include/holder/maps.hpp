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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holder/arc.hpp"

namespace holder {

/// Radial stretch z -> |z|^(beta-1) z, with 0 -> 0. Maps the circle of
/// radius rho onto the circle of radius rho^beta and keeps arguments, so
/// beta = r/p carries the polynomial spiral S_p onto S_r.
struct StretchMap {
    double beta = 1.0;

    Point operator()(const Point& z) const;
    StretchMap inverse() const { return {1.0 / beta}; }
    std::string description() const;
};

Point apply_stretch(const StretchMap& map, const Point& z);

/// Maps every sample; parameters and meta are kept.
SampledArc apply_stretch(const StretchMap& map, const SampledArc& arc);

/// k/K for k = 1..K with K = round(1/step).
std::vector<double> alpha_grid(double step);

struct HolderEstimateOptions {
    /// alpha is accepted while sup_pairs / sup_large_scale_pairs stays at
    /// or below this factor.
    double blowup_factor = 1.05;
    /// Pairs with d_src at or above this quantile form the large-scale
    /// reference set.
    double reference_quantile = 0.9;
    /// All pairs are used when there are at most this many; otherwise this
    /// many pairs are drawn with a seeded generator, index gaps distributed
    /// log-uniformly.
    std::size_t max_pairs = 1'000'000;
    std::uint64_t seed = 0x5eed'2026ULL;
};

struct HolderEstimate {
    double best_alpha = 0.0;
    std::vector<double> alphas;
    /// sup over pairs of d_dst / d_src^alpha
    std::vector<double> seminorms;
    /// the same sup restricted to the large-scale reference pairs
    std::vector<double> reference_seminorms;
    std::vector<double> blowup;
    std::size_t pairs_used = 0;
    bool all_pairs = false;
    double blowup_factor = 0.0;
    std::uint64_t seed = 0;
};

/// Finite-resolution probe of the Hölder exponent of the map src[i] ->
/// dst[i] between two arcs sampled on the same parameter grid.
///
/// For each alpha the seminorm over all sampled pairs is compared with the
/// seminorm over the large-scale pairs (d_src in the top decile). Past
/// the true exponent the supremum migrates to ever smaller scales and the
/// ratio grows; best_alpha is the largest grid value reached before the
/// ratio first exceeds the blow-up factor.
///
/// Throws CorrespondenceError when the parameter grids differ.
HolderEstimate empirical_holder(const SampledArc& src, const SampledArc& dst,
                                const std::vector<double>& alphas,
                                const HolderEstimateOptions& opts = {});

/// Competing upper bounds on alpha for alpha-Hölder maps between
/// elliptical spirals S_{p,q} -> S_{r,s_e}.
struct BoundsReport {
    double p = 0.0;
    double q = 0.0;
    double r = 0.0;
    double s_e = 0.0;
    /// (1 + s_e) / (2 + s_e - r), for p > 1
    std::optional<double> bound_41;
    /// (p + q + r + s_e - p r + q s_e) / ((2 + s_e - r)(p + q)), for p <= 1
    std::optional<double> bound_42;
    /// r / p, from the variation criterion; meaningful for p <= 1
    double bound_43 = 0.0;
    /// smallest dilatation of a quasiconformal map S_p -> S_r
    double qc_threshold = 0.0;
    std::string tightest;
    std::vector<std::string> narrative;
};

/// Requires 0 < p <= q, 0 < r <= s_e and r <= 1 (ParameterError).
BoundsReport exponent_bounds(double p, double q, double r, double s_e);

} // namespace holder
