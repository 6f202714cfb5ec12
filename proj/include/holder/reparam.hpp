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
#include <span>
#include <utility>
#include <vector>

#include "holder/arc.hpp"
#include "holder/variation.hpp"

namespace holder {

/// The optimal (1/s)-Hölder parametrization F = f o psi^-1 sampled on the
/// grid: F(u[i]) = points[i], with u[i] = prefix[i] / variation_value the
/// normalized prefix s-variation.
struct HolderParam {
    std::vector<double> u;
    std::vector<Point> points;
    std::vector<double> prefix;
    double s = 1.0;
    double variation_value = 0.0;
};

/// Throws DegeneracyError when vr.value is zero or the normalized profile
/// is not strictly increasing, ArcError when vr does not match the arc.
HolderParam build_param(const SampledArc& arc, const VariationResult& vr);

/// The parametrization as an arc whose parameter is u.
SampledArc param_as_arc(const HolderParam& param, SampledArc::Meta meta = {});

struct CertificateReport {
    std::size_t pairs_checked = 0;
    /// Pairs with fl(prefix[i] - prefix[j]) < |p_i - p_j|^s. Always zero
    /// for a parametrization built from s_variation.
    std::size_t prefix_violations = 0;
    /// Pairs with |p_i - p_j|^s > V * (u[i] - u[j]) * (1 + rel_eps) + 4 eps V,
    /// the last term being the rounding of the stored u values.
    std::size_t normalized_violations = 0;
    /// max over pairs of |p_i - p_j|^s / (V * (u[i] - u[j])).
    double max_ratio = 0.0;

    bool ok() const { return prefix_violations == 0 && normalized_violations == 0; }
};

/// Checks the Hölder certificate |p_i - p_j|^s <= V |u_i - u_j| over every
/// pair of samples.
CertificateReport certify(const HolderParam& param, double rel_eps = 1e-12, unsigned jobs = 1);

struct HolderSeminorm {
    double exponent = 1.0;
    double seminorm = 0.0;
    std::pair<std::size_t, std::size_t> witness{0, 0};
    std::size_t samples_used = 0;
    bool subsampled = false;
};

struct SeminormOptions {
    /// Above this many samples a uniform subsample of this size is scanned.
    std::size_t max_points = 30000;
    unsigned jobs = 1;
    /// Pairs within this relative distance of the maximum count as ties;
    /// the witness is the widest tied pair, then the one with smallest
    /// first index.
    double tie_rel = 1e-12;
};

/// max over sample pairs of |p_i - p_j| / |u_i - u_j|^alpha, alpha in (0,1].
/// `u` must be strictly increasing.
HolderSeminorm discrete_seminorm(std::span<const double> u, std::span<const Point> points,
                                 double alpha, const SeminormOptions& opts = {});

/// Uses (prefix_i - prefix_j) / V for u_i - u_j.
HolderSeminorm discrete_seminorm(const HolderParam& param, double alpha,
                                 const SeminormOptions& opts = {});

} // namespace holder
