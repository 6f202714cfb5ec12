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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "holder/arc.hpp"
#include "holder/spiral.hpp"
#include "holder/variation.hpp"

namespace holder {

enum class Verdict { converges, diverges, inconclusive };

std::string to_string(Verdict v);

/// Least-squares line y = slope * x + intercept.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y);

struct ClassifyOptions {
    /// Half-width of the inconclusive band around p_hat * s = 1.
    double margin = 0.05;
    /// Leading fraction of rings left out of decay fits.
    double transient_fraction = 0.1;
};

/// Whether sum_n phi_n^s converges, i.e. whether the spiral is a
/// (1/s)-Hölder arc (for almost circular spirals).
struct ConvergenceVerdict {
    double s = 0.0;
    Verdict verdict = Verdict::inconclusive;
    /// (J, sum_{n<=J} phi_n^s) at J = 1, 2, 4, ... and at the spiral's last turn.
    std::vector<std::pair<std::size_t, double>> partial_sums;
    /// p_hat from log phi_n ~ log c - p_hat log n.
    double decay_exponent_fit = 0.0;
    bool analytic = false;
    std::string rationale;
};

/// Built-in families are decided analytically (converges iff p*s > 1);
/// tabulated ones by the fitted decay exponent with an inconclusive band.
/// Throws HypothesisError for s <= 1.
ConvergenceVerdict classify_spiral(const SpiralSpec& spec, double s, const ClassifyOptions& opts = {});

struct CircularityReport {
    double c_phi = 0.0;
    std::vector<double> ratios; ///< length_j / phi_j per ring
    /// max ratio over the last quarter of rings / max over the rest.
    double trend_ratio = 1.0;
    bool almost_circular = false;
};

/// Bounded ring-length ratios over the computed prefix of rings. This is
/// an empirical check: a finite computation cannot see the whole tail.
CircularityReport almost_circularity(const RingDecomposition& rings, double trend_tol = 0.05);

/// Generates `turns` rings of `spec` at its resolution and checks them.
CircularityReport almost_circularity(const SpiralSpec& spec, std::size_t turns,
                                     double trend_tol = 0.05);

struct RingVariation {
    std::size_t j = 0;
    double phi_j = 0.0;
    double length_j = 0.0;
    double diam_j = 0.0;
    double variation = 0.0; ///< s-variation of the ring
};

struct SandwichOptions {
    /// Relative slack on the upper bounds (discretization of the rings).
    double slack = 0.05;
    unsigned jobs = 1;
    /// Compute the variation of the whole arc; otherwise per-ring only.
    bool full_arc = true;
    std::size_t max_points = variation_size_cap;
};

/// Ring variations V_j against the variation of the whole truncated arc:
/// sum_j V_j <= total <= 2 sum_j V_j, and phi_j <= V_j^(1/s) <= C_phi phi_j.
struct SandwichReport {
    double s = 0.0;
    double slack = 0.0;
    double c_phi = 0.0;
    std::vector<RingVariation> per_ring;
    double sum_rings = 0.0;
    std::optional<double> total;
    bool lower_ok = false; ///< sum_rings <= total, no tolerance
    bool upper_ok = false; ///< total <= 2 sum_rings (1 + slack)
    bool ring_bounds_ok = false;
    /// phi_j strictly decreasing; diam monotonicity is only asserted then.
    bool phi_decreasing = false;
    std::optional<bool> diam_nonincreasing;
    std::vector<std::string> notes;
};

/// Sandwich check on a ring-aligned arc. In full-arc mode an arc above
/// opts.max_points raises SizeError.
SandwichReport sandwich_check(const SampledArc& arc, double s, const SandwichOptions& opts = {});

SandwichReport sandwich_check(const SpiralSpec& spec, double s, std::size_t turns,
                              const SandwichOptions& opts = {});

/// s-variation of rings 1..turns, each generated on its own (no size cap
/// on the number of rings). Rings are independent jobs; output does not
/// depend on `jobs`.
std::vector<double> ring_variations(const SpiralSpec& spec, double s, std::size_t turns,
                                    unsigned jobs = 1);

struct GrowthReport {
    double s = 0.0;
    std::vector<std::size_t> turns;
    /// sum_{j<=J} V_j for each J: the per-ring truncated variation.
    std::vector<double> values;
    double slope = 0.0;     ///< fit of log value against log J
    double log_slope = 0.0; ///< fit of value against log J
};

/// Growth of the truncated variation with the number of turns J. For
/// polynomial spirals the slope approaches 1 - p*s when p*s < 1 and 0 when
/// p*s >= 1. `turns_list` must be increasing with at least 3 entries.
GrowthReport growth_rate(const SpiralSpec& spec, double s, const std::vector<std::size_t>& turns_list,
                         unsigned jobs = 1);

} // namespace holder
