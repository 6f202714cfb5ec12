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
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "holder/arc.hpp"

namespace holder {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// phi(t) = t^-p.
struct PolynomialKind {
    double p = 1.0;
};

/// t -> (t^-p cos t, t^-q sin t), 0 < p <= q.
struct EllipticalKind {
    double p = 1.0;
    double q = 1.0;
};

/// phi given by a table (t_k, phi_k), linearly interpolated in t.
struct TabulatedKind {
    std::vector<double> t;
    std::vector<double> phi;
};

/// A spiral family truncated after `turns` full turns, starting at
/// t = 2*pi and sampled uniformly in t with `samples_per_turn` samples per
/// turn. Validated at construction (SpecError).
class SpiralSpec {
public:
    using Kind = std::variant<PolynomialKind, EllipticalKind, TabulatedKind>;

    static constexpr std::size_t default_samples_per_turn = 256;

    static SpiralSpec polynomial(double p, std::size_t turns,
                                 std::size_t samples_per_turn = default_samples_per_turn);
    static SpiralSpec elliptical(double p, double q, std::size_t turns,
                                 std::size_t samples_per_turn = default_samples_per_turn);
    static SpiralSpec tabulated(std::vector<double> t, std::vector<double> phi, std::size_t turns,
                                std::size_t samples_per_turn = default_samples_per_turn);

    const Kind& kind() const { return kind_; }
    std::size_t turns() const { return turns_; }
    std::size_t samples_per_turn() const { return samples_per_turn_; }
    double t_start() const { return two_pi; }

    bool is_tabulated() const { return std::holds_alternative<TabulatedKind>(kind_); }

    /// "poly", "ell" or "tab".
    std::string kind_name() const;

    /// Radial decay exponent p of the built-in families. Throws SpecError
    /// for tabulated spirals.
    double decay_exponent() const;

    SpiralSpec with_turns(std::size_t turns) const;
    SpiralSpec with_samples_per_turn(std::size_t samples_per_turn) const;

    /// Curve point at parameter t. For tabulated spirals t must lie inside
    /// the table (RangeError otherwise).
    Point point_at(double t) const;

    /// Provenance written into the meta of generated arcs.
    SampledArc::Meta describe() const;

private:
    SpiralSpec(Kind kind, std::size_t turns, std::size_t samples_per_turn);

    Kind kind_;
    std::size_t turns_;
    std::size_t samples_per_turn_;
};

/// Linear interpolation of a tabulated phi. RangeError outside the table.
double interpolate_table(const TabulatedKind& table, double t);

/// Samples t_k = 2*pi*(m + k)/m for k = 0..J*m (ring boundaries land on
/// exact multiples of 2*pi). The limit point 0 is not included.
SampledArc generate(const SpiralSpec& spec);

/// The m+1 samples of ring j >= 1, i.e. t in [2*pi*j, 2*pi*(j+1)].
/// Bit-identical to the corresponding slice of generate().
SampledArc generate_ring(const SpiralSpec& spec, std::size_t j);

struct Ring {
    std::size_t j = 0;
    SubarcRange range;
    double phi_j = 0.0;    ///< largest |point| over the ring samples
    double length_j = 0.0; ///< inscribed polyline length
    double diam_j = 0.0;
};

struct RingDecomposition {
    std::vector<Ring> rings;
    double c_phi_estimate = 0.0; ///< max over rings of length_j / phi_j
};

/// Splits an arc at the parameters t = 2*pi*j into full turns. Every ring
/// boundary inside the parameter span must be a sample (relative tolerance
/// 1e-9), otherwise AlignmentError; an arc without a full turn is also an
/// AlignmentError.
RingDecomposition decompose_rings(const SampledArc& arc);

/// phi_1..phi_J: (2*pi*j)^-p for the built-in families, per-ring maxima of
/// the interpolated table for tabulated ones (RangeError when the table
/// covers fewer than J turns).
std::vector<double> phi_sequence(const SpiralSpec& spec, std::size_t count);

} // namespace holder
