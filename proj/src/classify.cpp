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

#include "holder/classify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "holder/error.hpp"
#include "holder/parallel.hpp"

namespace holder {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::converges:
        return "converges";
    case Verdict::diverges:
        return "diverges";
    case Verdict::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

LineFit fit_line(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size() || x.size() < 2) {
        throw ParameterError("line fit needs at least two (x, y) pairs");
    }
    const auto n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (!(sxx > 0.0)) {
        throw ParameterError("line fit needs at least two distinct x values");
    }
    const double slope = sxy / sxx;
    return {slope, my - slope * mx};
}

ConvergenceVerdict classify_spiral(const SpiralSpec& spec, double s, const ClassifyOptions& opts)
{
    if (!(s > 1.0) || !std::isfinite(s)) {
        throw HypothesisError("classification requires s > 1");
    }
    const std::size_t turns = spec.turns();
    const auto phi = phi_sequence(spec, turns);

    ConvergenceVerdict out;
    out.s = s;
    double running = 0.0;
    std::size_t next_report = 1;
    for (std::size_t j = 1; j <= turns; ++j) {
        running += std::pow(phi[j - 1], s);
        if (j == next_report || j == turns) {
            out.partial_sums.emplace_back(j, running);
            if (j == next_report) {
                next_report *= 2;
            }
        }
    }

    const auto skip = static_cast<std::size_t>(opts.transient_fraction * static_cast<double>(turns));
    if (turns - skip >= 2) {
        std::vector<double> lx;
        std::vector<double> ly;
        for (std::size_t j = skip + 1; j <= turns; ++j) {
            lx.push_back(std::log(static_cast<double>(j)));
            ly.push_back(std::log(phi[j - 1]));
        }
        out.decay_exponent_fit = -fit_line(lx, ly).slope;
    }

    std::ostringstream why;
    if (!spec.is_tabulated()) {
        const double p = spec.decay_exponent();
        out.analytic = true;
        out.verdict = p * s > 1.0 ? Verdict::converges : Verdict::diverges;
        why << "phi_j = (2*pi*j)^-p with p = " << p << "; p*s = " << p * s
            << (p * s > 1.0 ? " > 1: p-series converges, (1/s)-Hölder arc"
                            : " <= 1: p-series diverges, not a (1/s)-Hölder arc");
    } else {
        if (turns - skip < 2) {
            throw RangeError("tabulated classification needs at least 2 rings after the transient");
        }
        const double ps = out.decay_exponent_fit * s;
        if (ps > 1.0 + opts.margin) {
            out.verdict = Verdict::converges;
        } else if (ps < 1.0 - opts.margin) {
            out.verdict = Verdict::diverges;
        } else {
            out.verdict = Verdict::inconclusive;
        }
        why << "empirical: fitted decay exponent " << out.decay_exponent_fit << " over rings "
            << skip + 1 << ".." << turns << "; p_hat*s = " << ps << " against 1 +/- "
            << opts.margin;
    }
    out.rationale = why.str();
    return out;
}

CircularityReport almost_circularity(const RingDecomposition& rings, double trend_tol)
{
    CircularityReport out;
    out.c_phi = rings.c_phi_estimate;
    for (const auto& r : rings.rings) {
        out.ratios.push_back(r.length_j / r.phi_j);
    }
    const std::size_t n = out.ratios.size();
    if (n >= 4) {
        const std::size_t tail = n - n / 4;
        const double head_max = *std::max_element(out.ratios.begin(), out.ratios.begin() + static_cast<std::ptrdiff_t>(tail));
        const double tail_max = *std::max_element(out.ratios.begin() + static_cast<std::ptrdiff_t>(tail), out.ratios.end());
        out.trend_ratio = tail_max / head_max;
    }
    out.almost_circular = std::isfinite(out.c_phi) && out.trend_ratio <= 1.0 + trend_tol;
    return out;
}

CircularityReport almost_circularity(const SpiralSpec& spec, std::size_t turns, double trend_tol)
{
    if (turns == 0) {
        throw RangeError("almost_circularity needs at least one ring");
    }
    return almost_circularity(decompose_rings(generate(spec.with_turns(turns))), trend_tol);
}

std::vector<double> ring_variations(const SpiralSpec& spec, double s, std::size_t turns, unsigned jobs)
{
    std::vector<double> out(turns, 0.0);
    parallel_for(turns, resolve_jobs(jobs), [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            out[k] = s_variation(generate_ring(spec, k + 1), s).value;
        }
    });
    return out;
}

SandwichReport sandwich_check(const SampledArc& arc, double s, const SandwichOptions& opts)
{
    if (!(opts.slack >= 0.0)) {
        throw ParameterError("sandwich slack must be nonnegative");
    }
    const auto rings = decompose_rings(arc);
    if (opts.full_arc && arc.size() > opts.max_points) {
        throw SizeError("sandwich_check: arc has " + std::to_string(arc.size())
                        + " samples, above the full-arc cap " + std::to_string(opts.max_points));
    }

    SandwichReport out;
    out.s = s;
    out.slack = opts.slack;
    out.c_phi = rings.c_phi_estimate;
    out.per_ring.resize(rings.rings.size());
    parallel_for(rings.rings.size(), resolve_jobs(opts.jobs), [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const auto& r = rings.rings[k];
            out.per_ring[k] = {r.j, r.phi_j, r.length_j, r.diam_j,
                               s_variation(arc.subarc(r.range), s, opts.max_points).value};
        }
    });
    for (const auto& r : out.per_ring) {
        out.sum_rings += r.variation;
    }

    out.ring_bounds_ok = true;
    for (const auto& r : out.per_ring) {
        const double h = std::pow(r.variation, 1.0 / s);
        if (!(r.phi_j <= h && h <= out.c_phi * r.phi_j * (1.0 + opts.slack))) {
            out.ring_bounds_ok = false;
        }
    }

    out.phi_decreasing = true;
    for (std::size_t k = 1; k < out.per_ring.size(); ++k) {
        if (!(out.per_ring[k].phi_j < out.per_ring[k - 1].phi_j)) {
            out.phi_decreasing = false;
        }
    }
    if (out.phi_decreasing) {
        bool mono = true;
        for (std::size_t k = 1; k < out.per_ring.size(); ++k) {
            mono = mono && out.per_ring[k].diam_j <= out.per_ring[k - 1].diam_j;
        }
        out.diam_nonincreasing = mono;
    } else {
        out.notes.push_back("ring maxima not strictly decreasing: diameter monotonicity not asserted");
    }

    if (opts.full_arc) {
        out.total = s_variation(arc, s, opts.max_points).value;
        out.lower_ok = out.sum_rings <= *out.total;
        out.upper_ok = *out.total <= 2.0 * out.sum_rings * (1.0 + opts.slack);
    } else {
        out.notes.push_back("per-ring mode: total variation not computed, sandwich not checked");
    }
    return out;
}

SandwichReport sandwich_check(const SpiralSpec& spec, double s, std::size_t turns,
                              const SandwichOptions& opts)
{
    return sandwich_check(generate(spec.with_turns(turns)), s, opts);
}

GrowthReport growth_rate(const SpiralSpec& spec, double s, const std::vector<std::size_t>& turns_list,
                         unsigned jobs)
{
    if (turns_list.size() < 3) {
        throw ParameterError("growth_rate needs at least 3 truncation depths");
    }
    for (std::size_t k = 0; k < turns_list.size(); ++k) {
        if (turns_list[k] == 0 || (k > 0 && turns_list[k] <= turns_list[k - 1])) {
            throw ParameterError("growth_rate truncation depths must be positive and increasing");
        }
    }
    const auto ring_values = ring_variations(spec, s, turns_list.back(), jobs);

    GrowthReport out;
    out.s = s;
    out.turns = turns_list;
    double running = 0.0;
    std::size_t next = 0;
    for (std::size_t j = 1; j <= turns_list.back(); ++j) {
        running += ring_values[j - 1];
        if (j == turns_list[next]) {
            out.values.push_back(running);
            ++next;
        }
    }
    std::vector<double> lx;
    std::vector<double> ly;
    for (std::size_t k = 0; k < turns_list.size(); ++k) {
        lx.push_back(std::log(static_cast<double>(turns_list[k])));
        ly.push_back(std::log(out.values[k]));
    }
    out.slope = fit_line(lx, ly).slope;
    out.log_slope = fit_line(lx, out.values).slope;
    return out;
}

} // namespace holder
