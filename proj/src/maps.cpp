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

#include "holder/maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "holder/arc_io.hpp"
#include "holder/error.hpp"

namespace holder {

Point StretchMap::operator()(const Point& z) const
{
    const double rho = std::hypot(z.x, z.y);
    if (rho == 0.0) {
        return {0.0, 0.0};
    }
    const double k = std::pow(rho, beta - 1.0);
    return {k * z.x, k * z.y};
}

std::string StretchMap::description() const
{
    return "f(z) = |z|^(" + io::format_number(beta) + " - 1) z, f(0) = 0";
}

Point apply_stretch(const StretchMap& map, const Point& z)
{
    return map(z);
}

SampledArc apply_stretch(const StretchMap& map, const SampledArc& arc)
{
    std::vector<Point> pts(arc.size());
    std::transform(arc.points().begin(), arc.points().end(), pts.begin(), map);
    auto meta = arc.meta();
    meta["stretch_beta"] = io::format_number(map.beta);
    return SampledArc(arc.params(), std::move(pts), std::move(meta));
}

std::vector<double> alpha_grid(double step)
{
    if (!(step > 0.0 && step <= 1.0)) {
        throw ParameterError("alpha step must lie in (0, 1]");
    }
    const auto count = static_cast<std::size_t>(std::llround(1.0 / step));
    std::vector<double> out(count);
    for (std::size_t k = 1; k <= count; ++k) {
        out[k - 1] = static_cast<double>(k) / static_cast<double>(count);
    }
    return out;
}

HolderEstimate empirical_holder(const SampledArc& src, const SampledArc& dst,
                                const std::vector<double>& alphas, const HolderEstimateOptions& opts)
{
    if (src.params() != dst.params()) {
        throw CorrespondenceError("empirical_holder: source and target arcs must share the parameter grid");
    }
    if (alphas.empty()) {
        throw ParameterError("empirical_holder: empty alpha grid");
    }
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        if (!(alphas[k] > 0.0 && alphas[k] <= 1.0) || (k > 0 && !(alphas[k] > alphas[k - 1]))) {
            throw ParameterError("empirical_holder: alphas must be increasing within (0, 1]");
        }
    }

    const std::size_t n = src.size();
    const std::size_t total_pairs = n * (n - 1) / 2;
    std::vector<double> log_src;
    std::vector<double> log_dst;

    auto add_pair = [&](std::size_t i, std::size_t j) {
        const double d_src = distance(src.point(i), src.point(j));
        const double d_dst = distance(dst.point(i), dst.point(j));
        if (d_src > 0.0 && d_dst > 0.0) {
            log_src.push_back(std::log(d_src));
            log_dst.push_back(std::log(d_dst));
        }
    };

    HolderEstimate out;
    out.blowup_factor = opts.blowup_factor;
    out.seed = opts.seed;
    if (total_pairs <= opts.max_pairs) {
        out.all_pairs = true;
        log_src.reserve(total_pairs);
        log_dst.reserve(total_pairs);
        for (std::size_t i = 1; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                add_pair(i, j);
            }
        }
    } else {
        // Index gaps drawn log-uniformly so that every scale, from
        // neighbouring samples to the far ends of the arc, is represented.
        std::mt19937_64 rng(opts.seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const double log_span = std::log(static_cast<double>(n - 1));
        log_src.reserve(opts.max_pairs);
        log_dst.reserve(opts.max_pairs);
        for (std::size_t k = 0; k < opts.max_pairs; ++k) {
            const auto gap = std::min<std::size_t>(
                n - 1, static_cast<std::size_t>(std::exp(unit(rng) * log_span)));
            const auto i = std::min<std::size_t>(
                n - 1 - gap, static_cast<std::size_t>(unit(rng) * static_cast<double>(n - gap)));
            add_pair(i + gap, i);
        }
    }
    out.pairs_used = log_src.size();
    if (log_src.empty()) {
        throw DegeneracyError("empirical_holder: no pair with positive distances");
    }

    if (!(opts.reference_quantile >= 0.0 && opts.reference_quantile < 1.0)) {
        throw ParameterError("empirical_holder: reference quantile must lie in [0, 1)");
    }
    std::vector<double> sorted = log_src;
    const auto cut = sorted.begin()
        + static_cast<std::ptrdiff_t>(opts.reference_quantile * static_cast<double>(sorted.size()));
    std::nth_element(sorted.begin(), cut, sorted.end());
    const double log_cut = *cut;

    bool blown = false;
    for (const double alpha : alphas) {
        double all = -std::numeric_limits<double>::infinity();
        double ref = -std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < log_src.size(); ++k) {
            const double v = log_dst[k] - alpha * log_src[k];
            all = std::max(all, v);
            if (log_src[k] >= log_cut) {
                ref = std::max(ref, v);
            }
        }
        const double ratio = std::exp(all - ref);
        out.alphas.push_back(alpha);
        out.seminorms.push_back(std::exp(all));
        out.reference_seminorms.push_back(std::exp(ref));
        out.blowup.push_back(ratio);
        if (!blown && ratio <= opts.blowup_factor) {
            out.best_alpha = alpha;
        } else {
            blown = true;
        }
    }
    return out;
}

BoundsReport exponent_bounds(double p, double q, double r, double s_e)
{
    if (!(p > 0.0 && p <= q && std::isfinite(q))) {
        throw ParameterError("exponent_bounds requires 0 < p <= q");
    }
    if (!(r > 0.0 && r <= s_e && std::isfinite(s_e))) {
        throw ParameterError("exponent_bounds requires 0 < r <= s_e");
    }
    if (!(r <= 1.0)) {
        throw ParameterError("exponent_bounds requires r <= 1");
    }
    BoundsReport out;
    out.p = p;
    out.q = q;
    out.r = r;
    out.s_e = s_e;
    out.bound_43 = r / p;
    out.qc_threshold = p / r;
    if (p > 1.0) {
        out.bound_41 = (1.0 + s_e) / (2.0 + s_e - r);
        out.tightest = "bound_41";
        out.narrative.push_back("p > 1: only the (1+s)/(2+s-r) bound applies; r/p is reported "
                                "for reference but derived for p <= 1");
        return out;
    }
    out.bound_42 = (p + q + r + s_e - p * r + q * s_e) / ((2.0 + s_e - r) * (p + q));
    out.tightest = out.bound_43 <= *out.bound_42 ? "bound_43" : "bound_42";
    if (r < p) {
        std::ostringstream line;
        line << "r/p = " << io::format_number(out.bound_43)
             << (out.bound_43 < *out.bound_42 ? " < " : " >= ") << io::format_number(*out.bound_42)
             << " = bound_42: r/p is "
             << (out.bound_43 < *out.bound_42 ? "the sharper bound" : "not an improvement here");
        out.narrative.push_back(line.str());
        if (p == q && r == s_e) {
            out.narrative.push_back("polynomial spirals: r/p is sharp, attained by the radial stretch "
                                    "|z|^(r/p-1) z; quasiconformal equivalence needs K >= p/r");
        }
    }
    return out;
}

} // namespace holder
