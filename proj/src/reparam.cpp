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

#include "holder/reparam.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "holder/error.hpp"
#include "holder/parallel.hpp"

namespace holder {

namespace {

// 1/alpha, snapped to an integer when alpha is the reciprocal of one, so
// that the common exponents take the exact shortcuts of pow_from_squared.
double reciprocal_exponent(double alpha)
{
    const double inv = 1.0 / alpha;
    const double rounded = std::round(inv);
    return std::abs(inv - rounded) < 1e-12 * inv ? rounded : inv;
}

} // namespace

HolderParam build_param(const SampledArc& arc, const VariationResult& vr)
{
    const std::size_t n = arc.size();
    if (vr.prefix.size() != n) {
        throw ArcError("variation result has " + std::to_string(vr.prefix.size())
                       + " prefix values for an arc of " + std::to_string(n) + " samples");
    }
    if (!(vr.value > 0.0)) {
        throw DegeneracyError("zero s-variation: no Hölder parametrization to normalize");
    }
    HolderParam out;
    out.s = vr.s;
    out.variation_value = vr.value;
    out.points = arc.points();
    out.prefix = vr.prefix;
    out.u.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.u[i] = vr.prefix[i] / vr.value;
    }
    out.u.front() = 0.0;
    out.u.back() = 1.0;
    for (std::size_t i = 1; i < n; ++i) {
        if (!(out.u[i] > out.u[i - 1])) {
            throw DegeneracyError("normalized prefix variation not strictly increasing at sample "
                                  + std::to_string(i));
        }
    }
    return out;
}

SampledArc param_as_arc(const HolderParam& param, SampledArc::Meta meta)
{
    meta["s"] = std::to_string(param.s);
    return SampledArc(param.u, param.points, std::move(meta));
}

CertificateReport certify(const HolderParam& param, double rel_eps, unsigned jobs)
{
    const std::size_t n = param.points.size();
    const double s = param.s;
    const double total = param.variation_value;
    // Each stored u carries a rounding error of at most eps/2, so
    // V * (u_i - u_j) is only known to within a few eps * V.
    const double u_rounding = 4.0 * std::numeric_limits<double>::epsilon() * total;
    struct RowStats {
        std::size_t prefix_bad = 0;
        std::size_t norm_bad = 0;
        double max_ratio = 0.0;
    };
    std::vector<RowStats> rows(n);
    parallel_for(n, resolve_jobs(jobs), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = std::max<std::size_t>(begin, 1); i < end; ++i) {
            RowStats st;
            const Point pi = param.points[i];
            for (std::size_t j = 0; j < i; ++j) {
                const double ds = detail::pow_from_squared(squared_distance(param.points[j], pi), s);
                if (param.prefix[i] - param.prefix[j] < ds) {
                    ++st.prefix_bad;
                }
                const double budget = total * (param.u[i] - param.u[j]);
                if (ds > budget * (1.0 + rel_eps) + u_rounding) {
                    ++st.norm_bad;
                }
                st.max_ratio = std::max(st.max_ratio, ds / budget);
            }
            rows[i] = st;
        }
    });
    CertificateReport out;
    out.pairs_checked = n * (n - 1) / 2;
    for (const auto& r : rows) {
        out.prefix_violations += r.prefix_bad;
        out.normalized_violations += r.norm_bad;
        out.max_ratio = std::max(out.max_ratio, r.max_ratio);
    }
    return out;
}

namespace {

template <class Gap>
HolderSeminorm seminorm_scan(std::size_t n, std::span<const Point> points, double alpha,
                            const SeminormOptions& opts, Gap gap)
{
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw ParameterError("Hölder exponent alpha must lie in (0, 1]");
    }

    std::vector<std::size_t> idx;
    if (n <= opts.max_points) {
        idx.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            idx[k] = k;
        }
    } else {
        const std::size_t count = std::max<std::size_t>(opts.max_points, 2);
        idx.resize(count);
        for (std::size_t k = 0; k < count; ++k) {
            idx[k] = static_cast<std::size_t>(
                (static_cast<double>(k) * static_cast<double>(n - 1)) / static_cast<double>(count - 1));
        }
        idx.back() = n - 1;
    }
    const std::size_t m = idx.size();

    // Maximize |p_i - p_j|^(1/alpha) / (u_i - u_j), a monotone transform of
    // the seminorm ratio that avoids a pow per pair for alpha = 1/integer.
    const double power = reciprocal_exponent(alpha);
    auto score = [&](std::size_t a, std::size_t b) {
        return detail::pow_from_squared(squared_distance(points[idx[a]], points[idx[b]]), power)
            / gap(idx[a], idx[b]);
    };

    std::vector<double> row_max(m, 0.0);
    parallel_for(m, resolve_jobs(opts.jobs), [&](std::size_t begin, std::size_t end) {
        for (std::size_t a = std::max<std::size_t>(begin, 1); a < end; ++a) {
            double best = 0.0;
            for (std::size_t b = 0; b < a; ++b) {
                best = std::max(best, score(a, b));
            }
            row_max[a] = best;
        }
    });
    const double top = *std::max_element(row_max.begin(), row_max.end());
    const double band = top * (1.0 - opts.tie_rel);

    std::size_t wit_lo = 0;
    std::size_t wit_hi = 1;
    bool have = false;
    for (std::size_t a = 1; a < m; ++a) {
        if (row_max[a] < band) {
            continue;
        }
        for (std::size_t b = 0; b < a; ++b) {
            if (score(a, b) >= band) {
                const bool wider = !have || (a - b) > (wit_hi - wit_lo)
                    || ((a - b) == (wit_hi - wit_lo) && b < wit_lo);
                if (wider) {
                    wit_lo = b;
                    wit_hi = a;
                    have = true;
                }
                break; // smallest b is the widest pair of this row
            }
        }
    }

    HolderSeminorm out;
    out.exponent = alpha;
    out.seminorm = std::pow(top, alpha);
    out.witness = {idx[wit_lo], idx[wit_hi]};
    out.samples_used = m;
    out.subsampled = m < n;
    return out;
}

} // namespace

HolderSeminorm discrete_seminorm(std::span<const double> u, std::span<const Point> points,
                                 double alpha, const SeminormOptions& opts)
{
    if (u.size() != points.size() || u.size() < 2) {
        throw ArcError("discrete_seminorm needs matching u/points of length >= 2");
    }
    return seminorm_scan(u.size(), points, alpha, opts,
                         [&](std::size_t i, std::size_t j) { return u[i] - u[j]; });
}

HolderSeminorm discrete_seminorm(const HolderParam& param, double alpha, const SeminormOptions& opts)
{
    // u_i - u_j evaluated as (prefix_i - prefix_j) / V: the same quantity,
    // without the cancellation of subtracting two rounded u values.
    if (param.prefix.size() != param.points.size() || param.points.size() < 2) {
        throw ArcError("discrete_seminorm needs a parametrization with at least 2 samples");
    }
    const double total = param.variation_value;
    return seminorm_scan(param.points.size(), param.points, alpha, opts,
                         [&](std::size_t i, std::size_t j) {
                             return (param.prefix[i] - param.prefix[j]) / total;
                         });
}

} // namespace holder
