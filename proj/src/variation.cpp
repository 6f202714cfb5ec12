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

#include "holder/variation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "holder/error.hpp"

namespace holder {

namespace {

void check_exponent(double s)
{
    if (!(s >= 1.0) || !std::isfinite(s)) {
        throw ParameterError("variation exponent s must be a finite real >= 1");
    }
}

// True when sum = fl(a + b) lies strictly below the real a + b (TwoSum).
bool rounded_down(double a, double b, double sum)
{
    const double bb = sum - a;
    const double err = (a - (sum - bb)) + (b - bb);
    return err > 0.0;
}

} // namespace

VariationResult s_variation(const SampledArc& arc, double s, std::size_t max_points)
{
    check_exponent(s);
    const std::size_t n = arc.size();
    if (n > max_points) {
        throw SizeError("s_variation: arc has " + std::to_string(n) + " samples, cap is "
                        + std::to_string(max_points) + "; use the per-ring pipeline");
    }
    const auto& pts = arc.points();

    VariationResult out;
    out.s = s;
    out.prefix.assign(n, 0.0);
    std::vector<std::size_t> argmax(n, 0);
    std::vector<double> diam_sq(n, 0.0); // diam([j,i])^2 for the current i
    std::vector<double> diam_pow(n, 0.0); // diam([j,i])^s

    auto& prefix = out.prefix;
    for (std::size_t i = 1; i < n; ++i) {
        const Point pi = pts[i];
        double suffix_sq = 0.0;
        double best = -std::numeric_limits<double>::infinity();
        std::size_t best_j = i - 1;
        bool bump = false;
        for (std::size_t j = i; j-- > 0;) {
            suffix_sq = std::max(suffix_sq, squared_distance(pts[j], pi));
            if (suffix_sq > diam_sq[j]) {
                diam_sq[j] = suffix_sq;
                diam_pow[j] = detail::pow_from_squared(suffix_sq, s);
            }
            const double candidate = prefix[j] + diam_pow[j];
            if (candidate > best) {
                best = candidate;
                best_j = j;
                bump = rounded_down(prefix[j], diam_pow[j], candidate);
            } else if (candidate == best && !bump) {
                bump = rounded_down(prefix[j], diam_pow[j], candidate);
            }
        }
        prefix[i] = bump ? std::nextafter(best, std::numeric_limits<double>::infinity()) : best;
        argmax[i] = best_j;
    }

    out.value = prefix[n - 1];
    for (std::size_t i = n - 1; i > 0; i = argmax[i]) {
        out.breakpoints.push_back(i);
    }
    out.breakpoints.push_back(0);
    std::reverse(out.breakpoints.begin(), out.breakpoints.end());
    return out;
}

double brute_force_variation(const SampledArc& arc, double s)
{
    check_exponent(s);
    const std::size_t n = arc.size();
    if (n > brute_force_size_cap) {
        throw SizeError("brute_force_variation: " + std::to_string(n) + " samples exceeds "
                        + std::to_string(brute_force_size_cap));
    }
    const auto& pts = arc.points();
    std::vector<std::vector<double>> piece(n, std::vector<double>(n, 0.0));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            double d = 0.0;
            for (std::size_t k = a; k <= b; ++k) {
                for (std::size_t l = k + 1; l <= b; ++l) {
                    d = std::max(d, std::hypot(pts[k].x - pts[l].x, pts[k].y - pts[l].y));
                }
            }
            piece[a][b] = std::pow(d, s);
        }
    }
    const std::size_t interior = n - 2;
    double best = 0.0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << interior); ++mask) {
        double total = 0.0;
        std::size_t start = 0;
        for (std::size_t k = 1; k < n; ++k) {
            const bool cut = (k == n - 1) || ((mask >> (k - 1)) & 1U);
            if (cut) {
                total += piece[start][k];
                start = k;
            }
        }
        best = std::max(best, total);
    }
    return best;
}

double partition_sum(const SampledArc& arc, const std::vector<std::size_t>& breakpoints, double s)
{
    double total = 0.0;
    for (std::size_t k = 1; k < breakpoints.size(); ++k) {
        total += detail::pow_from_squared(
            diameter_squared(arc, {breakpoints[k - 1], breakpoints[k]}), s);
    }
    return total;
}

std::vector<RefinementPoint>
refinement_study(const std::function<SampledArc(std::size_t)>& make_arc, double s,
                 const std::vector<std::size_t>& m_list)
{
    check_exponent(s);
    for (std::size_t k = 1; k < m_list.size(); ++k) {
        if (m_list[k] <= m_list[k - 1]) {
            throw ParameterError("refinement_study: samples-per-turn list must be increasing");
        }
    }
    std::vector<RefinementPoint> out;
    out.reserve(m_list.size());
    for (const auto m : m_list) {
        out.push_back({m, s_variation(make_arc(m), s).value});
    }
    return out;
}

std::vector<RefinementPoint> refinement_study(const SpiralSpec& spec, double s,
                                              const std::vector<std::size_t>& m_list)
{
    return refinement_study(
        [&](std::size_t m) { return generate(spec.with_samples_per_turn(m)); }, s, m_list);
}

} // namespace holder
