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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "holder/error.hpp"
#include "holder/reparam.hpp"
#include "holder/spiral.hpp"
#include "random_arcs.hpp"

namespace holder {
namespace {

using testing::polyline;
using testing::random_arc;

constexpr double length = 2.5;
const std::vector<double> segment_x = {0.0, 0.1, 0.35, 0.4, 1.2, 1.9, 2.2, length};

SampledArc uneven_segment()
{
    std::vector<Point> pts;
    for (const double x : segment_x) {
        pts.push_back({x, 0.0});
    }
    return polyline(pts);
}

TEST(BuildParam, SegmentSquares)
{
    const auto arc = uneven_segment();
    const auto param = build_param(arc, s_variation(arc, 2.0));
    EXPECT_EQ(param.variation_value, length * length);
    for (std::size_t i = 0; i < segment_x.size(); ++i) {
        const double expected = (segment_x[i] / length) * (segment_x[i] / length);
        EXPECT_NEAR(param.u[i], expected, 1e-15);
        // F(u) = (L sqrt(u), 0)
        EXPECT_NEAR(length * std::sqrt(param.u[i]), param.points[i].x, 1e-14);
    }
}

TEST(BuildParam, TwoPointArc)
{
    const auto arc = polyline({{0, 0}, {3, 4}});
    const auto param = build_param(arc, s_variation(arc, 1.7));
    EXPECT_EQ(param.u, (std::vector<double>{0.0, 1.0}));
}

TEST(BuildParam, Errors)
{
    const auto arc = polyline({{0, 0}, {1, 0}, {1, 1}});
    auto vr = s_variation(arc, 2.0);
    VariationResult zero = vr;
    zero.value = 0.0;
    EXPECT_THROW(build_param(arc, zero), DegeneracyError);
    VariationResult flat = vr;
    flat.prefix[1] = 0.0;
    EXPECT_THROW(build_param(arc, flat), DegeneracyError);
    EXPECT_THROW(build_param(polyline({{0, 0}, {1, 0}}), vr), ArcError);
}

TEST(Certificate, ExactOnRandomArcs)
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const auto arc = random_arc(rng, testing::random_size(rng, 2, 80));
        for (const double s : {1.0, 1.5, 2.0, 3.0}) {
            const auto param = build_param(arc, s_variation(arc, s));
            const auto report = certify(param);
            EXPECT_EQ(report.prefix_violations, 0u);
            EXPECT_EQ(report.normalized_violations, 0u);
            EXPECT_EQ(report.pairs_checked, arc.size() * (arc.size() - 1) / 2);
            for (std::size_t i = 1; i < arc.size(); ++i) {
                for (std::size_t j = 0; j < i; ++j) {
                    const double ds = detail::pow_from_squared(squared_distance(param.points[i], param.points[j]), s);
                    ASSERT_LE(ds, param.prefix[i] - param.prefix[j]);
                }
            }
        }
    }
}

TEST(Certificate, HalfPowerSpiral)
{
    const auto arc = generate(SpiralSpec::polynomial(0.5, 50));
    const auto param = build_param(arc, s_variation(arc, 3.0));
    const auto report = certify(param, 1e-12, 2);
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.pairs_checked, arc.size() * (arc.size() - 1) / 2);
    EXPECT_NEAR(report.max_ratio, 1.0, 1e-9);
}

TEST(Certificate, DetectsForgedProfile)
{
    const auto arc = polyline({{0, 0}, {1, 0}, {2, 0}});
    auto param = build_param(arc, s_variation(arc, 2.0));
    param.prefix = {0.0, 0.5, 4.0};
    param.u = {0.0, 0.125, 1.0};
    const auto report = certify(param);
    EXPECT_FALSE(report.ok());
    EXPECT_EQ(report.prefix_violations, 1u);
}

TEST(Seminorm, SegmentAttainsLengthAtEndpoints)
{
    const auto arc = uneven_segment();
    const auto param = build_param(arc, s_variation(arc, 2.0));
    const auto h = discrete_seminorm(param, 0.5);
    EXPECT_NEAR(h.seminorm, length, 1e-12 * length);
    EXPECT_EQ(h.witness, (std::pair<std::size_t, std::size_t>{0, segment_x.size() - 1}));
    EXPECT_FALSE(h.subsampled);
}

TEST(Seminorm, TwoPointLipschitz)
{
    const auto arc = polyline({{0, 0}, {3, 4}});
    const auto param = build_param(arc, s_variation(arc, 1.0));
    EXPECT_DOUBLE_EQ(discrete_seminorm(param, 1.0).seminorm, 5.0);
}

TEST(Seminorm, ExponentChecked)
{
    const auto arc = polyline({{0, 0}, {3, 4}});
    const auto param = build_param(arc, s_variation(arc, 1.0));
    EXPECT_THROW(discrete_seminorm(param, 0.0), ParameterError);
    EXPECT_THROW(discrete_seminorm(param, 1.5), ParameterError);
}

TEST(Seminorm, MatchesDirectScan)
{
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        const auto arc = random_arc(rng, testing::random_size(rng, 2, 50));
        const auto param = build_param(arc, s_variation(arc, 2.0));
        for (const double alpha : {0.25, 0.5, 1.0}) {
            double best = 0.0;
            for (std::size_t i = 1; i < arc.size(); ++i) {
                for (std::size_t j = 0; j < i; ++j) {
                    best = std::max(best, distance(param.points[i], param.points[j])
                                              / std::pow(param.u[i] - param.u[j], alpha));
                }
            }
            const auto h = discrete_seminorm(param.u, param.points, alpha);
            EXPECT_TRUE(testing::rel_close(h.seminorm, best, 1e-12));
            const auto [a, b] = h.witness;
            EXPECT_TRUE(testing::rel_close(distance(param.points[a], param.points[b])
                                               / std::pow(param.u[b] - param.u[a], alpha),
                                           best, 1e-12));
        }
    }
}

TEST(Seminorm, OptimalExponentReachesVariation)
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const auto arc = random_arc(rng, testing::random_size(rng, 2, 60));
        for (const double s : {1.0, 2.0, 3.0}) {
            const auto param = build_param(arc, s_variation(arc, s));
            const auto h = discrete_seminorm(param, 1.0 / s);
            const double ratio = std::pow(h.seminorm, s) / param.variation_value;
            EXPECT_LE(ratio, 1.0 + 1e-12);
            EXPECT_GE(ratio, 1.0 - 1e-12);
        }
    }
}

TEST(Seminorm, SpiralBelowVariation)
{
    const auto arc = generate(SpiralSpec::polynomial(0.5, 30));
    const auto param = build_param(arc, s_variation(arc, 3.0));
    const auto h = discrete_seminorm(param, 1.0 / 3.0);
    const double root = std::cbrt(param.variation_value);
    EXPECT_LE(h.seminorm, root * (1.0 + 1e-12));
    EXPECT_GE(h.seminorm, 0.95 * root);
}

TEST(Seminorm, JobsDoNotChangeResult)
{
    const auto arc = generate(SpiralSpec::polynomial(0.5, 10, 64));
    const auto param = build_param(arc, s_variation(arc, 2.0));
    SeminormOptions one;
    SeminormOptions many;
    many.jobs = 3;
    const auto a = discrete_seminorm(param, 0.5, one);
    const auto b = discrete_seminorm(param, 0.5, many);
    EXPECT_EQ(a.seminorm, b.seminorm);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(certify(param, 1e-12, 1).max_ratio, certify(param, 1e-12, 3).max_ratio);
}

TEST(Seminorm, SubsamplesAboveCap)
{
    const auto arc = generate(SpiralSpec::polynomial(0.5, 10, 64));
    const auto param = build_param(arc, s_variation(arc, 2.0));
    SeminormOptions opts;
    opts.max_points = 100;
    const auto h = discrete_seminorm(param, 0.5, opts);
    EXPECT_TRUE(h.subsampled);
    EXPECT_EQ(h.samples_used, 100u);
    EXPECT_LE(h.seminorm, discrete_seminorm(param, 0.5).seminorm);
}

TEST(ParamAsArc, UsesNormalizedParameter)
{
    const auto arc = uneven_segment();
    const auto param = build_param(arc, s_variation(arc, 2.0));
    const auto as_arc = param_as_arc(param);
    EXPECT_EQ(as_arc.params(), param.u);
    EXPECT_EQ(as_arc.points(), param.points);
}

} // namespace
} // namespace holder
