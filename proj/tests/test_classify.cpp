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
#include <numbers>

#include "holder/classify.hpp"
#include "holder/error.hpp"

namespace holder {
namespace {

// phi(2 pi n) = base(n) at every ring boundary, linear in between.
SpiralSpec boundary_table(std::size_t turns, double (*base)(double), std::size_t m = 64)
{
    std::vector<double> t;
    std::vector<double> phi;
    for (std::size_t n = 1; n <= turns + 1; ++n) {
        t.push_back(two_pi * static_cast<double>(n));
        phi.push_back(base(static_cast<double>(n)));
    }
    return SpiralSpec::tabulated(t, phi, turns, m);
}

// phi = (1 + 0.5 sin^2(k_n theta)) / log(n + 2) on ring n, tabulated on the
// generation grid itself; the number of wiggles k_n grows with n, so the
// ring lengths outgrow phi_n.
SpiralSpec wiggly_table(std::size_t turns, std::size_t m)
{
    std::vector<double> t;
    std::vector<double> phi;
    for (std::size_t n = 1; n <= turns; ++n) {
        const double k = std::ceil(static_cast<double>(n) / 2.0);
        for (std::size_t i = 0; i < m; ++i) {
            const double theta = two_pi * static_cast<double>(i) / static_cast<double>(m);
            const double w = std::sin(k * theta);
            t.push_back(two_pi * (static_cast<double>(n * m + i) / static_cast<double>(m)));
            phi.push_back((1.0 + 0.5 * w * w) / std::log(static_cast<double>(n) + 2.0));
        }
    }
    t.push_back(two_pi * static_cast<double>(turns + 1));
    phi.push_back(1.0 / std::log(static_cast<double>(turns) + 3.0));
    return SpiralSpec::tabulated(t, phi, turns, m);
}

TEST(FitLine, ExactLine)
{
    const std::vector<double> x = {1, 2, 3, 4};
    const std::vector<double> y = {1, 3, 5, 7};
    const auto fit = fit_line(x, y);
    EXPECT_DOUBLE_EQ(fit.slope, 2.0);
    EXPECT_DOUBLE_EQ(fit.intercept, -1.0);
    EXPECT_THROW(fit_line(std::vector<double>{1}, std::vector<double>{1}), ParameterError);
    EXPECT_THROW(fit_line(std::vector<double>{1, 1}, std::vector<double>{1, 2}), ParameterError);
}

TEST(Classify, HalfPowerCubeConverges)
{
    const auto v = classify_spiral(SpiralSpec::polynomial(0.5, 100), 3.0);
    EXPECT_EQ(v.verdict, Verdict::converges);
    EXPECT_TRUE(v.analytic);
    EXPECT_EQ(to_string(v.verdict), "converges");
    EXPECT_EQ(v.partial_sums.back().first, 100u);
    EXPECT_EQ(v.partial_sums.front().first, 1u);
    EXPECT_NEAR(v.decay_exponent_fit, 0.5, 1e-9);
}

TEST(Classify, HalfPowerSquareDivergesAtThreshold)
{
    const auto v = classify_spiral(SpiralSpec::polynomial(0.5, 100), 2.0);
    EXPECT_EQ(v.verdict, Verdict::diverges);
    EXPECT_EQ(to_string(v.verdict), "diverges");
}

TEST(Classify, EllipticalUsesMinorExponent)
{
    EXPECT_EQ(classify_spiral(SpiralSpec::elliptical(0.6, 1.0, 10), 1.5).verdict, Verdict::diverges);
    EXPECT_EQ(classify_spiral(SpiralSpec::elliptical(0.6, 1.0, 10), 2.0).verdict, Verdict::converges);
}

TEST(Classify, HypothesisRequiresSAboveOne)
{
    EXPECT_THROW(classify_spiral(SpiralSpec::polynomial(0.5, 10), 1.0), HypothesisError);
    EXPECT_THROW(classify_spiral(SpiralSpec::polynomial(0.5, 10), 0.5), HypothesisError);
}

TEST(Classify, TabulatedHarmonic)
{
    const auto spec = boundary_table(500, [](double n) { return 1.0 / n; });
    const auto v = classify_spiral(spec, 1.5);
    EXPECT_FALSE(v.analytic);
    EXPECT_EQ(v.verdict, Verdict::converges);
    EXPECT_NEAR(v.decay_exponent_fit, 1.0, 0.01);
    EXPECT_EQ(v.partial_sums.back().first, 500u);
}

TEST(Classify, TabulatedBandAndDivergence)
{
    const auto harmonic = boundary_table(200, [](double n) { return 1.0 / n; });
    EXPECT_EQ(classify_spiral(harmonic, 1.02).verdict, Verdict::inconclusive);
    const auto slow = boundary_table(200, [](double n) { return 1.0 / std::sqrt(n); });
    EXPECT_EQ(classify_spiral(slow, 1.5).verdict, Verdict::diverges);
    EXPECT_EQ(to_string(Verdict::inconclusive), "inconclusive");
}

TEST(Circularity, PolynomialRatiosApproachTwoPi)
{
    const auto report = almost_circularity(SpiralSpec::polynomial(1.0, 200), 200);
    EXPECT_LE(report.c_phi, two_pi + 0.5);
    ASSERT_EQ(report.ratios.size(), 200u);
    EXPECT_NEAR(report.ratios.back() / two_pi, 1.0, 0.01);
    EXPECT_TRUE(report.almost_circular);
}

TEST(Circularity, EllipticalIsAlmostCircular)
{
    const auto report = almost_circularity(SpiralSpec::elliptical(0.6, 1.0, 200, 128), 200);
    EXPECT_TRUE(report.almost_circular);
    EXPECT_LT(report.c_phi, 2.0 * two_pi);
}

TEST(Circularity, GrowingWigglesFlagged)
{
    const auto report = almost_circularity(wiggly_table(120, 1024), 120);
    EXPECT_FALSE(report.almost_circular);
    EXPECT_GT(report.trend_ratio, 1.05);
}

TEST(Sandwich, HalfPowerCube)
{
    const auto report = sandwich_check(SpiralSpec::polynomial(0.5, 60, 128), 3.0, 60);
    ASSERT_TRUE(report.total.has_value());
    EXPECT_TRUE(report.lower_ok);
    EXPECT_LE(report.sum_rings, *report.total);
    EXPECT_TRUE(report.upper_ok);
    EXPECT_TRUE(report.ring_bounds_ok);
    EXPECT_TRUE(report.phi_decreasing);
    EXPECT_EQ(report.diam_nonincreasing, std::optional<bool>(true));
    EXPECT_EQ(report.per_ring.size(), 60u);
}

TEST(Sandwich, SingleRingIsOneBlock)
{
    const auto report = sandwich_check(SpiralSpec::polynomial(0.5, 1, 128), 2.0, 1);
    EXPECT_EQ(report.sum_rings, *report.total);
}

TEST(Sandwich, RingValuesWithinCircularityBounds)
{
    const auto report = sandwich_check(SpiralSpec::polynomial(1.0, 60, 128), 2.0, 60);
    for (const auto& r : report.per_ring) {
        EXPECT_GE(r.variation, r.phi_j * r.phi_j) << "ring " << r.j;
        EXPECT_LE(r.variation, std::pow((two_pi + 1.0) * r.phi_j, 2.0)) << "ring " << r.j;
    }
}

TEST(Sandwich, PerRingModeAndSizeCap)
{
    SandwichOptions opts;
    opts.full_arc = false;
    const auto report = sandwich_check(SpiralSpec::polynomial(0.5, 30, 64), 2.0, 30, opts);
    EXPECT_FALSE(report.total.has_value());
    EXPECT_TRUE(report.ring_bounds_ok);

    SandwichOptions capped;
    capped.max_points = 100;
    EXPECT_THROW(sandwich_check(SpiralSpec::polynomial(0.5, 30, 64), 2.0, 30, capped), SizeError);
}

TEST(RingVariations, IndependentOfJobs)
{
    const auto spec = SpiralSpec::polynomial(0.5, 1, 64);
    EXPECT_EQ(ring_variations(spec, 2.5, 40, 1), ring_variations(spec, 2.5, 40, 4));
}

TEST(Growth, HalfPowerLengthGrowsLikeSquareRoot)
{
    const auto report = growth_rate(SpiralSpec::polynomial(0.5, 1, 64), 1.0, {1000, 2000, 4000, 8000});
    EXPECT_NEAR(report.slope, 0.5, 0.05);
}

TEST(Growth, ConvergentCaseFlattens)
{
    const auto report = growth_rate(SpiralSpec::polynomial(0.5, 1, 256), 3.0, {100, 200, 400});
    EXPECT_LE(report.slope, 0.05);
}

TEST(Growth, HarmonicGrowsLogarithmically)
{
    const auto spec = SpiralSpec::polynomial(1.0, 1, 64);
    const auto early = growth_rate(spec, 1.0, {100, 200, 400});
    const auto late = growth_rate(spec, 1.0, {1600, 3200, 6400});
    EXPECT_GT(early.log_slope, 0.0);
    EXPECT_GT(late.log_slope, 0.0);
    EXPECT_LT(late.slope, early.slope);
    EXPECT_LT(late.slope, 0.2);
    for (std::size_t k = 1; k < late.values.size(); ++k) {
        EXPECT_GT(late.values[k], late.values[k - 1]);
    }
}

TEST(Growth, AgreesWithClassification)
{
    const auto spec = SpiralSpec::polynomial(0.5, 1, 256);
    const auto fast = growth_rate(spec, 3.0, {100, 200, 400});
    const auto slow = growth_rate(spec, 1.5, {100, 200, 400});
    EXPECT_EQ(classify_spiral(spec, 3.0).verdict, Verdict::converges);
    EXPECT_EQ(classify_spiral(spec, 1.5).verdict, Verdict::diverges);
    EXPECT_LE(fast.slope, 0.05);
    EXPECT_GT(slow.slope, 0.2);
}

TEST(Growth, InputChecked)
{
    const auto spec = SpiralSpec::polynomial(0.5, 1, 16);
    EXPECT_THROW(growth_rate(spec, 2.0, {10, 20}), ParameterError);
    EXPECT_THROW(growth_rate(spec, 2.0, {10, 20, 15}), ParameterError);
}

} // namespace
} // namespace holder
