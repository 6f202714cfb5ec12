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

#include "holder/spiral.hpp"

#include <algorithm>
#include <cmath>

#include "holder/arc_io.hpp"
#include "holder/error.hpp"

namespace holder {

namespace {

constexpr double boundary_tol = 1e-9;

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};

double ring_param(std::size_t j, std::size_t k, std::size_t m)
{
    return two_pi * (static_cast<double>(j * m + k) / static_cast<double>(m));
}

void check_table_covers(const TabulatedKind& table, double lo, double hi)
{
    const double slack = boundary_tol * std::max(1.0, std::abs(hi));
    if (table.t.front() > lo + slack || table.t.back() < hi - slack) {
        throw RangeError("tabulated phi covers t in [" + io::format_number(table.t.front()) + ", "
                         + io::format_number(table.t.back()) + "] but [" + io::format_number(lo)
                         + ", " + io::format_number(hi) + "] is required");
    }
}

} // namespace

SpiralSpec::SpiralSpec(Kind kind, std::size_t turns, std::size_t samples_per_turn)
    : kind_(std::move(kind))
    , turns_(turns)
    , samples_per_turn_(samples_per_turn)
{
    if (turns_ == 0) {
        throw SpecError("spiral needs at least one turn");
    }
    if (samples_per_turn_ < 2) {
        throw SpecError("spiral needs at least 2 samples per turn");
    }
    std::visit(overloaded{
                   [](const PolynomialKind& k) {
                       if (!(k.p > 0.0) || !std::isfinite(k.p)) {
                           throw SpecError("polynomial spiral needs p > 0");
                       }
                   },
                   [](const EllipticalKind& k) {
                       if (!(k.p > 0.0) || !std::isfinite(k.q) || !(k.p <= k.q)) {
                           throw SpecError("elliptical spiral needs 0 < p <= q");
                       }
                   },
                   [](const TabulatedKind& k) {
                       if (k.t.size() != k.phi.size() || k.t.size() < 2) {
                           throw SpecError("tabulated phi needs matching t/phi columns of length >= 2");
                       }
                       for (std::size_t i = 0; i < k.t.size(); ++i) {
                           if (!std::isfinite(k.t[i]) || !std::isfinite(k.phi[i]) || !(k.phi[i] > 0.0)) {
                               throw SpecError("tabulated phi must be finite and positive (row "
                                               + std::to_string(i) + ")");
                           }
                           if (i > 0 && !(k.t[i] > k.t[i - 1])) {
                               throw SpecError("tabulated t must be strictly increasing (row "
                                               + std::to_string(i) + ")");
                           }
                       }
                       if (k.phi.back() > k.phi.front()) {
                           throw SpecError("tabulated phi must not end above its first value");
                       }
                   },
               },
               kind_);
}

SpiralSpec SpiralSpec::polynomial(double p, std::size_t turns, std::size_t samples_per_turn)
{
    return SpiralSpec(PolynomialKind{p}, turns, samples_per_turn);
}

SpiralSpec SpiralSpec::elliptical(double p, double q, std::size_t turns, std::size_t samples_per_turn)
{
    return SpiralSpec(EllipticalKind{p, q}, turns, samples_per_turn);
}

SpiralSpec SpiralSpec::tabulated(std::vector<double> t, std::vector<double> phi, std::size_t turns,
                                 std::size_t samples_per_turn)
{
    return SpiralSpec(TabulatedKind{std::move(t), std::move(phi)}, turns, samples_per_turn);
}

std::string SpiralSpec::kind_name() const
{
    return std::visit(overloaded{
                          [](const PolynomialKind&) { return std::string("poly"); },
                          [](const EllipticalKind&) { return std::string("ell"); },
                          [](const TabulatedKind&) { return std::string("tab"); },
                      },
                      kind_);
}

double SpiralSpec::decay_exponent() const
{
    if (const auto* k = std::get_if<PolynomialKind>(&kind_)) {
        return k->p;
    }
    if (const auto* k = std::get_if<EllipticalKind>(&kind_)) {
        return k->p;
    }
    throw SpecError("tabulated spirals have no analytic decay exponent");
}

SpiralSpec SpiralSpec::with_turns(std::size_t turns) const
{
    return SpiralSpec(kind_, turns, samples_per_turn_);
}

SpiralSpec SpiralSpec::with_samples_per_turn(std::size_t samples_per_turn) const
{
    return SpiralSpec(kind_, turns_, samples_per_turn);
}

Point SpiralSpec::point_at(double t) const
{
    const double c = std::cos(t);
    const double s = std::sin(t);
    return std::visit(overloaded{
                          [&](const PolynomialKind& k) {
                              const double r = std::pow(t, -k.p);
                              return Point{r * c, r * s};
                          },
                          [&](const EllipticalKind& k) {
                              return Point{std::pow(t, -k.p) * c, std::pow(t, -k.q) * s};
                          },
                          [&](const TabulatedKind& k) {
                              const double r = interpolate_table(k, t);
                              return Point{r * c, r * s};
                          },
                      },
                      kind_);
}

SampledArc::Meta SpiralSpec::describe() const
{
    SampledArc::Meta meta{{"kind", kind_name()},
                          {"turns", std::to_string(turns_)},
                          {"samples_per_turn", std::to_string(samples_per_turn_)},
                          {"t_start", "2pi"}};
    std::visit(overloaded{
                   [&](const PolynomialKind& k) { meta["p"] = io::format_number(k.p); },
                   [&](const EllipticalKind& k) {
                       meta["p"] = io::format_number(k.p);
                       meta["q"] = io::format_number(k.q);
                   },
                   [&](const TabulatedKind& k) { meta["table_rows"] = std::to_string(k.t.size()); },
               },
               kind_);
    return meta;
}

double interpolate_table(const TabulatedKind& table, double t)
{
    const auto& ts = table.t;
    const double slack = boundary_tol * std::max(1.0, std::abs(t));
    if (t < ts.front() - slack || t > ts.back() + slack) {
        throw RangeError("t = " + io::format_number(t) + " outside the tabulated range");
    }
    t = std::clamp(t, ts.front(), ts.back());
    const auto it = std::upper_bound(ts.begin(), ts.end(), t);
    if (it == ts.end()) {
        return table.phi.back();
    }
    const auto hi = static_cast<std::size_t>(it - ts.begin());
    if (hi == 0) {
        return table.phi.front();
    }
    const std::size_t lo = hi - 1;
    const double w = (t - ts[lo]) / (ts[hi] - ts[lo]);
    return table.phi[lo] + w * (table.phi[hi] - table.phi[lo]);
}

SampledArc generate(const SpiralSpec& spec)
{
    const std::size_t m = spec.samples_per_turn();
    const std::size_t count = spec.turns() * m + 1;
    if (const auto* table = std::get_if<TabulatedKind>(&spec.kind())) {
        check_table_covers(*table, two_pi, two_pi * static_cast<double>(spec.turns() + 1));
    }
    std::vector<double> t(count);
    std::vector<Point> pts(count);
    for (std::size_t k = 0; k < count; ++k) {
        t[k] = ring_param(1, k, m);
        pts[k] = spec.point_at(t[k]);
    }
    return SampledArc(std::move(t), std::move(pts), spec.describe());
}

SampledArc generate_ring(const SpiralSpec& spec, std::size_t j)
{
    if (j == 0) {
        throw RangeError("rings are numbered from 1");
    }
    const std::size_t m = spec.samples_per_turn();
    if (const auto* table = std::get_if<TabulatedKind>(&spec.kind())) {
        check_table_covers(*table, two_pi * static_cast<double>(j), two_pi * static_cast<double>(j + 1));
    }
    std::vector<double> t(m + 1);
    std::vector<Point> pts(m + 1);
    for (std::size_t k = 0; k <= m; ++k) {
        t[k] = ring_param(j, k, m);
        pts[k] = spec.point_at(t[k]);
    }
    auto meta = spec.describe();
    meta["ring"] = std::to_string(j);
    return SampledArc(std::move(t), std::move(pts), std::move(meta));
}

RingDecomposition decompose_rings(const SampledArc& arc)
{
    const auto& ts = arc.params();
    const double t0 = ts.front();
    const double t1 = ts.back();
    const auto first = static_cast<long long>(std::ceil(t0 / two_pi - boundary_tol));
    const auto last = static_cast<long long>(std::floor(t1 / two_pi + boundary_tol));
    if (last - first < 1) {
        throw AlignmentError("arc covers no full turn t in [2*pi*j, 2*pi*(j+1)]");
    }

    auto index_of = [&](long long b) {
        const double target = two_pi * static_cast<double>(b);
        const double tol = boundary_tol * std::max(1.0, std::abs(target));
        const auto it = std::lower_bound(ts.begin(), ts.end(), target - tol);
        if (it == ts.end() || std::abs(*it - target) > tol) {
            throw AlignmentError("parameter grid misses the ring boundary t = 2*pi*"
                                 + std::to_string(b));
        }
        return static_cast<std::size_t>(it - ts.begin());
    };

    RingDecomposition out;
    std::size_t lo = index_of(first);
    for (long long b = first; b < last; ++b) {
        const std::size_t hi = index_of(b + 1);
        Ring ring;
        ring.j = static_cast<std::size_t>(b);
        ring.range = {lo, hi};
        for (std::size_t k = lo; k <= hi; ++k) {
            const auto& p = arc.point(k);
            ring.phi_j = std::max(ring.phi_j, std::hypot(p.x, p.y));
        }
        ring.length_j = arc_length(arc, ring.range);
        ring.diam_j = diameter(arc, ring.range);
        out.c_phi_estimate = std::max(out.c_phi_estimate, ring.length_j / ring.phi_j);
        out.rings.push_back(ring);
        lo = hi;
    }
    return out;
}

std::vector<double> phi_sequence(const SpiralSpec& spec, std::size_t count)
{
    if (count == 0) {
        throw RangeError("phi_sequence needs at least one ring");
    }
    std::vector<double> out(count);
    if (const auto* table = std::get_if<TabulatedKind>(&spec.kind())) {
        check_table_covers(*table, two_pi, two_pi * static_cast<double>(count + 1));
        for (std::size_t j = 1; j <= count; ++j) {
            const double a = two_pi * static_cast<double>(j);
            const double b = two_pi * static_cast<double>(j + 1);
            double best = std::max(interpolate_table(*table, a), interpolate_table(*table, b));
            const auto from = std::upper_bound(table->t.begin(), table->t.end(), a);
            for (auto it = from; it != table->t.end() && *it < b; ++it) {
                best = std::max(best, table->phi[static_cast<std::size_t>(it - table->t.begin())]);
            }
            out[j - 1] = best;
        }
        return out;
    }
    const double p = spec.decay_exponent();
    for (std::size_t j = 1; j <= count; ++j) {
        out[j - 1] = std::pow(two_pi * static_cast<double>(j), -p);
    }
    return out;
}

} // namespace holder
