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

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace holder {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline double squared_distance(const Point& a, const Point& b)
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

inline double distance(const Point& a, const Point& b)
{
    return std::sqrt(squared_distance(a, b));
}

/// Inclusive index range [lo, hi] of samples, lo < hi.
struct SubarcRange {
    std::size_t lo = 0;
    std::size_t hi = 0;

    friend bool operator==(const SubarcRange&, const SubarcRange&) = default;
};

/// An injective planar arc given by strictly increasing parameter samples
/// and the corresponding points. Immutable after construction.
///
/// Construction rejects non-finite values, non-increasing parameters,
/// fewer than two samples and repeated consecutive points. Injectivity is
/// not checked here (it is O(n^2) in the worst case); see
/// find_self_intersection().
class SampledArc {
public:
    using Meta = std::map<std::string, std::string>;

    SampledArc(std::vector<double> params, std::vector<Point> points, Meta meta = {});

    std::size_t size() const { return points_.size(); }
    const std::vector<double>& params() const { return params_; }
    const std::vector<Point>& points() const { return points_; }
    const Meta& meta() const { return meta_; }

    double param(std::size_t i) const { return params_[i]; }
    const Point& point(std::size_t i) const { return points_[i]; }

    SubarcRange full_range() const { return {0, size() - 1}; }

    /// Throws RangeError unless 0 <= lo < hi <= size()-1.
    void check_range(SubarcRange range) const;

    /// Copy of the samples in `range`, meta preserved.
    SampledArc subarc(SubarcRange range) const;

    /// Same point set traversed backwards; parameters become -t so they
    /// stay increasing.
    SampledArc reversed() const;

    /// Points multiplied by `factor` (> 0), parameters unchanged.
    SampledArc scaled(double factor) const;

private:
    std::vector<double> params_;
    std::vector<Point> points_;
    Meta meta_;
};

/// Largest squared distance between two sample points of the range.
double diameter_squared(const SampledArc& arc, SubarcRange range);

/// Largest distance between two sample points of the range.
double diameter(const SampledArc& arc, SubarcRange range);

/// M[j] = max over k in [j, i] of |p_k - p_i|, for j = 0..i, computed by
/// one backward sweep. Throws RangeError unless 0 < i < size().
std::vector<double> suffix_max_distances(const SampledArc& arc, std::size_t i);

/// Length of the inscribed polyline over the range.
double arc_length(const SampledArc& arc, SubarcRange range);

/// Indices (a, b), a < b, of two polyline segments [p_a, p_a+1] and
/// [p_b, p_b+1] that meet where they should not, or nullopt when the
/// polyline is simple. Adjacent segments may only share their common
/// vertex.
std::optional<std::pair<std::size_t, std::size_t>> find_self_intersection(const SampledArc& arc);

inline bool is_injective(const SampledArc& arc)
{
    return !find_self_intersection(arc).has_value();
}

namespace detail {

/// d^s from d^2, with exact shortcuts for the common integer exponents.
/// Every s-power of a distance in the library goes through this function
/// so that independently computed quantities round identically.
inline double pow_from_squared(double d2, double s)
{
    if (s == 2.0) {
        return d2;
    }
    if (s == 1.0) {
        return std::sqrt(d2);
    }
    if (s == 3.0) {
        return d2 * std::sqrt(d2);
    }
    if (s == 4.0) {
        return d2 * d2;
    }
    return std::pow(d2, 0.5 * s);
}

} // namespace detail

} // namespace holder
