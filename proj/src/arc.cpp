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

#include "holder/arc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "holder/error.hpp"

namespace holder {

namespace {

bool finite(const Point& p)
{
    return std::isfinite(p.x) && std::isfinite(p.y);
}

double cross(const Point& o, const Point& a, const Point& b)
{
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew's monotone chain. Collinear boundary points are dropped; the
// diameter of a point set is attained between hull vertices.
std::vector<Point> convex_hull(std::vector<Point> pts)
{
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) {
        return pts;
    }
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) {
            --k;
        }
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) {
            --k;
        }
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

double max_pairwise_squared(const std::vector<Point>& pts)
{
    double best = 0.0;
    for (std::size_t a = 0; a < pts.size(); ++a) {
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            best = std::max(best, squared_distance(pts[a], pts[b]));
        }
    }
    return best;
}

bool on_segment(const Point& a, const Point& b, const Point& p)
{
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y
        && p.y <= std::max(a.y, b.y);
}

int sign(double v)
{
    return (v > 0) - (v < 0);
}

bool segments_meet(const Point& a, const Point& b, const Point& c, const Point& d)
{
    const int o1 = sign(cross(a, b, c));
    const int o2 = sign(cross(a, b, d));
    const int o3 = sign(cross(c, d, a));
    const int o4 = sign(cross(c, d, b));
    if (o1 != o2 && o3 != o4) {
        return true;
    }
    return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d))
        || (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

// Adjacent segments [a,b] and [b,c] overlap beyond b only when they are
// collinear and fold back onto each other.
bool adjacent_fold(const Point& a, const Point& b, const Point& c)
{
    if (cross(a, b, c) != 0.0) {
        return false;
    }
    const double dot = (a.x - b.x) * (c.x - b.x) + (a.y - b.y) * (c.y - b.y);
    return dot > 0.0;
}

} // namespace

SampledArc::SampledArc(std::vector<double> params, std::vector<Point> points, Meta meta)
    : params_(std::move(params))
    , points_(std::move(points))
    , meta_(std::move(meta))
{
    if (params_.size() != points_.size()) {
        throw ArcError("arc has " + std::to_string(params_.size()) + " parameters but "
                       + std::to_string(points_.size()) + " points");
    }
    if (points_.size() < 2) {
        throw ArcError("arc needs at least 2 samples");
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(params_[i]) || !finite(points_[i])) {
            throw ArcError("non-finite value at sample " + std::to_string(i));
        }
        if (i > 0 && !(params_[i] > params_[i - 1])) {
            throw ArcError("parameters not strictly increasing at sample " + std::to_string(i));
        }
        if (i > 0 && points_[i] == points_[i - 1]) {
            throw ArcError("repeated consecutive point at sample " + std::to_string(i));
        }
    }
}

void SampledArc::check_range(SubarcRange range) const
{
    if (range.lo >= range.hi || range.hi >= size()) {
        std::ostringstream msg;
        msg << "invalid subarc range [" << range.lo << ", " << range.hi << "] for arc of "
            << size() << " samples";
        throw RangeError(msg.str());
    }
}

SampledArc SampledArc::subarc(SubarcRange range) const
{
    check_range(range);
    const auto lo = static_cast<std::ptrdiff_t>(range.lo);
    const auto hi = static_cast<std::ptrdiff_t>(range.hi) + 1;
    return SampledArc({params_.begin() + lo, params_.begin() + hi},
                      {points_.begin() + lo, points_.begin() + hi}, meta_);
}

SampledArc SampledArc::reversed() const
{
    std::vector<double> t(params_.rbegin(), params_.rend());
    for (auto& v : t) {
        v = -v;
    }
    return SampledArc(std::move(t), {points_.rbegin(), points_.rend()}, meta_);
}

SampledArc SampledArc::scaled(double factor) const
{
    if (!(factor > 0.0) || !std::isfinite(factor)) {
        throw ArcError("scale factor must be positive and finite");
    }
    std::vector<Point> pts = points_;
    for (auto& p : pts) {
        p.x *= factor;
        p.y *= factor;
    }
    return SampledArc(params_, std::move(pts), meta_);
}

double diameter_squared(const SampledArc& arc, SubarcRange range)
{
    arc.check_range(range);
    const auto& pts = arc.points();
    std::vector<Point> window(pts.begin() + static_cast<std::ptrdiff_t>(range.lo),
                              pts.begin() + static_cast<std::ptrdiff_t>(range.hi) + 1);
    if (window.size() <= 32) {
        return max_pairwise_squared(window);
    }
    return max_pairwise_squared(convex_hull(std::move(window)));
}

double diameter(const SampledArc& arc, SubarcRange range)
{
    return std::sqrt(diameter_squared(arc, range));
}

std::vector<double> suffix_max_distances(const SampledArc& arc, std::size_t i)
{
    if (i == 0 || i >= arc.size()) {
        throw RangeError("suffix_max_distances: index " + std::to_string(i) + " outside (0, "
                         + std::to_string(arc.size() - 1) + "]");
    }
    const auto& pts = arc.points();
    std::vector<double> out(i + 1, 0.0);
    double running = 0.0;
    for (std::size_t j = i; j-- > 0;) {
        running = std::max(running, squared_distance(pts[j], pts[i]));
        out[j] = running;
    }
    for (auto& v : out) {
        v = std::sqrt(v);
    }
    return out;
}

double arc_length(const SampledArc& arc, SubarcRange range)
{
    arc.check_range(range);
    const auto& pts = arc.points();
    double total = 0.0;
    for (std::size_t k = range.lo; k < range.hi; ++k) {
        total += distance(pts[k], pts[k + 1]);
    }
    return total;
}

std::optional<std::pair<std::size_t, std::size_t>> find_self_intersection(const SampledArc& arc)
{
    const auto& pts = arc.points();
    const std::size_t segs = arc.size() - 1;

    struct Box {
        double xmin, xmax, ymin, ymax;
    };
    std::vector<Box> boxes(segs);
    for (std::size_t k = 0; k < segs; ++k) {
        const auto& a = pts[k];
        const auto& b = pts[k + 1];
        boxes[k] = {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)};
    }
    std::vector<std::size_t> order(segs);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return boxes[a].xmin < boxes[b].xmin; });

    std::optional<std::pair<std::size_t, std::size_t>> found;
    for (std::size_t oi = 0; oi < segs; ++oi) {
        const std::size_t a = order[oi];
        for (std::size_t oj = oi + 1; oj < segs && boxes[order[oj]].xmin <= boxes[a].xmax; ++oj) {
            const std::size_t b = order[oj];
            if (boxes[b].ymin > boxes[a].ymax || boxes[b].ymax < boxes[a].ymin) {
                continue;
            }
            const auto lo = std::min(a, b);
            const auto hi = std::max(a, b);
            bool hit = false;
            if (hi == lo + 1) {
                hit = adjacent_fold(pts[lo], pts[hi], pts[hi + 1]);
            } else {
                hit = segments_meet(pts[lo], pts[lo + 1], pts[hi], pts[hi + 1]);
            }
            if (hit && (!found || std::pair(lo, hi) < *found)) {
                found = std::pair(lo, hi);
            }
        }
    }
    return found;
}

} // namespace holder
