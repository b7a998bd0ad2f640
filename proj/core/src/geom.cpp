#include "krrf/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace krrf {

int orientation(Point2 p, Point2 q, Point2 r) {
    const double v = cross(q - p, r - p);
    if (v > 0.0) return 1;
    if (v < 0.0) return -1;
    return 0;
}

bool point_on_segment(Point2 p, Point2 a, Point2 b) {
    if (orientation(a, b, p) != 0) return false;
    return p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x) &&
           p.y >= std::min(a.y, b.y) && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);

    if (o1 != o2 && o3 != o4) return true;

    if (o1 == 0 && point_on_segment(c, a, b)) return true;
    if (o2 == 0 && point_on_segment(d, a, b)) return true;
    if (o3 == 0 && point_on_segment(a, c, d)) return true;
    if (o4 == 0 && point_on_segment(b, c, d)) return true;
    return false;
}

namespace {

double signed_area(const std::vector<Point2>& v) {
    double acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % v.size()];
        acc += cross(a, b);
    }
    return 0.5 * acc;
}

bool edges_adjacent(std::size_t i, std::size_t j, std::size_t n) {
    return i == j || (i + 1) % n == j || (j + 1) % n == i;
}

void check_simple(const std::vector<Point2>& v) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = v[i];
        const Point2 b = v[(i + 1) % n];
        if (a == b) throw std::invalid_argument("polygon has a zero-length edge");
        for (std::size_t j = i + 1; j < n; ++j) {
            if (edges_adjacent(i, j, n)) continue;
            const Point2 c = v[j];
            const Point2 d = v[(j + 1) % n];
            if (segments_intersect(a, b, c, d))
                throw std::invalid_argument("polygon is self-intersecting");
        }
    }
}

Aabb vertices_aabb(const std::vector<Point2>& v) {
    Aabb box{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
             -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const Point2& p : v) {
        box.xmin = std::min(box.xmin, p.x);
        box.ymin = std::min(box.ymin, p.y);
        box.xmax = std::max(box.xmax, p.x);
        box.ymax = std::max(box.ymax, p.y);
    }
    return box;
}

} // namespace

Polygon::Polygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    for (const Point2& p : vertices_) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw std::invalid_argument("polygon vertex is not finite");
    }
    check_simple(vertices_);
    const double area = signed_area(vertices_);
    if (area == 0.0) throw std::invalid_argument("polygon has zero area");
    if (area < 0.0) std::reverse(vertices_.begin(), vertices_.end());
    aabb_ = vertices_aabb(vertices_);
}

bool point_in_polygon(Point2 p, const Polygon& poly) {
    if (!poly.aabb().contains(p)) return false;
    const auto& v = poly.vertices();
    const std::size_t n = v.size();
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = v[i];
        const Point2 b = v[(i + 1) % n];
        if (point_on_segment(p, a, b)) return true;
        if ((a.y > p.y) != (b.y > p.y)) {
            const double t = (p.y - a.y) / (b.y - a.y);
            const double x_hit = a.x + t * (b.x - a.x);
            if (p.x < x_hit) inside = !inside;
        }
    }
    return inside;
}

std::array<Point2, 4> footprint_corners(Point2 center, double theta, const Footprint& fp) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Point2 ax{c * fp.half_length, s * fp.half_length};  // heading axis
    const Point2 ay{-s * fp.half_width, c * fp.half_width};   // lateral axis
    return {center + ax + ay, center - ax + ay, center - ax - ay, center + ax - ay};
}

} // namespace krrf
