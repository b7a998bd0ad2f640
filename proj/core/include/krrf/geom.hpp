#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace krrf {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline double distance_sq(Point2 a, Point2 b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

/// Normalizes an angle to (-pi, pi].
inline double normalize_angle(double a) {
    a = std::fmod(a, 2.0 * std::numbers::pi);
    if (a <= -std::numbers::pi)
        a += 2.0 * std::numbers::pi;
    else if (a > std::numbers::pi)
        a -= 2.0 * std::numbers::pi;
    return a;
}

struct Aabb {
    double xmin = 0.0, ymin = 0.0, xmax = 0.0, ymax = 0.0;

    bool contains(Point2 p) const {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }
    bool overlaps(const Aabb& o) const {
        return xmin <= o.xmax && o.xmin <= xmax && ymin <= o.ymax && o.ymin <= ymax;
    }
    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }

    friend bool operator==(const Aabb&, const Aabb&) = default;
};

/// Sign of the turn p -> q -> r: +1 counter-clockwise, -1 clockwise, 0 collinear.
int orientation(Point2 p, Point2 q, Point2 r);

/// True iff p lies on the closed segment [a, b].
bool point_on_segment(Point2 p, Point2 a, Point2 b);

/// True iff closed segments [a,b] and [c,d] share at least one point
/// (touching endpoints and collinear overlap count).
bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d);

/// Simple polygon. Vertices are normalized to counter-clockwise order on
/// construction; self-intersecting or degenerate input throws.
class Polygon {
public:
    explicit Polygon(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const { return vertices_; }
    const Aabb& aabb() const { return aabb_; }
    std::size_t size() const { return vertices_.size(); }

private:
    std::vector<Point2> vertices_;
    Aabb aabb_;
};

/// True iff p is inside poly; boundary points count as inside.
bool point_in_polygon(Point2 p, const Polygon& poly);

/// Rectangular robot footprint, dimensions given as half extents.
struct Footprint {
    double half_length = 10.0; // along the heading axis
    double half_width = 10.0;

    friend bool operator==(const Footprint&, const Footprint&) = default;
};

/// Corners of the footprint rectangle placed at `center` with heading `theta`,
/// in counter-clockwise order.
std::array<Point2, 4> footprint_corners(Point2 center, double theta, const Footprint& fp);

} // namespace krrf
