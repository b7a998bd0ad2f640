#pragma once

#include <array>

#include "krrf/geom.hpp"
#include "krrf/rng.hpp"

namespace krrf {

/// A point in configuration space: planar position, heading, and the
/// velocity states used by the bike model (u longitudinal, v lateral,
/// omega yaw rate). Car and diff-drive leave the velocity states at zero.
struct Config {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;
    double u = 0.0;
    double v = 0.0;
    double omega = 0.0;

    Point2 position() const { return {x, y}; }

    friend bool operator==(const Config&, const Config&) = default;
};

/// Constant control input held over one rollout. Meaning per model:
/// car (speed, steering), diff (left rate, right rate), bike (accel, steering).
struct Control {
    std::array<double, 2> values{0.0, 0.0};

    friend bool operator==(const Control&, const Control&) = default;
};

/// Metric over configurations: Euclidean distance of position projections.
/// Heading and velocity states never enter distance comparisons.
inline double rho(const Config& a, const Config& b) { return distance(a.position(), b.position()); }
inline double rho(const Config& a, Point2 b) { return distance(a.position(), b); }

/// Uniform sample over the configuration space: position uniform in bounds,
/// heading uniform over (-pi, pi], velocity states zero.
inline Config sample_uniform_config(const Aabb& bounds, Rng& rng) {
    Config q;
    q.x = rng.uniform(bounds.xmin, bounds.xmax);
    q.y = rng.uniform(bounds.ymin, bounds.ymax);
    q.theta = rng.uniform_angle();
    return q;
}

/// Sample with position uniform over the disc of the given radius (by area)
/// and heading uniform; velocity states zero.
inline Config sample_disc_config(Point2 center, double radius, Rng& rng) {
    const double r = radius * std::sqrt(rng.uniform01());
    const double a = rng.uniform_angle();
    Config q;
    q.x = center.x + r * std::cos(a);
    q.y = center.y + r * std::sin(a);
    q.theta = rng.uniform_angle();
    return q;
}

} // namespace krrf
