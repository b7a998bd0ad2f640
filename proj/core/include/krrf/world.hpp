#pragma once

#include <span>
#include <string>
#include <vector>

#include "krrf/geom.hpp"
#include "krrf/state.hpp"

namespace krrf {

/// Polygonal obstacle map with a rectangular robot footprint. Immutable after
/// construction; all queries are const and safe to call concurrently.
class World {
public:
    World(Aabb bounds, std::vector<Polygon> obstacles, Footprint footprint);

    /// Parses a map file. Line format, '#' starts a comment:
    ///   bounds <xmin> <ymin> <xmax> <ymax>
    ///   obstacle <x0> <y0> <x1> <y1> ... <xn> <yn>
    /// Unknown directives are a parse error.
    static World load(const std::string& map_path, Footprint footprint);
    static World parse(const std::string& text, Footprint footprint);

    const Aabb& bounds() const { return bounds_; }
    const std::vector<Polygon>& obstacles() const { return obstacles_; }
    const Footprint& footprint() const { return footprint_; }

    /// True iff the oriented footprint rectangle at q collides with an
    /// obstacle or leaves the bounds. Boundary contact counts as collision.
    bool config_collides(const Config& q) const;

    /// True iff any state of the rollout collides (checked state by state,
    /// at the integrator's sampling resolution).
    bool segment_collides(std::span<const Config> states) const;

    /// True iff the bare position is inside an obstacle or out of bounds.
    bool point_collides(Point2 p) const;

private:
    Aabb bounds_;
    std::vector<Polygon> obstacles_;
    Footprint footprint_;
};

} // namespace krrf
