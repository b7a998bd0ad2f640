#pragma once

#include <span>
#include <string>

#include "krrf/trajectory.hpp"
#include "krrf/world.hpp"

namespace krrf {

/// Renders the world and an optional multi-goal trajectory to an SVG file:
/// filled obstacles, a bounds frame, a target-region circle and visit-order
/// label per target, and one polyline per trajectory leg (each polyline
/// carries every sampled state of its leg). Pass nullptr to draw the map and
/// targets only. Throws Error on I/O failure.
void render_svg(const World& world, const MultiGoalTrajectory* trajectory,
                std::span<const Point2> targets, std::span<const int> order,
                double target_radius, const std::string& path);

std::string render_svg_text(const World& world, const MultiGoalTrajectory* trajectory,
                            std::span<const Point2> targets, std::span<const int> order,
                            double target_radius);

} // namespace krrf
