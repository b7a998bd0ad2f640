#include "krrf/world.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "krrf/errors.hpp"

namespace krrf {

World::World(Aabb bounds, std::vector<Polygon> obstacles, Footprint footprint)
    : bounds_(bounds), obstacles_(std::move(obstacles)), footprint_(footprint) {
    if (!(bounds_.xmin < bounds_.xmax) || !(bounds_.ymin < bounds_.ymax))
        throw ParseError("map bounds are degenerate");
    if (footprint_.half_length <= 0.0 || footprint_.half_width <= 0.0)
        throw ParseError("robot footprint extents must be positive");
    for (const Polygon& poly : obstacles_) {
        for (const Point2& p : poly.vertices()) {
            if (!bounds_.contains(p))
                throw ParseError("obstacle vertex outside map bounds");
        }
    }
}

World World::load(const std::string& map_path, Footprint footprint) {
    std::ifstream in(map_path);
    if (!in) throw ParseError("cannot open map file: " + map_path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), footprint);
}

World World::parse(const std::string& text, Footprint footprint) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_bounds = false;
    Aabb bounds;
    std::vector<Polygon> obstacles;

    auto fail = [&](const std::string& msg) -> void {
        throw ParseError("map line " + std::to_string(line_no) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string directive;
        if (!(ls >> directive)) continue; // blank or comment-only line

        if (directive == "bounds") {
            if (have_bounds) fail("duplicate bounds directive");
            if (!(ls >> bounds.xmin >> bounds.ymin >> bounds.xmax >> bounds.ymax))
                fail("bounds needs four numbers");
            have_bounds = true;
        } else if (directive == "obstacle") {
            std::vector<double> coords;
            double value = 0.0;
            while (ls >> value) coords.push_back(value);
            if (!ls.eof()) fail("obstacle has a non-numeric token");
            if (coords.size() < 6 || coords.size() % 2 != 0)
                fail("obstacle needs at least 3 x,y pairs");
            std::vector<Point2> verts;
            verts.reserve(coords.size() / 2);
            for (std::size_t i = 0; i + 1 < coords.size(); i += 2)
                verts.push_back({coords[i], coords[i + 1]});
            try {
                obstacles.emplace_back(std::move(verts));
            } catch (const std::invalid_argument& e) {
                fail(e.what());
            }
        } else {
            fail("unknown directive '" + directive + "'");
        }
        std::string rest;
        if (ls >> rest) fail("trailing token '" + rest + "'");
    }
    if (!have_bounds) throw ParseError("map has no bounds directive");
    return World(bounds, std::move(obstacles), footprint);
}

namespace {

Aabb corners_aabb(const std::array<Point2, 4>& c) {
    Aabb box{c[0].x, c[0].y, c[0].x, c[0].y};
    for (int i = 1; i < 4; ++i) {
        box.xmin = std::min(box.xmin, c[i].x);
        box.ymin = std::min(box.ymin, c[i].y);
        box.xmax = std::max(box.xmax, c[i].x);
        box.ymax = std::max(box.ymax, c[i].y);
    }
    return box;
}

bool point_in_rect(Point2 p, const std::array<Point2, 4>& c) {
    // CCW rectangle: inside (or on boundary) iff never strictly right of an edge.
    for (int i = 0; i < 4; ++i) {
        if (orientation(c[i], c[(i + 1) % 4], p) < 0) return false;
    }
    return true;
}

bool rect_hits_polygon(const std::array<Point2, 4>& rect, const Polygon& poly) {
    const auto& v = poly.vertices();
    const std::size_t n = v.size();
    for (int i = 0; i < 4; ++i) {
        const Point2 a = rect[i];
        const Point2 b = rect[(i + 1) % 4];
        for (std::size_t j = 0; j < n; ++j) {
            if (segments_intersect(a, b, v[j], v[(j + 1) % n])) return true;
        }
    }
    // No edge crossings: either one shape contains the other or they are apart.
    if (point_in_polygon(rect[0], poly)) return true;
    if (point_in_rect(v[0], rect)) return true;
    return false;
}

} // namespace

bool World::config_collides(const Config& q) const {
    const auto corners = footprint_corners(q.position(), q.theta, footprint_);
    for (const Point2& c : corners) {
        if (!(c.x > bounds_.xmin && c.x < bounds_.xmax && c.y > bounds_.ymin &&
              c.y < bounds_.ymax))
            return true; // touching the boundary counts as collision
    }
    const Aabb box = corners_aabb(corners);
    for (const Polygon& poly : obstacles_) {
        if (!box.overlaps(poly.aabb())) continue;
        if (rect_hits_polygon(corners, poly)) return true;
    }
    return false;
}

bool World::segment_collides(std::span<const Config> states) const {
    for (const Config& q : states) {
        if (config_collides(q)) return true;
    }
    return false;
}

bool World::point_collides(Point2 p) const {
    if (!(p.x > bounds_.xmin && p.x < bounds_.xmax && p.y > bounds_.ymin && p.y < bounds_.ymax))
        return true;
    for (const Polygon& poly : obstacles_) {
        if (!poly.aabb().contains(p)) continue;
        if (point_in_polygon(p, poly)) return true;
    }
    return false;
}

} // namespace krrf
