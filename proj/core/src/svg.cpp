#include "krrf/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "krrf/errors.hpp"

namespace krrf {

namespace {

const char* kLegColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b",
                            "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#ff7f0e"};

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

std::string render_svg_text(const World& world, const MultiGoalTrajectory* trajectory,
                            std::span<const Point2> targets, std::span<const int> order,
                            double target_radius) {
    const Aabb& b = world.bounds();
    const double margin = 0.02 * std::max(b.width(), b.height());
    const double stroke = 0.0025 * std::max(b.width(), b.height());
    // SVG y grows downward; flip into map coordinates.
    auto sy = [&](double y) { return b.ymax + b.ymin - y; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(b.xmin - margin) << " "
        << num(b.ymin - margin) << " " << num(b.width() + 2 * margin) << " "
        << num(b.height() + 2 * margin) << "\">\n";
    out << "<rect x=\"" << num(b.xmin) << "\" y=\"" << num(b.ymin) << "\" width=\""
        << num(b.width()) << "\" height=\"" << num(b.height())
        << "\" fill=\"white\" stroke=\"black\" stroke-width=\"" << num(2 * stroke) << "\"/>\n";

    for (const Polygon& poly : world.obstacles()) {
        out << "<polygon fill=\"#9a9a9a\" stroke=\"none\" points=\"";
        for (std::size_t i = 0; i < poly.vertices().size(); ++i) {
            const Point2& p = poly.vertices()[i];
            if (i > 0) out << ' ';
            out << num(p.x) << ',' << num(sy(p.y));
        }
        out << "\"/>\n";
    }

    for (std::size_t i = 0; i < targets.size(); ++i) {
        const Point2& t = targets[i];
        out << "<circle cx=\"" << num(t.x) << "\" cy=\"" << num(sy(t.y)) << "\" r=\""
            << num(target_radius) << "\" fill=\"none\" stroke=\"#ff8c00\" stroke-width=\""
            << num(stroke) << "\"/>\n";
        out << "<circle cx=\"" << num(t.x) << "\" cy=\"" << num(sy(t.y)) << "\" r=\""
            << num(3 * stroke) << "\" fill=\"#ff8c00\"/>\n";
    }

    if (trajectory) {
        for (std::size_t leg = 0; leg < trajectory->legs.size(); ++leg) {
            const char* color = kLegColors[leg % (sizeof(kLegColors) / sizeof(kLegColors[0]))];
            out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
                << num(stroke) << "\" points=\"";
            bool first = true;
            for (const Segment& seg : trajectory->legs[leg].segments) {
                for (const Config& c : seg.samples) {
                    if (!first) out << ' ';
                    out << num(c.x) << ',' << num(sy(c.y));
                    first = false;
                }
            }
            out << "\"/>\n";
        }
    }

    // visit-order labels go on top of everything else
    const double font = 10 * stroke;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        std::size_t label = i + 1;
        if (!order.empty()) {
            const auto it = std::find(order.begin(), order.end(), static_cast<int>(i));
            if (it != order.end()) label = static_cast<std::size_t>(it - order.begin()) + 1;
        }
        const Point2& t = targets[i];
        out << "<text x=\"" << num(t.x + 4 * stroke) << "\" y=\"" << num(sy(t.y) - 4 * stroke)
            << "\" font-size=\"" << num(font) << "\" fill=\"#333333\">" << label << "</text>\n";
    }

    out << "</svg>\n";
    return out.str();
}

void render_svg(const World& world, const MultiGoalTrajectory* trajectory,
                std::span<const Point2> targets, std::span<const int> order,
                double target_radius, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write svg file: " + path);
    out << render_svg_text(world, trajectory, targets, order, target_radius);
    if (!out) throw Error("error while writing svg file: " + path);
}

} // namespace krrf
