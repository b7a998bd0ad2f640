#include "krrf/scenario.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "krrf/errors.hpp"

namespace krrf {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(const std::string& token, int line_no) {
    try {
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw ParseError("scenario line " + std::to_string(line_no) + ": bad number '" + token +
                         "'");
    }
}

BikeParams& bike_of(ModelSpec& spec) {
    if (!spec.bike) spec.bike = BikeParams{};
    return *spec.bike;
}

} // namespace

bool scenario_fields_equal(const Scenario& a, const Scenario& b) {
    auto planner_eq = [](const PlannerParams& x, const PlannerParams& y) {
        return x.target_radius == y.target_radius && x.heuristic_radius == y.heuristic_radius &&
               x.mc_trials == y.mc_trials && x.rollout_tmax == y.rollout_tmax &&
               x.heuristic_bias == y.heuristic_bias && x.pair_round_cap == y.pair_round_cap &&
               x.root_heading == y.root_heading;
    };
    auto guide_eq = [](const GuideParams& x, const GuideParams& y) {
        return x.guide_bias == y.guide_bias && x.max_iterations == y.max_iterations &&
               x.retry_budget == y.retry_budget;
    };
    auto lazy_eq = [](const LazyParams& x, const LazyParams& y) {
        return x.edge_iteration_cap == y.edge_iteration_cap &&
               x.edge_goal_bias == y.edge_goal_bias;
    };
    return a.map_path == b.map_path && a.model == b.model && a.targets == b.targets &&
           planner_eq(a.planner, b.planner) && guide_eq(a.guide, b.guide) &&
           lazy_eq(a.lazy, b.lazy) && a.seed == b.seed && a.time_limit == b.time_limit;
}

Scenario parse_scenario_text(const std::string& text, const std::string& base_dir,
                             const std::string& id) {
    Scenario s;
    s.id = id;
    s.base_dir = base_dir;
    bool have_map = false, have_seed = false;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string directive;
        if (!(ls >> directive)) continue;

        auto fail = [&](const std::string& msg) -> void {
            throw ParseError("scenario line " + std::to_string(line_no) + ": " + msg);
        };

        if (directive == "map") {
            if (!(ls >> s.map_path)) fail("map needs a path");
            have_map = true;
        } else if (directive == "model") {
            if (!(ls >> s.model.name)) fail("model needs a name");
            if (s.model.name != "car" && s.model.name != "diff" && s.model.name != "bike" &&
                s.model.name != "dubins")
                fail("unknown model '" + s.model.name + "'");
        } else if (directive == "target") {
            std::string sx, sy;
            if (!(ls >> sx >> sy)) fail("target needs x and y");
            s.targets.push_back({parse_double(sx, line_no), parse_double(sy, line_no)});
        } else if (directive == "seed") {
            std::string tok;
            if (!(ls >> tok)) fail("seed needs a value");
            try {
                s.seed = std::stoull(tok);
            } catch (const std::exception&) {
                fail("bad seed '" + tok + "'");
            }
            have_seed = true;
        } else if (directive == "time_limit") {
            std::string tok;
            if (!(ls >> tok)) fail("time_limit needs a value");
            s.time_limit = parse_double(tok, line_no);
            if (s.time_limit <= 0.0) fail("time_limit must be positive");
        } else if (directive == "param") {
            std::string name, tok;
            if (!(ls >> name >> tok)) fail("param needs a name and a value");
            const double v = parse_double(tok, line_no);
            if (name == "target_radius") s.planner.target_radius = v;
            else if (name == "heuristic_radius") s.planner.heuristic_radius = v;
            else if (name == "mc_trials") s.planner.mc_trials = static_cast<int>(v);
            else if (name == "rollout_tmax") s.planner.rollout_tmax = v;
            else if (name == "heuristic_bias") s.planner.heuristic_bias = v;
            else if (name == "pair_round_cap") s.planner.pair_round_cap = static_cast<long>(v);
            else if (name == "root_heading") s.planner.root_heading = v;
            else if (name == "guide_bias") s.guide.guide_bias = v;
            else if (name == "guide_iters") s.guide.max_iterations = static_cast<int>(v);
            else if (name == "retry_budget") s.guide.retry_budget = static_cast<int>(v);
            else if (name == "lazy_edge_iters") s.lazy.edge_iteration_cap = static_cast<int>(v);
            else if (name == "lazy_goal_bias") s.lazy.edge_goal_bias = v;
            else if (name == "dt") s.model.dt = v;
            else if (name == "car_axle_length") s.model.car.axle_length = v;
            else if (name == "diff_wheel_base") s.model.diff.wheel_base = v;
            else if (name == "diff_wheel_radius") s.model.diff.wheel_radius = v;
            else if (name == "dubins_speed") s.model.dubins_speed = v;
            else if (name == "robot_length") s.model.robot_length = v;
            else if (name == "robot_width") s.model.robot_width = v;
            else if (name == "bike_ts") bike_of(s.model).ts = v;
            else if (name == "bike_mass") bike_of(s.model).mass = v;
            else if (name == "bike_lf") bike_of(s.model).lf = v;
            else if (name == "bike_lr") bike_of(s.model).lr = v;
            else if (name == "bike_kf") bike_of(s.model).kf = v;
            else if (name == "bike_kr") bike_of(s.model).kr = v;
            else if (name == "bike_inertia") bike_of(s.model).inertia = v;
            else fail("unknown param '" + name + "'");
        } else {
            fail("unknown directive '" + directive + "'");
        }
    }

    if (!have_map) throw ParseError("scenario has no map line");
    if (!have_seed) throw ParseError("scenario has no seed line");
    if (s.targets.size() < 2) throw ParseError("scenario needs at least two targets");
    if (s.model.name == "bike") {
        // The six bike constants come from outside; there is no sane default.
        if (!s.model.bike || s.model.bike->ts <= 0.0 || s.model.bike->mass <= 0.0 ||
            s.model.bike->lf <= 0.0 || s.model.bike->lr <= 0.0 || s.model.bike->kf == 0.0 ||
            s.model.bike->kr == 0.0 || s.model.bike->inertia <= 0.0)
            throw ParseError("bike model requires bike_ts/mass/lf/lr/kf/kr/inertia params");
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::filesystem::path p(path);
    return parse_scenario_text(buf.str(), p.parent_path().string(), p.stem().string());
}

std::string serialize_scenario(const Scenario& s) {
    std::ostringstream out;
    out << "map " << s.map_path << "\n";
    out << "model " << s.model.name << "\n";
    out << "seed " << s.seed << "\n";
    out << "time_limit " << fmt_double(s.time_limit) << "\n";
    auto param = [&](const char* name, double v) {
        out << "param " << name << " " << fmt_double(v) << "\n";
    };
    param("target_radius", s.planner.target_radius);
    param("heuristic_radius", s.planner.heuristic_radius);
    param("mc_trials", s.planner.mc_trials);
    param("rollout_tmax", s.planner.rollout_tmax);
    param("heuristic_bias", s.planner.heuristic_bias);
    param("pair_round_cap", static_cast<double>(s.planner.pair_round_cap));
    if (s.planner.root_heading) param("root_heading", *s.planner.root_heading);
    param("guide_bias", s.guide.guide_bias);
    param("guide_iters", s.guide.max_iterations);
    param("retry_budget", s.guide.retry_budget);
    param("lazy_edge_iters", s.lazy.edge_iteration_cap);
    param("lazy_goal_bias", s.lazy.edge_goal_bias);
    param("dt", s.model.dt);
    param("car_axle_length", s.model.car.axle_length);
    param("diff_wheel_base", s.model.diff.wheel_base);
    param("diff_wheel_radius", s.model.diff.wheel_radius);
    param("dubins_speed", s.model.dubins_speed);
    if (s.model.robot_length != 0.0) param("robot_length", s.model.robot_length);
    if (s.model.robot_width != 0.0) param("robot_width", s.model.robot_width);
    if (s.model.bike) {
        param("bike_ts", s.model.bike->ts);
        param("bike_mass", s.model.bike->mass);
        param("bike_lf", s.model.bike->lf);
        param("bike_lr", s.model.bike->lr);
        param("bike_kf", s.model.bike->kf);
        param("bike_kr", s.model.bike->kr);
        param("bike_inertia", s.model.bike->inertia);
    }
    for (const Point2& t : s.targets)
        out << "target " << fmt_double(t.x) << " " << fmt_double(t.y) << "\n";
    return out.str();
}

std::unique_ptr<Model> make_model(const ModelSpec& spec) {
    if (spec.name == "car") return std::make_unique<CarModel>(spec.car, spec.dt);
    if (spec.name == "dubins")
        return std::make_unique<DubinsModel>(spec.car, spec.dt, spec.dubins_speed);
    if (spec.name == "diff") return std::make_unique<DiffDriveModel>(spec.diff, spec.dt);
    if (spec.name == "bike") {
        if (!spec.bike) throw ParseError("bike model requires explicit bike params");
        return std::make_unique<BikeModel>(*spec.bike);
    }
    throw ParseError("unknown model '" + spec.name + "'");
}

Footprint make_footprint(const ModelSpec& spec) {
    double length = spec.robot_length;
    double width = spec.robot_width;
    if (length == 0.0) length = 20.0;
    if (width == 0.0) width = spec.name == "bike" ? 10.0 : 20.0;
    return Footprint{0.5 * length, 0.5 * width};
}

World load_world(const Scenario& s) {
    std::filesystem::path map(s.map_path);
    if (map.is_relative() && !s.base_dir.empty()) map = std::filesystem::path(s.base_dir) / map;
    return World::load(map.string(), make_footprint(s.model));
}

} // namespace krrf
