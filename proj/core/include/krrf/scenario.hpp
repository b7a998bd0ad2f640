#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "krrf/guide.hpp"
#include "krrf/lazy_tsp.hpp"
#include "krrf/models.hpp"
#include "krrf/world.hpp"

namespace krrf {

/// Model choice plus every model constant a scenario may set.
struct ModelSpec {
    std::string name = "car"; // car | diff | bike | dubins
    double dt = 0.05;         // RK4 step for the continuous models
    CarParams car;
    DiffParams diff;
    std::optional<BikeParams> bike; // required when name == "bike"
    double dubins_speed = 25.0;
    // Footprint; zero means "use the model's default size".
    double robot_length = 0.0;
    double robot_width = 0.0;

    friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

/// One planning problem: map, model, targets, parameters, seed, budget.
struct Scenario {
    std::string id;
    std::string map_path; // as written in the file; resolved against base_dir
    std::string base_dir;
    ModelSpec model;
    std::vector<Point2> targets;
    PlannerParams planner;
    GuideParams guide;
    LazyParams lazy;
    uint64_t seed = 0;
    double time_limit = 60.0;
};

bool scenario_fields_equal(const Scenario& a, const Scenario& b);

/// Parses a scenario file. Line format, '#' starts a comment:
///   map <path>
///   model <car|diff|bike|dubins>
///   target <x> <y>
///   param <name> <value>
///   seed <n>
///   time_limit <seconds>
/// Unknown directives and unknown param names are parse errors.
Scenario load_scenario(const std::string& path);
Scenario parse_scenario_text(const std::string& text, const std::string& base_dir,
                             const std::string& id);

/// Canonical text form; parse(serialize(s)) reproduces s field by field.
std::string serialize_scenario(const Scenario& s);

/// Instantiates the configured motion model. Throws ParseError when a bike
/// scenario leaves the bike constants unset.
std::unique_ptr<Model> make_model(const ModelSpec& spec);

/// Footprint from the spec, falling back to the model's default robot size
/// (20x20 for car/diff/dubins, 20x10 for bike).
Footprint make_footprint(const ModelSpec& spec);

/// Loads the scenario's world: map file plus the robot footprint.
World load_world(const Scenario& s);

} // namespace krrf
