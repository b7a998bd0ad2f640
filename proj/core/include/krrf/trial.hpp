#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "krrf/scenario.hpp"

namespace krrf {

enum class PlannerKind { krrf, lazytsp };

std::string_view planner_name(PlannerKind kind);
PlannerKind planner_from_name(const std::string& name); // throws ParseError

struct TrialRecord {
    std::string scenario_id;
    std::string planner;
    uint64_t seed = 0;
    bool success = false;
    double cost = std::numeric_limits<double>::quiet_NaN();
    double t_forest = 0.0;
    double t_tsp = 0.0;
    double t_guide = 0.0;
    double t_total = 0.0;
    std::string fail_reason;
};

/// Field-by-field equality; timings are skipped when ignore_timings is set
/// (they vary run to run, everything else must reproduce exactly).
bool records_equal(const TrialRecord& a, const TrialRecord& b, bool ignore_timings);

struct TrialOutput {
    TrialRecord record;
    std::optional<MultiGoalTrajectory> trajectory;
    std::vector<int> tour_order;
};

/// Runs the full pipeline for one seeded scenario under its wall-clock limit.
/// Produces a record for every outcome; planner failures become
/// success=false with a reason, only configuration errors (unreadable or
/// malformed files) propagate.
TrialOutput run_trial_full(const Scenario& scenario, PlannerKind kind);
TrialRecord run_trial(const Scenario& scenario, PlannerKind kind);

struct BatchSummary {
    int trials = 0;
    int successes = 0;
    double success_rate = 0.0;
    std::optional<double> cost_mean, cost_std;   // over successful trials
    std::optional<double> time_mean, time_std;   // t_total over successful trials
};

struct BatchResult {
    std::vector<TrialRecord> records;
    BatchSummary summary;
};

BatchSummary summarize(std::span<const TrialRecord> records);

/// Independent trials with seeds seed_base + 0 .. seed_base + n_trials - 1,
/// run on up to `jobs` threads. Record i always belongs to seed_base + i.
BatchResult run_batch(const Scenario& scenario, PlannerKind kind, int n_trials,
                      uint64_t seed_base, int jobs);

// --- CSV schema (fixed column order) ---
std::string csv_header();
std::string to_csv_row(const TrialRecord& record);
TrialRecord parse_csv_row(const std::string& line); // throws ParseError

// --- trajectory dump (controls + durations; samples are re-integrated) ---
std::string serialize_trajectory(const MultiGoalTrajectory& mgt, std::string_view model_name);
MultiGoalTrajectory parse_trajectory(const std::string& text, const Model& model);
void write_trajectory_file(const std::string& path, const MultiGoalTrajectory& mgt,
                           std::string_view model_name);
MultiGoalTrajectory load_trajectory_file(const std::string& path, const Model& model);

/// Visiting order implied by the per-leg arrival targets of a trajectory.
std::vector<int> tour_order_of(const MultiGoalTrajectory& mgt);

} // namespace krrf
