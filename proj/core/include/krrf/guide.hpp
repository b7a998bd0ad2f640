#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "krrf/deadline.hpp"
#include "krrf/forest.hpp"

namespace krrf {

struct GuideParams {
    double guide_bias = 0.9; // probability of sampling near the active waypoint
    int max_iterations = 25000; // tree iterations per segment attempt
    int retry_budget = 0;       // consecutive failed attempts allowed; 0 means 5 * n
};

/// Flattens a trajectory into sampling waypoints spaced roughly `spacing`
/// apart along the path (first and last points always included). Reversed
/// guides are walked from the far end.
std::vector<Point2> guide_waypoints(const Trajectory& traj, double spacing, bool reversed);

/// Grows a tree from q_start, sampling near the active guide waypoint with
/// probability guide_bias and uniformly otherwise. Succeeds when a new node
/// lands within target_radius of the target; the waypoint advances whenever a
/// new node lands within target_radius of it. Returns nullopt when the
/// iteration budget (or deadline) runs out.
std::optional<Trajectory> guided_segment(const World& world, const Model& model,
                                         const Config& q_start,
                                         std::span<const Point2> waypoints, Point2 target,
                                         const PlannerParams& planner, const GuideParams& guide,
                                         Rng& rng, const Deadline& deadline = {},
                                         int* iterations_used = nullptr);

/// Stitches the final multi-goal trajectory: one guided segment per tour edge
/// (closing edge included), each starting exactly where the previous segment
/// ended. A failed segment is retried from the same start with a fresh tree;
/// the retry counter resets on success and aborts the run at the budget.
/// Throws ReconstructFailure.
MultiGoalTrajectory reconstruct(const World& world, const Model& model,
                                std::span<const Point2> targets, std::span<const int> order,
                                const PairTrajectories& guides, const PlannerParams& planner,
                                const GuideParams& guide, Rng& rng,
                                const Deadline& deadline = {});

enum class ViolationKind {
    LegCount,
    JunctionDiscontinuity,
    Collision,
    TargetMiss,
    ReplayDrift,
};

struct Violation {
    ViolationKind kind;
    int leg = -1;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks a multi-goal trajectory against the world and tour: exact junction
/// continuity, collision-free samples, ordered target hits within
/// target_radius, and endpoint drift <= 1e-6 when the stored controls are
/// re-integrated from each leg's start.
ValidationReport validate(const MultiGoalTrajectory& mgt, const World& world, const Model& model,
                          std::span<const Point2> targets, std::span<const int> order,
                          double target_radius);

} // namespace krrf
