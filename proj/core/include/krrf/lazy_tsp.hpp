#pragma once

#include <span>

#include "krrf/guide.hpp"
#include "krrf/tsp.hpp"

namespace krrf {

struct LazyParams {
    int edge_iteration_cap = 30000; // RRT iterations per target-to-target edge
    double edge_goal_bias = 0.1;    // probability of sampling inside the goal region
};

/// Phase timings a caller may want to attribute (seconds).
struct LazyPhaseTimes {
    double edge_planning = 0.0;
    double tsp = 0.0;
    double reconstruct = 0.0;
};

/// LazyTSP comparator producing a continuous multi-goal trajectory. Starts
/// from Euclidean target distances, solves the TSP, verifies tour edges with
/// a goal-biased single-tree RRT, marks unplannable edges infinite and
/// re-solves; once a tour is fully verified, the final trajectory is
/// reconstructed along the verified edge trajectories.
/// Throws BaselineFailure.
MultiGoalTrajectory lazy_plan(const World& world, const Model& model,
                              std::span<const Point2> targets, const PlannerParams& planner,
                              const GuideParams& guide, const LazyParams& lazy, Rng& rng,
                              const Deadline& deadline = {}, LazyPhaseTimes* times = nullptr,
                              Tour* tour_out = nullptr);

} // namespace krrf
